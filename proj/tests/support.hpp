/*
   Copyright 2026 The crystal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Random inputs and independent oracles shared by the unit tests and the
// acceptance runner. Nothing here calls the cocycle machinery of CrystalRing.

#include <map>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

#include "crystal/crystal.hpp"

namespace crystal {

/// Readable gtest failure messages for anything with str().
template <class T>
    requires requires(const T& x) { x.str(); }
void PrintTo(const T& x, std::ostream* os) {
    *os << x.str();
}

} // namespace crystal

namespace crystal::oracle {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Scalar small_scalar(const Field& f, Rng& rng, long range = 3) {
    if (f.is_rational() && uniform(rng, 0, 3) == 0)
        return Scalar::from_rational(f, mpq_class(uniform(rng, -range, range), uniform(rng, 1, 3)));
    return Scalar::from_int(f, uniform(rng, -range, range));
}

inline UniPoly random_poly(const Field& f, Rng& rng, int max_degree = 2, long range = 3) {
    std::vector<Scalar> c;
    const int d = static_cast<int>(uniform(rng, 0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(small_scalar(f, rng, range));
    return UniPoly(f, std::move(c));
}

inline Coeff random_coeff(const CoeffRing& ring, Rng& rng, int max_degree = 2) {
    const Field& f = ring.field;
    switch (ring.carrier) {
    case Carrier::Poly: return random_poly(f, rng, max_degree);
    case Carrier::Laurent: {
        LaurentPoly p(f, 1);
        for (int k = 0; k < 3; ++k) p.add_term(uniform(rng, -max_degree, max_degree), small_scalar(f, rng));
        return p;
    }
    case Carrier::Multi: {
        MultiPoly p(f, ring.arity);
        for (int k = 0; k < 3; ++k) {
            std::vector<int> e(ring.arity);
            for (auto& x : e) x = static_cast<int>(uniform(rng, 0, max_degree));
            p.add_term(e, small_scalar(f, rng));
        }
        return p;
    }
    }
    return UniPoly(f);
}

inline RingElement random_element(const RingPtr& ring, Rng& rng, long radius = 2, int terms = 2) {
    const auto window = ring->group().window(radius);
    RingElement x(ring);
    for (int k = 0; k < terms; ++k) {
        const GroupElt& g = window[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(window.size()) - 1))];
        x.add_term(g, random_coeff(ring->coeffs(), rng));
    }
    return x;
}

/// Degree-one GWA computed from generator words: X f = sigma(f) X,
/// Y f = sigma^-1(f) Y, Y X = a, X Y = sigma(a).
class GeneratorChain {
public:
    GeneratorChain(Auto sigma, Coeff a) : sigma_(std::move(sigma)), a_(std::move(a)) {}

    /// Coefficient c with W_n W_m = c W_{n+m}, W_n = X^n or Y^-n.
    Coeff alpha(long n, long m) const {
        Coeff c = Coeff::one(a_.ring());
        while (n > 0 && m < 0) {  // X^n Y^M = sigma^n(a) X^{n-1} Y^{M-1}
            c = c * a_.apply(sigma_.power(n));
            --n, ++m;
        }
        while (n < 0 && m > 0) {  // Y^N X^m = sigma^{-(N-1)}(a) Y^{N-1} X^{m-1}
            c = c * a_.apply(sigma_.power(n + 1));
            ++n, --m;
        }
        return c;
    }

    /// (f W_n)(g W_m) as (coefficient, degree).
    std::pair<Coeff, long> mul(const Coeff& f, long n, const Coeff& g, long m) const {
        return {f * g.apply(sigma_.power(n)) * alpha(n, m), n + m};
    }

private:
    Auto sigma_;
    Coeff a_;
};

/// The Weyl ring acting on Q[X]: u_n = X^n, u_-n = d^n, t = X d.
class WeylOperators {
public:
    using Poly = std::map<long, mpq_class>;

    static Poly apply(const RingElement& x, const Poly& p) {
        Poly out;
        for (const auto& [k, c] : p)
            for (const auto& [g, f] : x.terms()) {
                const long n = g[0];
                mpq_class coeff = c;
                if (n < 0)
                    for (long j = 0; j < -n; ++j) coeff *= (k - j);
                if (coeff == 0 || k + n < 0) continue;
                const Scalar v = f.as_uni()->eval(Scalar::from_int(Field::rational(), k + n));
                coeff *= *v.as_rational();
                if (coeff != 0) out[k + n] += coeff;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

    /// Compares x and y on X^0 .. X^depth.
    static bool same_action(const RingElement& x, const RingElement& y, long depth = 30) {
        for (long k = 0; k <= depth; ++k)
            if (apply(x, {{k, 1}}) != apply(y, {{k, 1}})) return false;
        return true;
    }

    /// Action of x * y computed as composition of operators.
    static bool product_matches(const RingElement& x, const RingElement& y, const RingElement& xy, long depth = 30) {
        for (long k = 0; k <= depth; ++k)
            if (apply(x, apply(y, {{k, 1}})) != apply(xy, {{k, 1}})) return false;
        return true;
    }
};

/// Split polynomial prod (t - r) over Q.
inline UniPoly from_roots(const std::vector<mpq_class>& roots) {
    const Field f = Field::rational();
    UniPoly p = UniPoly::constant(Scalar::one(f));
    for (const auto& r : roots) p = p * UniPoly(f, {Scalar::rational(-r), Scalar::one(f)});
    return p;
}

/// Some two roots differ by a nonzero integer.
inline bool shift_oracle_not_simple(const std::vector<mpq_class>& roots) {
    for (const auto& r : roots)
        for (const auto& s : roots) {
            const mpq_class d = r - s;
            if (d != 0 && d.get_den() == 1) return true;
        }
    return false;
}

/// Some ratio of two roots is lambda^i for i != 0 (roots nonzero).
inline bool mult_oracle_not_simple(const std::vector<mpq_class>& roots, const mpq_class& lambda) {
    for (const auto& r : roots)
        for (const auto& s : roots) {
            const mpq_class ratio = r / s;
            mpq_class up = lambda, down = 1 / lambda;
            for (int i = 1; i <= 64; ++i, up *= lambda, down /= lambda)
                if (ratio == up || ratio == down) return true;
        }
    return false;
}

inline std::vector<mpq_class> random_roots(Rng& rng, int count, long range, long den_max) {
    std::vector<mpq_class> roots;
    for (int i = 0; i < count; ++i) {
        mpq_class r(uniform(rng, -range, range), uniform(rng, 1, den_max));
        r.canonicalize();
        roots.push_back(r);
    }
    return roots;
}

} // namespace crystal::oracle
