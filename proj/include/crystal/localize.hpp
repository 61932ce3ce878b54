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

/**
 * @file localize.hpp
 * @brief Localization at S(G), the multiplicative set generated by the
 * sigma-images of alpha(g, g^-1), and constructive left Ore witnesses.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/ring.hpp"

namespace crystal {

/// sigma_h(alpha(g, g^-1)).
struct DenomFactor {
    GroupElt h;
    GroupElt g;
    friend auto operator<=>(const DenomFactor&, const DenomFactor&) = default;
    friend bool operator==(const DenomFactor&, const DenomFactor&) = default;
};

/// Element of the denominator monoid: a factor list together with its
/// expanded value.
class Denominator {
public:
    static Denominator unit(const CrystalRing& ring) { return Denominator({}, ring.one()); }

    static Denominator factor(const CrystalRing& ring, const GroupElt& h, const GroupElt& g) {
        const Coeff value = ring.apply_sigma(h, ring.alpha(g, ring.group().inverse(g)));
        return Denominator({{h, g}}, value);
    }

    static Denominator from_factors(const CrystalRing& ring, const std::vector<DenomFactor>& factors) {
        Denominator out = unit(ring);
        for (const auto& f : factors) out = out * factor(ring, f.h, f.g);
        return out;
    }

    /// Recovers a factor list for `value` from factors with h, g in the
    /// window; NonUnitDenominator if none is found.
    static Denominator from_value(const CrystalRing& ring, const Coeff& value, long radius = 3) {
        if (value.is_zero()) raise(ErrorCode::NonUnitDenominator, "zero is not a denominator");
        std::vector<Denominator> candidates;
        for (const auto& h : ring.group().window(radius))
            for (const auto& g : ring.group().window(radius)) {
                if (ring.group().is_identity(g)) continue;
                Denominator d = factor(ring, h, g);
                if (!d.value_.is_constant()) candidates.push_back(std::move(d));
            }
        std::vector<DenomFactor> found;
        if (!search(ring, value, candidates, 0, found))
            raise(ErrorCode::NonUnitDenominator, "(" + value.str() + ") is not a product of sigma-images of alpha(g,g^-1)");
        Denominator out = from_factors(ring, found);
        // A leftover nonzero constant is a unit of A_0 itself.
        return Denominator(out.factors_, value);
    }

    const std::vector<DenomFactor>& factors() const { return factors_; }
    const Coeff& value() const { return value_; }

    friend Denominator operator*(const Denominator& a, const Denominator& b) {
        std::vector<DenomFactor> f = a.factors_;
        f.insert(f.end(), b.factors_.begin(), b.factors_.end());
        std::sort(f.begin(), f.end());
        return Denominator(std::move(f), a.value_ * b.value_);
    }

    /// sigma_k applied to every factor: (h, g) -> (kh, g).
    Denominator shifted(const CrystalRing& ring, const GroupElt& k) const {
        std::vector<DenomFactor> f;
        for (const auto& x : factors_) f.push_back({ring.group().op(k, x.h), x.g});
        std::sort(f.begin(), f.end());
        return Denominator(std::move(f), ring.apply_sigma(k, value_));
    }

    /// Checks that the factor list expands to the stored value.
    bool consistent(const CrystalRing& ring) const {
        return from_factors(ring, factors_).value_ == value_ ||
               (factors_.empty() && value_.is_constant() && !value_.is_zero());
    }

    std::string factors_str() const {
        std::string out;
        for (const auto& f : factors_) {
            if (!out.empty()) out += ";";
            out += f.h.str() + ":" + f.g.str();
        }
        return out.empty() ? "1" : out;
    }

private:
    Denominator(std::vector<DenomFactor> factors, Coeff value) : factors_(std::move(factors)), value_(std::move(value)) {}

    static bool search(const CrystalRing& ring, const Coeff& rest, const std::vector<Denominator>& candidates,
                       std::size_t from, std::vector<DenomFactor>& found) {
        if (rest.is_constant()) return !rest.is_zero();
        for (std::size_t i = from; i < candidates.size(); ++i) {
            std::optional<Coeff> quotient;
            try {
                quotient = exact_div(rest, candidates[i].value_);
            } catch (const Error&) {
                continue;
            }
            found.push_back(candidates[i].factors_.front());
            if (search(ring, *quotient, candidates, i, found)) return true;
            found.pop_back();
        }
        return false;
    }

    std::vector<DenomFactor> factors_;
    Coeff value_;
};

/// num / den, unreduced; equality is by cross-multiplication.
struct Fraction {
    Coeff num;
    Denominator den;
};

namespace detail {

/// gcd-reduced text with monic denominator where the carrier allows it.
inline std::pair<Coeff, Coeff> reduced(const Coeff& num, const Coeff& den) {
    const UniPoly* n = num.as_uni();
    const UniPoly* d = den.as_uni();
    if (n && d) {
        const UniPoly g = poly_gcd(*n, *d);
        UniPoly rn = exact_div(*n, g), rd = exact_div(*d, g);
        const Scalar c = rd.lc().inverse();
        return {Coeff(rn.scaled(c)), Coeff(rd.scaled(c))};
    }
    try {
        return {exact_div(num, den), Coeff::one(den.ring())};
    } catch (const Error&) {
        return {num, den};
    }
}

} // namespace detail

/// Element of S(G)^-1 A: a finite sum of (num/den) u_g.
class LocalizedElement {
public:
    explicit LocalizedElement(RingPtr ring) : ring_(std::move(ring)) {}

    static LocalizedElement localize(const RingElement& x) {
        LocalizedElement out(x.ring());
        for (const auto& [g, c] : x.terms()) out.add_term(g, {c, Denominator::unit(*x.ring())});
        return out;
    }

    static LocalizedElement one(RingPtr ring) { return localize(RingElement::one(std::move(ring))); }

    const RingPtr& ring() const { return ring_; }
    const std::map<GroupElt, Fraction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const GroupElt& g, const Fraction& f) {
        ring_->group().check(g);
        if (f.num.is_zero()) return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, f);
            return;
        }
        Fraction sum{it->second.num * f.den.value() + f.num * it->second.den.value(), it->second.den * f.den};
        if (sum.num.is_zero()) terms_.erase(it);
        else it->second = std::move(sum);
    }

    friend LocalizedElement operator+(const LocalizedElement& x, const LocalizedElement& y) {
        check_same(x, y);
        LocalizedElement out = x;
        for (const auto& [g, f] : y.terms_) out.add_term(g, f);
        return out;
    }

    /// Fractions commute past u_g via sigma_g on numerator and denominator.
    friend LocalizedElement loc_mul(const LocalizedElement& x, const LocalizedElement& y) {
        check_same(x, y);
        const CrystalRing& ring = *x.ring_;
        LocalizedElement out(x.ring_);
        for (const auto& [g, f] : x.terms_)
            for (const auto& [h, k] : y.terms_) {
                Fraction prod{f.num * ring.apply_sigma(g, k.num) * ring.alpha(g, h), f.den * k.den.shifted(ring, g)};
                out.add_term(ring.group().op(g, h), prod);
            }
        return out;
    }
    friend LocalizedElement operator*(const LocalizedElement& x, const LocalizedElement& y) { return loc_mul(x, y); }

    friend bool operator==(const LocalizedElement& x, const LocalizedElement& y) {
        if (x.ring_ != y.ring_) return false;
        std::vector<GroupElt> keys;
        for (const auto& [g, f] : x.terms_) keys.push_back(g);
        for (const auto& [g, f] : y.terms_) keys.push_back(g);
        for (const auto& g : keys) {
            auto a = x.terms_.find(g), b = y.terms_.find(g);
            if (a == x.terms_.end() || b == y.terms_.end()) return false;
            if (!(a->second.num * b->second.den.value() == b->second.num * a->second.den.value())) return false;
        }
        return true;
    }

    /// e.g. "(1/(t + 1))*u[-1]".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [g, f] : terms_) {
            auto [num, den] = detail::reduced(f.num, f.den.value());
            const std::string u = "u[" + g.str() + "]";
            std::string body;
            bool negative = false;
            if (den.is_one()) {
                body = RingElement::homogeneous(ring_, num, g).str();
                if (body.front() == '-') {
                    negative = true;
                    body.erase(0, 1);
                }
            } else {
                std::string n = num.factor_str();
                if (n.front() == '-') {
                    negative = true;
                    n.erase(0, 1);
                }
                body = "(" + n + "/" + den.factor_str() + ")*" + u;
            }
            if (first) out = negative ? "-" + body : body;
            else out += (negative ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

private:
    static void check_same(const LocalizedElement& x, const LocalizedElement& y) {
        if (x.ring_ != y.ring_) raise(ErrorCode::GroupMismatch, "elements of different rings");
    }

    RingPtr ring_;
    std::map<GroupElt, Fraction> terms_;
};

inline LocalizedElement localize(const RingElement& x) { return LocalizedElement::localize(x); }

/// alpha(g^-1, g)^-1 u_{g^-1}, a two-sided inverse of u_g.
inline LocalizedElement u_inverse(const RingPtr& ring, const GroupElt& g) {
    const GroupElt gi = ring->group().inverse(g);
    LocalizedElement out(ring);
    // alpha(g^-1, g) = sigma_e(alpha(g^-1, (g^-1)^-1)).
    out.add_term(gi, {ring->one(), Denominator::factor(*ring, ring->group().identity(), gi)});
    return out;
}

struct OreWitness {
    Denominator s_prime;
    RingElement x_prime;
};

/// Returns (s', x') with s' x = x' s: s' = prod over supp(x) of sigma_g(s)
/// and x'_g = s' a_g / sigma_g(s).
inline OreWitness ore_left_witness(const RingElement& x, const Denominator& s) {
    const CrystalRing& ring = *x.ring();
    Denominator s_prime = Denominator::unit(ring);
    for (const auto& g : x.support()) s_prime = s_prime * s.shifted(ring, g);
    RingElement x_prime(x.ring());
    for (const auto& [g, a] : x.terms())
        x_prime.add_term(g, exact_div(s_prime.value() * a, ring.apply_sigma(g, s.value())));
    return {std::move(s_prime), std::move(x_prime)};
}

/// Checks s' x = x' s by direct multiplication in the ring.
inline bool ore_holds(const RingElement& x, const Denominator& s, const OreWitness& w) {
    const RingPtr& ring = x.ring();
    return RingElement::coefficient(ring, w.s_prime.value()) * x ==
           w.x_prime * RingElement::coefficient(ring, s.value());
}

} // namespace crystal
