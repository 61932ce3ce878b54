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
 * @file analysis.hpp
 * @brief Simplicity tests for degree-one GWAs, subalgebra membership up to a
 * degree bound, and the Class 1/2/3 classification.
 *
 * Simplicity avoids factorization: an irreducible factor shared by a and
 * sigma^i(a) exists iff gcd(a, sigma^i(a)) is nonconstant iff i is a root
 * of a resultant in an auxiliary variable.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal/resultant.hpp"
#include "crystal/ring.hpp"
#include "crystal/verify.hpp"

namespace crystal {

struct SimplicityVerdict {
    enum class Kind { Simple, NotSimple, Inconclusive };
    Kind verdict = Kind::Inconclusive;
    /// Nonzero shift (or power of lambda) i with gcd(a, sigma^i(a)) nonconstant.
    std::optional<long> witness;
    std::optional<UniPoly> shared_factor;
    std::string note;

    bool simple() const { return verdict == Kind::Simple; }
    bool not_simple() const { return verdict == Kind::NotSimple; }

    /// "SIMPLE", "NOT SIMPLE (witness i=3)", "INCONCLUSIVE (...)".
    std::string str() const {
        switch (verdict) {
        case Kind::Simple: return "SIMPLE";
        case Kind::NotSimple:
            if (witness) return "NOT SIMPLE (witness i=" + std::to_string(*witness) + ")";
            return "NOT SIMPLE (" + note + ")";
        case Kind::Inconclusive: return "INCONCLUSIVE (" + note + ")";
        }
        return "?";
    }
};

namespace detail {

inline SimplicityVerdict not_simple(std::string note) {
    return {SimplicityVerdict::Kind::NotSimple, std::nullopt, std::nullopt, std::move(note)};
}

inline SimplicityVerdict inconclusive(std::string note) {
    return {SimplicityVerdict::Kind::Inconclusive, std::nullopt, std::nullopt, std::move(note)};
}

inline std::optional<SimplicityVerdict> shared_factor_witness(const UniPoly& a, const UniPoly& image, long i) {
    const UniPoly g = poly_gcd(a, image);
    if (g.degree() < 1) return std::nullopt;
    return SimplicityVerdict{SimplicityVerdict::Kind::NotSimple, i, g, ""};
}

/// Orders candidate exponents by |i|, positive first.
inline void sort_candidates(std::vector<long>& c) {
    std::sort(c.begin(), c.end(), [](long x, long y) {
        if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
        return x > y;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

} // namespace detail

/// Simplicity of K[t](sigma: t -> t - 1, a) over Q.
inline SimplicityVerdict simple_shift(const UniPoly& a) {
    if (a.is_zero()) raise(ErrorCode::ParameterDomain, "a must be nonzero");
    if (a.field().is_prime())
        return detail::not_simple("characteristic " + std::to_string(a.field().characteristic()) + " > 0");
    if (!a.field().is_rational()) raise(ErrorCode::FieldUnsupported, "the shift criterion needs a polynomial over Q");
    if (a.degree() < 1) return {SimplicityVerdict::Kind::Simple, std::nullopt, std::nullopt, ""};
    const UniPoly r = resultant(BiPoly::lift(a), BiPoly::shifted(a));
    std::vector<long> candidates;
    for (const auto& root : rational_roots(r))
        if (root != 0 && root.get_den() == 1 && root.get_num().fits_slong_p()) candidates.push_back(root.get_num().get_si());
    detail::sort_candidates(candidates);
    const Field f = a.field();
    for (long i : candidates) {
        const UniPoly image = a.compose(UniPoly(f, {Scalar::from_int(f, i), Scalar::one(f)}));
        if (auto w = detail::shared_factor_witness(a, image, i)) return *w;
    }
    return {SimplicityVerdict::Kind::Simple, std::nullopt, std::nullopt, ""};
}

namespace detail {

inline bool root_of_unity(const Scalar& lambda) {
    if (lambda.field().is_prime()) return true;
    auto r = lambda.rational_value();
    if (!r) return false;
    return *r == 1 || *r == -1;
}

/// Multiplicity of the prime `ell` in a nonzero rational.
inline long valuation(const mpq_class& x, const mpz_class& ell) {
    auto count = [&](mpz_class n) {
        return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
    };
    return count(abs(x.get_num())) - count(x.get_den());
}

/// Bound on |i| for roots lambda^i of r: at a prime ell with v(lambda) != 0,
/// the Newton polygon of r forces |i v(lambda)| <= max v(c_j) - min v(c_j).
inline long rational_exponent_bound(const UniPoly& r, const mpq_class& lambda) {
    std::map<mpz_class, int> primes;
    factor_into(abs(lambda.get_num()), primes);
    factor_into(lambda.get_den(), primes);
    long bound = -1;
    for (const auto& entry : primes) {
        const mpz_class& ell = entry.first;
        const long v_l = valuation(lambda, ell);
        if (v_l == 0) continue;
        long lo = 0, hi = 0;
        bool first = true;
        for (const auto& c : r.coeffs()) {
            if (c.is_zero()) continue;
            const long v = valuation(*c.as_rational(), ell);
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
        const long b = (hi - lo) / std::abs(v_l);
        bound = bound < 0 ? b : std::min(bound, b);
    }
    return bound;
}

/// deg and ord of a nonzero rational function in q (numerator minus denominator).
inline std::pair<long, long> q_valuations(const Scalar& x) {
    const auto& f = *x.as_rational_function();
    return {static_cast<long>(f.num.degree()) - static_cast<long>(f.den.degree()),
            static_cast<long>(f.num.order()) - static_cast<long>(f.den.order())};
}

} // namespace detail

/// Simplicity of K[t, t^-1](sigma: t -> lambda t, a).
inline SimplicityVerdict simple_mult(const LaurentPoly& a, const Scalar& lambda) {
    if (lambda.is_zero()) raise(ErrorCode::ParameterDomain, "lambda must be nonzero");
    if (a.is_zero()) raise(ErrorCode::ParameterDomain, "a must be nonzero");
    if (!(a.field() == lambda.field())) raise(ErrorCode::MixedField, "a and lambda over different fields");
    if (detail::root_of_unity(lambda)) return detail::not_simple("lambda = " + lambda.str() + " is a root of unity");
    const UniPoly p = strip_monomial(a).first;
    if (p.degree() < 1) return {SimplicityVerdict::Kind::Simple, std::nullopt, std::nullopt, ""};
    const UniPoly r = resultant(BiPoly::lift(p), BiPoly::scaled(p));
    const Field f = p.field();

    std::vector<long> candidates;
    auto scan = [&](long bound) {
        for (long i = 1; i <= bound; ++i) {
            if (r.eval(scalar_pow(lambda, i)).is_zero()) candidates.push_back(i);
            if (r.eval(scalar_pow(lambda, -i)).is_zero()) candidates.push_back(-i);
        }
    };
    if (auto l = lambda.rational_value(); l && f.is_rational()) {
        scan(detail::rational_exponent_bound(r, *l));
    } else if (f.is_rational_function()) {
        // If lambda^i is a root of r = sum c_j s^j, two terms must tie in
        // q-degree (and in q-order), which bounds |i| by the spread of the
        // c_j's degrees (orders) over the degree (order) of lambda.
        const auto [deg_l, ord_l] = detail::q_valuations(lambda);
        if (deg_l == 0 && ord_l == 0) return detail::inconclusive("no exponent bound for lambda = " + lambda.str());
        long lo_deg = 0, hi_deg = 0, lo_ord = 0, hi_ord = 0;
        bool first = true;
        for (const auto& c : r.coeffs()) {
            if (c.is_zero()) continue;
            const auto [d, o] = detail::q_valuations(c);
            if (first) {
                lo_deg = hi_deg = d;
                lo_ord = hi_ord = o;
                first = false;
            }
            lo_deg = std::min(lo_deg, d), hi_deg = std::max(hi_deg, d);
            lo_ord = std::min(lo_ord, o), hi_ord = std::max(hi_ord, o);
        }
        long bound = -1;
        if (deg_l != 0) bound = (hi_deg - lo_deg) / std::abs(deg_l);
        if (ord_l != 0) {
            const long b = (hi_ord - lo_ord) / std::abs(ord_l);
            bound = bound < 0 ? b : std::min(bound, b);
        }
        scan(bound);
    } else {
        raise(ErrorCode::FieldUnsupported, "lambda must be rational or lie in Q(q)");
    }
    detail::sort_candidates(candidates);
    for (long i : candidates) {
        const UniPoly image = p.compose(UniPoly::monomial(scalar_pow(lambda, i), 1));
        if (auto w = detail::shared_factor_witness(p, image, i)) return *w;
    }
    return {SimplicityVerdict::Kind::Simple, std::nullopt, std::nullopt, ""};
}

/// Chooses the criterion from the ring's automorphism: shifts t -> t + b go
/// to simple_shift after rescaling, scalings of K[t, t^-1] to simple_mult.
inline SimplicityVerdict simplicity(const CrystalRing& ring) {
    const auto* gwa = std::get_if<GwaCocycle>(&ring.cocycle());
    if (!gwa || ring.group().kind() != GradingGroup::Kind::FreeAbelian || ring.group().rank() != 1)
        return detail::inconclusive("simplicity is only decided for degree-one GWAs");
    const AffineAuto& sigma = ring.sigma_map().autos().at(0)[0];
    const Field f = ring.coeffs().field;
    if (sigma.is_identity()) return detail::inconclusive("sigma is the identity");
    try {
        if (const LaurentPoly* a = gwa->a.as_laurent()) return simple_mult(*a, sigma.scale());
        const UniPoly* a = gwa->a.as_uni();
        if (!a) return detail::inconclusive("multivariate carriers are not supported");
        if (sigma.scale().is_one()) {
            // a(b t) turns t -> t + b into t -> t + 1; roots differing by
            // multiples of b become roots differing by integers.
            const UniPoly rescaled = a->compose(UniPoly::monomial(sigma.shift(), 1));
            SimplicityVerdict v = simple_shift(rescaled);
            if (v.witness) v.shared_factor = poly_gcd(*a, apply_auto(sigma.power(*v.witness), *a));
            return v;
        }
        // t - c with c = b/(1 - lambda) spans a proper two-sided ideal, since
        // sigma(t - c) = lambda (t - c) makes it normal.
        const Scalar c = sigma.shift() / (Scalar::one(f) - sigma.scale());
        const UniPoly normal(f, {-c, Scalar::one(f)});
        return detail::not_simple(normal.str() + " is a normal non-unit");
    } catch (const Error& e) {
        if (e.code() == ErrorCode::FieldUnsupported) return detail::inconclusive(e.what());
        throw;
    }
}

struct MembershipVerdict {
    bool member = false;
    int bound = 0;
    std::size_t span_dimension = 0;
    /// Coefficients of generator monomials (exponent vectors) summing to the target.
    std::map<std::vector<int>, Scalar> certificate;
    /// Non-membership re-derived with the generators in reverse order.
    bool confirmed = false;

    std::string certificate_str() const {
        std::vector<detail::TermText> terms;
        for (const auto& [e, c] : certificate) {
            std::string mono;
            for (std::size_t j = 0; j < e.size(); ++j) {
                auto part = detail::power_text("g" + std::to_string(j + 1), e[j]);
                if (part.empty()) continue;
                mono += (mono.empty() ? "" : "*") + part;
            }
            terms.push_back({c.signed_text(), mono});
        }
        return detail::join_terms(terms);
    }

    std::string str() const {
        if (member) return "MEMBER (certificate: " + certificate_str() + ")";
        return "NON-MEMBER up to degree " + std::to_string(bound) + " (span dimension " + std::to_string(span_dimension) + ")";
    }
};

/// Echelon basis of the degree-bounded span generated by products of
/// generators; every basis vector remembers how it was built.
class SpanClosure {
public:
    using Combination = std::map<std::vector<int>, Scalar>;

    SpanClosure(const std::vector<UniPoly>& gens, int bound) : gens_(gens), bound_(bound) {
        if (gens.empty()) raise(ErrorCode::ParameterDomain, "no generators");
        field_ = gens.front().field();
        std::vector<int> zero(gens.size(), 0);
        std::vector<int> pending;
        insert(UniPoly::constant(Scalar::one(field_)), {{zero, Scalar::one(field_)}}, pending);
        // Least fixed point: multiply every new basis vector by every generator.
        while (!pending.empty()) {
            const int d = pending.back();
            pending.pop_back();
            const Row row = basis_.at(d);
            for (std::size_t j = 0; j < gens_.size(); ++j) {
                const UniPoly& g = gens_[j];
                if (g.degree() < 1 || row.value.degree() + g.degree() > bound_) continue;
                Combination combo;
                for (const auto& [e, c] : row.combo) {
                    auto e2 = e;
                    ++e2[j];
                    combo.emplace(std::move(e2), c);
                }
                insert(row.value * g, std::move(combo), pending);
            }
        }
    }

    std::size_t dimension() const { return basis_.size(); }
    int bound() const { return bound_; }

    /// Reduces `target`; returns the combination when it lies in the span.
    std::optional<Combination> express(const UniPoly& target) const {
        UniPoly rest = target;
        Combination combo;
        while (!rest.is_zero()) {
            auto it = basis_.find(rest.degree());
            if (it == basis_.end()) return std::nullopt;
            const Scalar c = rest.lc();
            rest = rest - it->second.value.scaled(c);
            add_into(combo, it->second.combo, c);
        }
        return combo;
    }

    /// Sum of c * prod g_j^e_j.
    UniPoly expand(const Combination& combo) const {
        UniPoly out(field_);
        for (const auto& [e, c] : combo) {
            UniPoly term = UniPoly::constant(c);
            for (std::size_t j = 0; j < e.size(); ++j)
                for (int k = 0; k < e[j]; ++k) term = term * gens_[j];
            out = out + term;
        }
        return out;
    }

private:
    struct Row {
        UniPoly value; // monic
        Combination combo;
    };

    static void add_into(Combination& acc, const Combination& add, const Scalar& scale) {
        for (const auto& [e, c] : add) {
            auto [it, inserted] = acc.emplace(e, c * scale);
            if (!inserted) {
                it->second += c * scale;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }

    void insert(UniPoly v, Combination combo, std::vector<int>& pending) {
        while (!v.is_zero()) {
            auto it = basis_.find(v.degree());
            if (it == basis_.end()) break;
            const Scalar c = v.lc();
            v = v - it->second.value.scaled(c);
            add_into(combo, it->second.combo, -c);
        }
        if (v.is_zero()) return;
        const Scalar inv = v.lc().inverse();
        Combination scaled;
        add_into(scaled, combo, inv);
        const int d = v.degree();
        basis_.emplace(d, Row{v.scaled(inv), std::move(scaled)});
        pending.push_back(d);
    }

    std::vector<UniPoly> gens_;
    int bound_;
    Field field_ = Field::rational();
    std::map<int, Row> basis_;
};

/// Membership of `target` in the subalgebra generated by `gens`, searching
/// the span of generator products of degree at most `bound`.
inline MembershipVerdict subalgebra_member(const UniPoly& target, const std::vector<UniPoly>& gens, int bound) {
    if (target.degree() > bound)
        raise(ErrorCode::DegreeBoundExceeded, "target degree " + std::to_string(target.degree()) + " exceeds bound " +
                                                  std::to_string(bound));
    const SpanClosure span(gens, bound);
    MembershipVerdict out;
    out.bound = bound;
    out.span_dimension = span.dimension();
    if (auto combo = span.express(target)) {
        if (!(span.expand(*combo) == target))
            raise(ErrorCode::InvariantViolation, "membership certificate does not re-expand to the target");
        out.member = true;
        out.certificate = std::move(*combo);
        out.confirmed = true;
        return out;
    }
    std::vector<UniPoly> reversed(gens.rbegin(), gens.rend());
    const SpanClosure second(reversed, bound);
    out.confirmed = !second.express(target) && second.dimension() == span.dimension();
    if (!out.confirmed) raise(ErrorCode::InvariantViolation, "span constructions disagree");
    return out;
}

struct ClassReport {
    std::string window;
    bool supported = true;
    std::string note;
    bool class1 = false;
    bool class2 = true;
    bool class3 = false;
    /// First failing pair/triple, rendered.
    std::string class1_witness;
    std::string class3_witness;
    int bound = 0;

    std::string str() const {
        if (!supported) return "UNSUPPORTED (" + note + ")";
        std::string out = "window " + window + ", degree bound " + std::to_string(bound) + "\n";
        out += std::string("Class 1: ") + (class1 ? "holds" : "fails at " + class1_witness) + "\n";
        out += std::string("Class 2: holds (A_0 is commutative, so every alpha(g,h) is central)") + "\n";
        out += std::string("Class 3: ") + (class3 ? "holds" : "fails at " + class3_witness);
        return out;
    }
};

/// Class 1/2/3 on the window [-radius, radius]^n (everything for finite
/// groups), with membership decided up to the largest alpha degree there.
inline ClassReport classify(const CrystalRing& ring, long radius = 2) {
    ClassReport report;
    report.window = detail::window_text(ring.group(), radius);
    if (ring.coeffs().carrier != Carrier::Poly) {
        report.supported = false;
        report.note = "classification needs the carrier K[t]";
        return report;
    }
    const GradingGroup& group = ring.group();
    const auto window = group.window(radius);
    auto poly = [](const Coeff& c) { return *c.as_uni(); };

    std::vector<UniPoly> inverse_pairs, all_values;
    std::vector<std::pair<GroupElt, GroupElt>> pairs;
    int bound = 0;
    for (const auto& g : window) {
        inverse_pairs.push_back(poly(ring.alpha(g, group.inverse(g))));
        for (const auto& h : window) {
            all_values.push_back(poly(ring.alpha(g, h)));
            pairs.emplace_back(g, h);
            bound = std::max(bound, all_values.back().degree());
        }
    }
    for (const auto& v : inverse_pairs) bound = std::max(bound, v.degree());
    report.bound = bound;

    const SpanClosure s_g(inverse_pairs, bound);
    report.class3 = true;
    for (std::size_t i = 0; i < pairs.size() && report.class3; ++i)
        if (!s_g.express(all_values[i])) {
            report.class3 = false;
            report.class3_witness = "alpha(" + pairs[i].first.str() + ", " + pairs[i].second.str() + ") = " +
                                    all_values[i].str();
        }

    const SpanClosure s_gg(all_values, bound);
    report.class1 = true;
    for (const auto& k : window) {
        for (std::size_t i = 0; i < pairs.size() && report.class1; ++i) {
            const UniPoly target = poly(ring.apply_sigma(k, Coeff(all_values[i])));
            if (!s_gg.express(target)) {
                report.class1 = false;
                report.class1_witness = "sigma_" + k.str() + "(alpha(" + pairs[i].first.str() + ", " +
                                        pairs[i].second.str() + ")) = " + target.str();
            }
        }
        if (!report.class1) break;
    }
    return report;
}

} // namespace crystal
