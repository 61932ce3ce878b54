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
 * @file gwa.hpp
 * @brief Generalized Weyl algebras D(sigma, a) as crystalline graded rings.
 *
 * With X^- X^+ = a and X^+ X^- = sigma(a), u_n = (X^+)^n and
 * u_{-n} = (X^-)^n, the grading group is Z^n and the cocycle follows the
 * degree-one rules on each coordinate.
 */

#include <string>
#include <vector>

#include "crystal/ring.hpp"

namespace crystal {

struct GWAData {
    CoeffRing coeffs;
    std::vector<Auto> sigma;
    std::vector<Coeff> a;

    std::size_t degree() const { return a.size(); }
};

/// Throws InvariantViolation unless the sigma_i commute, fix a_j for i != j,
/// and every a_i is nonzero.
inline void check_gwa(const GWAData& d) {
    if (d.a.empty() || d.a.size() != d.sigma.size())
        raise(ErrorCode::InvariantViolation, "GWA data needs one automorphism per defining element");
    for (const auto& a : d.a) {
        if (!(a.ring() == d.coeffs)) raise(ErrorCode::ArityMismatch, "defining element outside the coefficient ring");
        if (a.is_zero()) raise(ErrorCode::InvariantViolation, "defining element is zero");
    }
    for (std::size_t i = 0; i < d.sigma.size(); ++i)
        for (std::size_t j = 0; j < d.sigma.size(); ++j) {
            if (i == j) continue;
            if (!(d.sigma[i].after(d.sigma[j]) == d.sigma[j].after(d.sigma[i])))
                raise(ErrorCode::InvariantViolation, "sigma_" + std::to_string(i + 1) + " and sigma_" +
                                                         std::to_string(j + 1) + " do not commute");
            if (!(d.a[j].apply(d.sigma[i]) == d.a[j]))
                raise(ErrorCode::InvariantViolation, "sigma_" + std::to_string(i + 1) + " moves a_" + std::to_string(j + 1));
        }
}

inline RingPtr gwa_ring(const GWAData& d, std::string name = "") {
    check_gwa(d);
    if (d.degree() == 1)
        return CrystalRing::create(d.coeffs, GradingGroup::free_abelian(1), SigmaMap::generators(d.sigma),
                                   GwaCocycle{d.a[0]}, std::move(name));
    TensorCocycle tensor;
    for (const auto& a : d.a) tensor.factors.emplace_back(GwaCocycle{a});
    return CrystalRing::create(d.coeffs, GradingGroup::free_abelian(d.degree()), SigmaMap::generators(d.sigma),
                               std::move(tensor), std::move(name));
}

namespace detail {

/// Re-expresses a polynomial or multivariate coefficient in `arity`
/// variables, moving variable i to i + offset.
inline MultiPoly embed(const Coeff& c, std::size_t arity, std::size_t offset) {
    MultiPoly out(c.field(), arity);
    if (const UniPoly* u = c.as_uni()) {
        for (int k = 0; k <= u->degree(); ++k) {
            std::vector<int> e(arity, 0);
            e[offset] = k;
            out.add_term(e, u->coeffs()[k]);
        }
        return out;
    }
    if (const MultiPoly* m = c.as_multi()) {
        for (const auto& [exps, x] : m->terms()) {
            std::vector<int> e(arity, 0);
            for (std::size_t i = 0; i < exps.size(); ++i) e[offset + i] = exps[i];
            out.add_term(e, x);
        }
        return out;
    }
    raise(ErrorCode::FieldUnsupported, "tensor products of Laurent carriers are not supported");
}

} // namespace detail

/// A (x) B over the multivariate carrier of summed arity.
inline GWAData gwa_tensor(const GWAData& A, const GWAData& B) {
    if (!(A.coeffs.field == B.coeffs.field)) raise(ErrorCode::MixedField, "tensor product of GWAs over different fields");
    if (A.coeffs.carrier == Carrier::Laurent || B.coeffs.carrier == Carrier::Laurent)
        raise(ErrorCode::FieldUnsupported, "tensor products of Laurent carriers are not supported");
    const std::size_t na = A.coeffs.arity, nb = B.coeffs.arity, n = na + nb;
    const Field field = A.coeffs.field;
    GWAData out{CoeffRing::multi(field, n), {}, {}};
    auto extend = [&](const Auto& phi, std::size_t offset) {
        std::vector<AffineAuto> maps(n, AffineAuto::identity(field));
        for (std::size_t i = 0; i < phi.arity(); ++i) maps[offset + i] = phi[i];
        return Auto(std::move(maps));
    };
    for (std::size_t i = 0; i < A.degree(); ++i) {
        out.sigma.push_back(extend(A.sigma[i], 0));
        out.a.emplace_back(detail::embed(A.a[i], n, 0));
    }
    for (std::size_t i = 0; i < B.degree(); ++i) {
        out.sigma.push_back(extend(B.sigma[i], na));
        out.a.emplace_back(detail::embed(B.a[i], n, na));
    }
    check_gwa(out);
    return out;
}

/// The associated graded GWA K[t](id, c t^k) of a degree-one GWA over K[t]
/// with a = c t^k + (lower terms).
inline GWAData assoc_graded(const GWAData& d) {
    if (d.degree() != 1 || d.coeffs.carrier != Carrier::Poly)
        raise(ErrorCode::InvariantViolation, "associated graded ring needs a degree-one GWA over K[t]");
    const UniPoly& a = *d.a[0].as_uni();
    return {d.coeffs, {Auto::identity(d.coeffs.field, 1)}, {Coeff(UniPoly::monomial(a.lc(), static_cast<std::size_t>(a.degree())))}};
}

} // namespace crystal
