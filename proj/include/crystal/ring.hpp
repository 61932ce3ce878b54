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
 * @file ring.hpp
 * @brief Crystalline graded rings A = sum A_0 u_g and their elements.
 *
 * Multiplication follows (a u_g)(b u_h) = a sigma_g(b) alpha(g,h) u_{gh}.
 * Coefficients are stored on the left.
 */

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "crystal/affine.hpp"
#include "crystal/coeff.hpp"
#include "crystal/error.hpp"
#include "crystal/group.hpp"

namespace crystal {

/// sigma as a group homomorphism G -> Aut(A_0). For Z^n one automorphism
/// per generator; for finite groups one per element, indexed by element.
class SigmaMap {
public:
    static SigmaMap generators(std::vector<Auto> autos) { return SigmaMap(true, std::move(autos)); }
    static SigmaMap elements(std::vector<Auto> autos) { return SigmaMap(false, std::move(autos)); }

    bool by_generators() const { return by_generators_; }
    const std::vector<Auto>& autos() const { return autos_; }

    friend bool operator==(const SigmaMap&, const SigmaMap&) = default;

private:
    SigmaMap(bool by_generators, std::vector<Auto> autos) : by_generators_(by_generators), autos_(std::move(autos)) {}

    bool by_generators_ = true;
    std::vector<Auto> autos_;
};

struct TrivialCocycle {
    friend bool operator==(const TrivialCocycle&, const TrivialCocycle&) = default;
};

/// Degree-one GWA rule on Z driven by the defining element a and the
/// ring's generator automorphism.
struct GwaCocycle {
    Coeff a;
    friend bool operator==(const GwaCocycle&, const GwaCocycle&) = default;
};

/// alpha(n,m) = sigma^n(p) for n, m != 0, m != -n; alpha(n,-n) = p sigma^n(p).
struct GeneralCocycle {
    Coeff p;
    friend bool operator==(const GeneralCocycle&, const GeneralCocycle&) = default;
};

/// Explicit values; pairs involving the identity are implicitly 1.
struct TableCocycle {
    std::map<std::pair<GroupElt, GroupElt>, Coeff> values;
    friend bool operator==(const TableCocycle&, const TableCocycle&) = default;
};

using LineCocycle = std::variant<TrivialCocycle, GwaCocycle, GeneralCocycle>;

/// One line cocycle per coordinate of Z^n; coordinates commute.
struct TensorCocycle {
    std::vector<LineCocycle> factors;
    friend bool operator==(const TensorCocycle&, const TensorCocycle&) = default;
};

using Cocycle = std::variant<TrivialCocycle, GwaCocycle, GeneralCocycle, TableCocycle, TensorCocycle>;

inline std::string cocycle_kind(const Cocycle& c) {
    static const char* names[] = {"trivial", "gwa", "general", "table", "tensor"};
    return names[c.index()];
}

struct ValidationStatus {
    enum class State { Unchecked, Verified, Failed };
    State state = State::Unchecked;
    /// Window description when verified, witness when failed.
    std::string detail;
};

class CrystalRing;
using RingPtr = std::shared_ptr<const CrystalRing>;

class CrystalRing {
    struct Key {};

public:
    /// Validates component consistency and runs cheap structural checks.
    static RingPtr create(CoeffRing coeffs, GradingGroup group, SigmaMap sigma, Cocycle alpha, std::string name = "") {
        auto ring = std::make_shared<CrystalRing>(Key{}, std::move(coeffs), std::move(group), std::move(sigma),
                                                  std::move(alpha), std::move(name));
        ring->check_sigma();
        ring->check_cocycle();
        ring->check_sample();
        return ring;
    }

    CrystalRing(Key, CoeffRing coeffs, GradingGroup group, SigmaMap sigma, Cocycle alpha, std::string name)
        : coeffs_(std::move(coeffs)), group_(std::move(group)), sigma_(std::move(sigma)), alpha_(std::move(alpha)),
          name_(std::move(name)) {}

    const CoeffRing& coeffs() const { return coeffs_; }
    const GradingGroup& group() const { return group_; }
    const SigmaMap& sigma_map() const { return sigma_; }
    const Cocycle& cocycle() const { return alpha_; }
    const std::string& name() const { return name_; }
    const ValidationStatus& status() const { return status_; }

    /// Copy of this ring carrying a new validation status.
    RingPtr with_status(ValidationStatus status) const {
        auto ring = std::make_shared<CrystalRing>(Key{}, coeffs_, group_, sigma_, alpha_, name_);
        ring->status_ = std::move(status);
        return ring;
    }

    Coeff one() const { return Coeff::one(coeffs_); }
    Coeff zero() const { return Coeff::zero(coeffs_); }
    Coeff t(std::size_t index = 0) const { return Coeff::variable(coeffs_, index); }

    Auto sigma(const GroupElt& g) const {
        group_.check(g);
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->sigma.find(g);
        if (it != cache_->sigma.end()) return it->second;
        Auto out = compute_sigma(g);
        cache_->sigma.emplace(g, out);
        return out;
    }

    Coeff apply_sigma(const GroupElt& g, const Coeff& c) const {
        if (c.is_constant()) return c;
        return c.apply(sigma(g));
    }

    /// The cocycle value alpha(g, h); never zero.
    Coeff alpha(const GroupElt& g, const GroupElt& h) const {
        group_.check(g);
        group_.check(h);
        {
            std::lock_guard lock(cache_->mutex);
            auto it = cache_->alpha.find({g, h});
            if (it != cache_->alpha.end()) return it->second;
        }
        Coeff out = compute_alpha(g, h);
        if (out.is_zero())
            raise(ErrorCode::ZeroCocycleValue, "alpha([" + g.str() + "], [" + h.str() + "]) = 0");
        std::lock_guard lock(cache_->mutex);
        cache_->alpha.emplace(std::make_pair(g, h), out);
        return out;
    }

    /// Default verification window: [-4,4]^n for Z^n, everything for finite groups.
    std::vector<GroupElt> window(long radius = 4) const { return group_.window(radius); }

private:
    struct Cache {
        std::mutex mutex;
        std::map<GroupElt, Auto> sigma;
        std::map<std::pair<GroupElt, GroupElt>, Coeff> alpha;
    };

    Auto compute_sigma(const GroupElt& g) const {
        const auto& autos = sigma_.autos();
        if (sigma_.by_generators()) {
            Auto acc = Auto::identity(coeffs_.field, coeffs_.arity);
            for (std::size_t i = 0; i < autos.size(); ++i)
                if (g[i] != 0) acc = acc.after(autos[i].power(g[i]));
            return acc;
        }
        return autos.at(static_cast<std::size_t>(g[0]));
    }

    /// sigma^k of the i-th generator applied to c.
    Coeff generator_power(std::size_t i, long k, const Coeff& c) const {
        if (k == 0 || c.is_constant()) return c;
        return c.apply(sigma_.autos()[i].power(k));
    }

    Coeff line_alpha(const LineCocycle& rule, std::size_t coord, long n, long m) const {
        const Coeff unit = one();
        if (n == 0 || m == 0) return unit;
        if (const auto* gwa = std::get_if<GwaCocycle>(&rule)) {
            if ((n > 0) == (m > 0)) return unit;
            long from = 0, to = -1;
            if (n > 0) {
                const long big_m = -m;
                from = n >= big_m ? n - big_m + 1 : 1;
                to = n;
            } else {
                const long big_n = -n;
                from = -big_n + 1;
                to = big_n >= m ? -big_n + m : 0;
            }
            Coeff out = unit;
            for (long k = from; k <= to; ++k) out *= generator_power(coord, k, gwa->a);
            return out;
        }
        if (const auto* general = std::get_if<GeneralCocycle>(&rule)) {
            Coeff shifted = generator_power(coord, n, general->p);
            return n + m == 0 ? general->p * shifted : shifted;
        }
        return unit;
    }

    Coeff compute_alpha(const GroupElt& g, const GroupElt& h) const {
        if (group_.is_identity(g) || group_.is_identity(h)) return one();
        return std::visit(
            [&](const auto& c) -> Coeff {
                using C = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<C, TrivialCocycle>) {
                    return one();
                } else if constexpr (std::is_same_v<C, GwaCocycle> || std::is_same_v<C, GeneralCocycle>) {
                    return line_alpha(c, 0, g[0], h[0]);
                } else if constexpr (std::is_same_v<C, TableCocycle>) {
                    auto it = c.values.find({g, h});
                    if (it == c.values.end())
                        raise(ErrorCode::CocycleUndefined, "no table entry for ([" + g.str() + "], [" + h.str() + "])");
                    return it->second;
                } else {
                    // Sequential decomposition: the i-th factor is pushed
                    // past the already-merged generators of coordinates < i.
                    Coeff out = one();
                    Auto prefix = Auto::identity(coeffs_.field, coeffs_.arity);
                    for (std::size_t i = 0; i < c.factors.size(); ++i) {
                        Coeff factor = line_alpha(c.factors[i], i, g[i], h[i]);
                        if (!prefix.is_identity() && !factor.is_constant()) factor = factor.apply(prefix);
                        out *= factor;
                        const long s = g[i] + h[i];
                        if (s != 0) prefix = prefix.after(sigma_.autos()[i].power(s));
                    }
                    return out;
                }
            },
            alpha_);
    }

    void check_auto(const Auto& phi) const {
        if (phi.arity() != coeffs_.arity) raise(ErrorCode::ArityMismatch, "automorphism arity does not match the carrier");
        for (const auto& m : phi.maps()) {
            if (!(m.field() == coeffs_.field)) raise(ErrorCode::MixedField, "automorphism over the wrong field");
            if (coeffs_.carrier == Carrier::Laurent && !m.shift().is_zero())
                raise(ErrorCode::InvalidAutomorphism, "Laurent automorphisms must have zero shift");
        }
    }

    void check_sigma() const {
        const auto& autos = sigma_.autos();
        for (const auto& phi : autos) check_auto(phi);
        if (group_.kind() == GradingGroup::Kind::FreeAbelian) {
            if (!sigma_.by_generators() || autos.size() != group_.rank())
                raise(ErrorCode::GroupMismatch, "need one automorphism per generator of " + group_.name());
            for (std::size_t i = 0; i < autos.size(); ++i)
                for (std::size_t j = i + 1; j < autos.size(); ++j)
                    if (!(autos[i].after(autos[j]) == autos[j].after(autos[i])))
                        raise(ErrorCode::InvalidAutomorphism, "generator automorphisms do not commute");
            return;
        }
        if (sigma_.by_generators() || autos.size() != group_.order())
            raise(ErrorCode::GroupMismatch, "need one automorphism per element of " + group_.name());
        if (!autos[static_cast<std::size_t>(group_.identity()[0])].is_identity())
            raise(ErrorCode::InvalidAutomorphism, "sigma of the identity is not the identity");
        for (const auto& g : group_.window(0))
            for (const auto& h : group_.window(0))
                if (!(autos[static_cast<std::size_t>(group_.op(g, h)[0])] ==
                      autos[static_cast<std::size_t>(g[0])].after(autos[static_cast<std::size_t>(h[0])])))
                    raise(ErrorCode::InvalidAutomorphism,
                          "sigma is not a homomorphism at ([" + g.str() + "], [" + h.str() + "])");
    }

    void check_coeff(const Coeff& c, const char* what) const {
        const CoeffRing r = c.ring();
        if (!(r.field == coeffs_.field)) raise(ErrorCode::MixedField, std::string(what) + " lives over the wrong field");
        if (!(r == coeffs_)) raise(ErrorCode::ArityMismatch, std::string(what) + " lives in the wrong carrier");
        if (c.is_zero()) raise(ErrorCode::ZeroCocycleValue, std::string(what) + " is zero");
    }

    void check_line(const LineCocycle& rule) const {
        if (const auto* gwa = std::get_if<GwaCocycle>(&rule)) check_coeff(gwa->a, "GWA element a");
        if (const auto* general = std::get_if<GeneralCocycle>(&rule)) check_coeff(general->p, "general-type p");
    }

    void check_cocycle() const {
        const bool line = group_.kind() == GradingGroup::Kind::FreeAbelian && group_.rank() == 1;
        std::visit(
            [&](const auto& c) {
                using C = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<C, GwaCocycle> || std::is_same_v<C, GeneralCocycle>) {
                    if (!line) raise(ErrorCode::GroupMismatch, cocycle_kind(alpha_) + " cocycle needs the group Z");
                    check_line(c);
                } else if constexpr (std::is_same_v<C, TensorCocycle>) {
                    if (group_.kind() != GradingGroup::Kind::FreeAbelian || group_.rank() != c.factors.size())
                        raise(ErrorCode::GroupMismatch, "tensor cocycle needs one factor per generator of Z^n");
                    for (const auto& f : c.factors) check_line(f);
                } else if constexpr (std::is_same_v<C, TableCocycle>) {
                    for (const auto& [key, value] : c.values) {
                        group_.check(key.first);
                        group_.check(key.second);
                        check_coeff(value, "table entry");
                        if ((group_.is_identity(key.first) || group_.is_identity(key.second)) && !value.is_one())
                            raise(ErrorCode::InvariantViolation, "alpha must be 1 when an argument is the identity");
                    }
                }
            },
            alpha_);
    }

    void check_sample() const {
        const auto sample = group_.window(2);
        const GroupElt e = group_.identity();
        for (const auto& g : sample) {
            if (!alpha(e, g).is_one() || !alpha(g, e).is_one())
                raise(ErrorCode::InvariantViolation, "alpha is not normalized at [" + g.str() + "]");
            alpha(g, group_.inverse(g));
        }
    }

    CoeffRing coeffs_;
    GradingGroup group_;
    SigmaMap sigma_;
    Cocycle alpha_;
    std::string name_;
    ValidationStatus status_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// alpha(g, h) of `ring`.
inline Coeff alpha_value(const CrystalRing& ring, const GroupElt& g, const GroupElt& h) { return ring.alpha(g, h); }

/// A finite sum of a_g u_g with left coefficients.
class RingElement {
public:
    explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}

    static RingElement homogeneous(RingPtr ring, const Coeff& c, const GroupElt& g) {
        RingElement out(std::move(ring));
        out.add_term(g, c);
        return out;
    }
    static RingElement u(RingPtr ring, const GroupElt& g) {
        Coeff c = ring->one();
        return homogeneous(std::move(ring), c, g);
    }
    /// The degree-zero element c u_e.
    static RingElement coefficient(RingPtr ring, const Coeff& c) {
        GroupElt e = ring->group().identity();
        return homogeneous(std::move(ring), c, e);
    }
    static RingElement one(RingPtr ring) { return u(ring, ring->group().identity()); }

    const RingPtr& ring() const { return ring_; }
    const std::map<GroupElt, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::vector<GroupElt> support() const {
        std::vector<GroupElt> out;
        for (const auto& [g, c] : terms_) out.push_back(g);
        return out;
    }

    Coeff coeff(const GroupElt& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? ring_->zero() : it->second;
    }

    /// Adds c u_g in place.
    void add_term(const GroupElt& g, const Coeff& c) {
        ring_->group().check(g);
        if (!(c.ring() == ring_->coeffs())) raise(ErrorCode::ArityMismatch, "coefficient outside the ring's A_0");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RingElement operator-() const {
        RingElement out(ring_);
        for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
        return out;
    }

    friend RingElement operator+(const RingElement& x, const RingElement& y) {
        check_same(x, y);
        RingElement out = x;
        for (const auto& [g, c] : y.terms_) out.add_term(g, c);
        return out;
    }
    friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }
    friend RingElement operator*(const RingElement& x, const RingElement& y);

    /// c * x for a degree-zero coefficient c.
    RingElement left_scaled(const Coeff& c) const {
        RingElement out(ring_);
        for (const auto& [g, a] : terms_) out.add_term(g, c * a);
        return out;
    }

    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.ring_ == y.ring_ && x.terms_ == y.terms_;
    }

    /// Ascending group order, e.g. "(t^2 - t)*u[0] + 2*u[1]".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            std::string body;
            bool negative = false;
            const std::string u = "u[" + g.str() + "]";
            if (c.is_one()) {
                body = u;
            } else if ((-c).is_one()) {
                negative = true;
                body = u;
            } else {
                std::string f = c.factor_str();
                if (f.front() == '-') {
                    negative = true;
                    f.erase(0, 1);
                }
                body = f + "*" + u;
            }
            if (first) out = negative ? "-" + body : body;
            else out += (negative ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

    static void check_same(const RingElement& x, const RingElement& y) {
        if (x.ring_ != y.ring_) raise(ErrorCode::GroupMismatch, "elements of different rings");
    }

private:
    RingPtr ring_;
    std::map<GroupElt, Coeff> terms_;
};

/// (a u_g)(b u_h) = a sigma_g(b) alpha(g,h) u_{gh}, extended bilinearly.
inline RingElement elem_mul(const RingElement& x, const RingElement& y) {
    RingElement::check_same(x, y);
    const CrystalRing& ring = *x.ring();
    RingElement out(x.ring());
    for (const auto& [g, a] : x.terms())
        for (const auto& [h, b] : y.terms())
            out.add_term(ring.group().op(g, h), a * ring.apply_sigma(g, b) * ring.alpha(g, h));
    return out;
}

inline RingElement operator*(const RingElement& x, const RingElement& y) { return elem_mul(x, y); }

} // namespace crystal
