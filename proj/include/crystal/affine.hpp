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

#include <string>
#include <vector>

#include "crystal/error.hpp"
#include "crystal/scalar.hpp"
#include "crystal/sparse_poly.hpp"
#include "crystal/unipoly.hpp"

namespace crystal {

/// The K-algebra automorphism t -> scale*t + shift of K[t].
///
/// Automorphisms act by substitution, so (phi o psi)(f) = phi(psi(f)) with
/// psi = (c, d) and phi = (a, b) is the substitution t -> c*(a*t + b) + d.
class AffineAuto {
public:
    AffineAuto(Scalar scale, Scalar shift) : scale_(std::move(scale)), shift_(std::move(shift)) {
        if (!(scale_.field() == shift_.field())) raise(ErrorCode::MixedField, "automorphism scale/shift fields differ");
        if (scale_.is_zero()) raise(ErrorCode::InvalidAutomorphism, "automorphism with zero scale");
    }

    static AffineAuto identity(const Field& field) { return {Scalar::one(field), Scalar::zero(field)}; }
    static AffineAuto translation(const Scalar& b) { return {Scalar::one(b.field()), b}; }
    static AffineAuto scaling(const Scalar& a) { return {a, Scalar::zero(a.field())}; }

    const Scalar& scale() const { return scale_; }
    const Scalar& shift() const { return shift_; }
    Field field() const { return scale_.field(); }
    bool is_identity() const { return scale_.is_one() && shift_.is_zero(); }

    /// (*this) o inner: apply `inner` first.
    AffineAuto after(const AffineAuto& inner) const {
        return {inner.scale_ * scale_, inner.scale_ * shift_ + inner.shift_};
    }

    AffineAuto inverse() const {
        Scalar inv = scale_.inverse();
        return {inv, -(shift_ * inv)};
    }

    /// Closed-form n-fold composition: (a^n, b*(a^(n-1) + ... + 1)) for n >= 0.
    AffineAuto power(long n) const {
        const Field f = field();
        if (n == 0) return identity(f);
        if (scale_.is_one()) return {scale_, shift_ * Scalar::from_int(f, n)};
        const Scalar an = scalar_pow(scale_, n);
        // b * (a^n - 1) / (a - 1) covers both signs of n.
        return {an, shift_ * (an - Scalar::one(f)) / (scale_ - Scalar::one(f))};
    }

    friend bool operator==(const AffineAuto&, const AffineAuto&) = default;

    std::string str(const std::string& var = "t") const {
        std::string out = var + " -> ";
        UniPoly image(field(), {shift_, scale_});
        return out + image.str(var);
    }

private:
    Scalar scale_;
    Scalar shift_;
};

/// Substitutes t -> a*t + b.
inline UniPoly apply_auto(const AffineAuto& phi, const UniPoly& f) {
    if (phi.is_identity()) return f;
    return f.compose(UniPoly(f.field(), {phi.shift(), phi.scale()}));
}

/// Laurent carriers admit only pure scalings t -> a*t.
inline LaurentPoly apply_auto(const AffineAuto& phi, const LaurentPoly& f) {
    if (!phi.shift().is_zero())
        raise(ErrorCode::InvalidAutomorphism, "Laurent automorphisms must have zero shift");
    if (phi.is_identity()) return f;
    LaurentPoly out(f.field(), 1);
    for (const auto& [e, c] : f.terms()) out.add_term(e, c * scalar_pow(phi.scale(), e));
    return out;
}

inline AffineAuto auto_power(const AffineAuto& phi, long n) { return phi.power(n); }

/// Variable-wise automorphism of a coefficient ring with `arity` variables.
class Auto {
public:
    Auto() = default;
    explicit Auto(std::vector<AffineAuto> maps) : maps_(std::move(maps)) {}
    Auto(AffineAuto single) : maps_{std::move(single)} {}

    static Auto identity(const Field& field, std::size_t arity) {
        return Auto(std::vector<AffineAuto>(arity, AffineAuto::identity(field)));
    }

    std::size_t arity() const { return maps_.size(); }
    const std::vector<AffineAuto>& maps() const { return maps_; }
    const AffineAuto& operator[](std::size_t i) const { return maps_.at(i); }

    bool is_identity() const {
        for (const auto& m : maps_)
            if (!m.is_identity()) return false;
        return true;
    }

    Auto after(const Auto& inner) const {
        check(inner);
        std::vector<AffineAuto> out;
        for (std::size_t i = 0; i < maps_.size(); ++i) out.push_back(maps_[i].after(inner.maps_[i]));
        return Auto(std::move(out));
    }

    Auto inverse() const {
        std::vector<AffineAuto> out;
        for (const auto& m : maps_) out.push_back(m.inverse());
        return Auto(std::move(out));
    }

    Auto power(long n) const {
        std::vector<AffineAuto> out;
        for (const auto& m : maps_) out.push_back(m.power(n));
        return Auto(std::move(out));
    }

    friend bool operator==(const Auto&, const Auto&) = default;

    std::string str() const {
        if (maps_.size() == 1) return maps_[0].str();
        std::string out = "(";
        for (std::size_t i = 0; i < maps_.size(); ++i) {
            if (i) out += ", ";
            out += maps_[i].str("t_" + std::to_string(i + 1));
        }
        return out + ")";
    }

private:
    void check(const Auto& other) const {
        if (other.maps_.size() != maps_.size()) raise(ErrorCode::ArityMismatch, "automorphisms of different arity");
    }

    std::vector<AffineAuto> maps_;
};

/// Applies each variable's affine map and expands.
inline MultiPoly apply_auto(const Auto& phi, const MultiPoly& f) {
    if (phi.arity() != f.arity()) raise(ErrorCode::ArityMismatch, "automorphism arity does not match polynomial");
    if (phi.is_identity()) return f;
    const std::size_t n = f.arity();
    // images[i][e] = (a_i t_i + b_i)^e as a univariate polynomial
    std::vector<std::vector<UniPoly>> images(n);
    MultiPoly out(f.field(), n);
    for (const auto& [exps, c] : f.terms()) {
        MultiPoly term = MultiPoly::constant(c, n);
        for (std::size_t i = 0; i < n; ++i) {
            auto& cache = images[i];
            if (cache.empty()) cache.push_back(UniPoly::constant(Scalar::one(f.field())));
            const UniPoly linear(f.field(), {phi[i].shift(), phi[i].scale()});
            while (static_cast<int>(cache.size()) <= exps[i]) cache.push_back(cache.back() * linear);
            const UniPoly& power = cache[static_cast<std::size_t>(exps[i])];
            MultiPoly factor(f.field(), n);
            for (int k = 0; k <= power.degree(); ++k) {
                std::vector<int> e(n, 0);
                e[i] = k;
                factor.add_term(e, power.coeffs()[k]);
            }
            term = term * factor;
        }
        out = out + term;
    }
    return out;
}

} // namespace crystal
