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

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "crystal/detail/render.hpp"
#include "crystal/error.hpp"
#include "crystal/scalar.hpp"

namespace crystal {

/// Dense univariate polynomial K[t] over an exact field. Coefficients are
/// indexed by degree; the leading coefficient is nonzero unless the
/// polynomial is zero.
class UniPoly {
public:
    explicit UniPoly(Field field = Field::rational()) : field_(field) {}

    UniPoly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (!(c.field() == field_))
                raise(ErrorCode::MixedField, "coefficient in " + c.field().name() + " for polynomial over " + field_.name());
        trim();
    }

    /// Ascending integer coefficients, e.g. {-1, 0, 1} is t^2 - 1.
    static UniPoly from_ints(Field field, std::initializer_list<long> ascending) {
        std::vector<Scalar> coeffs;
        for (long c : ascending) coeffs.push_back(Scalar::from_int(field, c));
        return UniPoly(field, std::move(coeffs));
    }

    static UniPoly constant(const Scalar& c) { return UniPoly(c.field(), {c}); }

    static UniPoly monomial(const Scalar& c, std::size_t degree) {
        std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
        coeffs[degree] = c;
        return UniPoly(c.field(), std::move(coeffs));
    }

    static UniPoly variable(Field field) { return monomial(Scalar::one(field), 1); }

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_); }
    const Scalar& lc() const {
        if (coeffs_.empty()) raise(ErrorCode::DivisionByZero, "leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    UniPoly operator-() const {
        UniPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        check_same(a, b);
        std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return UniPoly(a.field_, std::move(out), Trusted{});
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return UniPoly(a.field_, std::move(out), Trusted{});
    }

    UniPoly scaled(const Scalar& c) const {
        if (!(c.field() == field_)) raise(ErrorCode::MixedField, "scalar field mismatch");
        if (c.is_zero()) return UniPoly(field_);
        UniPoly out = *this;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc = Scalar::zero(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// f(g(t)) by Horner's rule.
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

    UniPoly monic() const { return is_zero() ? *this : scaled(lc().inverse()); }

    /// Descending canonical text, e.g. "27*t^3 - 108*t^2 + 141*t - 60".
    std::string str(const std::string& var = "t") const {
        std::vector<detail::TermText> terms;
        for (int k = degree(); k >= 0; --k) {
            if (coeffs_[k].is_zero()) continue;
            terms.push_back({coeffs_[k].signed_text(), detail::power_text(var, k)});
        }
        return detail::join_terms(terms);
    }

private:
    struct Trusted {};
    UniPoly(Field field, std::vector<Scalar> coeffs, Trusted) : field_(field), coeffs_(std::move(coeffs)) { trim(); }

    static void check_same(const UniPoly& a, const UniPoly& b) {
        if (!(a.field_ == b.field_))
            raise(ErrorCode::MixedField, "polynomials over " + a.field_.name() + " and " + b.field_.name());
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Field field_;
    std::vector<Scalar> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };

inline UniPoly poly_arith(const UniPoly& f, const UniPoly& g, PolyOp op) {
    switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
    }
    return f;
}

/// Euclidean division f = q*g + r with deg r < deg g.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (!(f.field() == g.field())) raise(ErrorCode::MixedField, "division across fields");
    const Field field = f.field();
    if (f.degree() < g.degree()) return {UniPoly(field), f};
    std::vector<Scalar> rem = f.coeffs();
    std::vector<Scalar> quot(f.degree() - g.degree() + 1, Scalar::zero(field));
    const Scalar inv_lc = g.lc().inverse();
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        Scalar factor = rem[k + g.degree()] * inv_lc;
        if (factor.is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j) rem[k + j] -= factor * g.coeffs()[j];
        quot[k] = std::move(factor);
    }
    return {UniPoly(field, std::move(quot)), UniPoly(field, std::move(rem))};
}

/// Quotient f/g; throws ExactDivisionFailed when g does not divide f.
inline UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero())
        raise(ErrorCode::ExactDivisionFailed, "(" + f.str() + ") is not divisible by (" + g.str() + ")");
    return q;
}

/// Monic greatest common divisor by the Euclidean algorithm.
inline UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    if (!(f.field() == g.field())) raise(ErrorCode::MixedField, "gcd across fields");
    if (f.is_zero() && g.is_zero()) raise(ErrorCode::DivisionByZero, "gcd(0, 0) is undefined");
    UniPoly a = f.monic();
    UniPoly b = g.monic();
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace crystal
