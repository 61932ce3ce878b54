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
 * @file scalar.hpp
 * @brief Exact field elements: Q, F_p and the rational function field Q(q).
 *
 * Every value is kept in a canonical form so that equality of field values
 * is equality of representations:
 *   - rationals are gcd-reduced with a positive denominator (GMP mpq),
 *   - residues lie in [0, p),
 *   - rational functions are gcd-reduced with a monic denominator.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "crystal/detail/qpoly.hpp"
#include "crystal/detail/render.hpp"
#include "crystal/error.hpp"

namespace crystal {

/// Which exact field a Scalar lives in.
class Field {
public:
    enum class Kind { Rational, Prime, RationalFunction };

    static Field rational() { return Field(Kind::Rational, 0); }
    static Field rational_function() { return Field(Kind::RationalFunction, 0); }
    static Field prime(std::uint64_t p) {
        if (!is_prime(p) || p >= (std::uint64_t{1} << 31))
            raise(ErrorCode::ParameterDomain, "F_p requires a prime p < 2^31, got " + std::to_string(p));
        return Field(Kind::Prime, p);
    }

    /// "Q", "Qq" or "Fp:<p>".
    static Field parse(const std::string& text) {
        if (text == "Q") return rational();
        if (text == "Qq") return rational_function();
        if (text.rfind("Fp:", 0) == 0) {
            try {
                return prime(std::stoull(text.substr(3)));
            } catch (const std::logic_error&) {
            }
        }
        raise(ErrorCode::SchemaError, "unknown field '" + text + "'");
    }

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return prime_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    bool is_rational_function() const { return kind_ == Kind::RationalFunction; }

    std::string name() const {
        switch (kind_) {
        case Kind::Rational: return "Q";
        case Kind::RationalFunction: return "Qq";
        case Kind::Prime: return "Fp:" + std::to_string(prime_);
        }
        return "?";
    }

    friend bool operator==(const Field&, const Field&) = default;

    /// Deterministic trial division; the fields used here are tiny.
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    friend class Scalar;
    Field(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}

    Kind kind_;
    std::uint64_t prime_;
};

/// Element of Q(q) as a reduced fraction with monic denominator.
struct RationalFunction {
    detail::QPoly num;
    detail::QPoly den{mpq_class(1)};

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

class Scalar {
public:
    /// Defaults to the rational zero.
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(const Field& field) { return from_int(field, 0); }
    static Scalar one(const Field& field) { return from_int(field, 1); }

    static Scalar from_int(const Field& field, long value) {
        switch (field.kind()) {
        case Field::Kind::Rational: return Scalar(mpq_class(value));
        case Field::Kind::Prime: return residue(field.characteristic(), mpz_class(value));
        case Field::Kind::RationalFunction:
            return Scalar(RationalFunction{detail::QPoly(mpq_class(value))});
        }
        return {};
    }

    /// Embeds a rational number; in F_p the denominator must be invertible.
    static Scalar from_rational(const Field& field, mpq_class value) {
        value.canonicalize();
        switch (field.kind()) {
        case Field::Kind::Rational: return Scalar(value);
        case Field::Kind::Prime: {
            const auto p = field.characteristic();
            Scalar num = residue(p, value.get_num());
            Scalar den = residue(p, value.get_den());
            return num / den;
        }
        case Field::Kind::RationalFunction: return Scalar(RationalFunction{detail::QPoly(value)});
        }
        return {};
    }

    static Scalar rational(const mpq_class& value) {
        mpq_class v = value;
        v.canonicalize();
        return Scalar(v);
    }

    static Scalar residue(std::uint64_t p, const mpz_class& value) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
        return Scalar(Residue{r.get_ui(), p});
    }

    /// The transcendental parameter q of Q(q).
    static Scalar q() { return Scalar(RationalFunction{detail::QPoly::monomial(1, 1)}); }

    static Scalar rational_function(const detail::QPoly& num, const detail::QPoly& den) {
        if (den.is_zero()) raise(ErrorCode::DivisionByZero, "rational function with zero denominator");
        return Scalar(normalize(RationalFunction{num, den}));
    }

    Field field() const {
        switch (value_.index()) {
        case 0: return Field::rational();
        case 1: return Field(Field::Kind::Prime, std::get<Residue>(value_).p);
        default: return Field::rational_function();
        }
    }

    bool is_zero() const {
        switch (value_.index()) {
        case 0: return std::get<mpq_class>(value_) == 0;
        case 1: return std::get<Residue>(value_).value == 0;
        default: return std::get<RationalFunction>(value_).num.is_zero();
        }
    }
    bool is_one() const {
        switch (value_.index()) {
        case 0: return std::get<mpq_class>(value_) == 1;
        case 1: return std::get<Residue>(value_).value == 1;
        default: {
            const auto& f = std::get<RationalFunction>(value_);
            return f.num.is_one() && f.den.is_one();
        }
        }
    }

    /// True when the value is an element of the prime subfield (no q).
    bool is_constant() const {
        if (const auto* f = std::get_if<RationalFunction>(&value_))
            return f->num.is_constant() && f->den.is_one();
        return true;
    }

    const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }
    const RationalFunction* as_rational_function() const { return std::get_if<RationalFunction>(&value_); }
    std::optional<std::uint64_t> as_residue() const {
        if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
        return std::nullopt;
    }

    /// The rational value of a constant Q or Q(q) element.
    std::optional<mpq_class> rational_value() const {
        if (const auto* r = as_rational()) return *r;
        if (const auto* f = as_rational_function(); f && is_constant()) return f->num.coeff(0);
        return std::nullopt;
    }

    Scalar operator-() const {
        switch (value_.index()) {
        case 0: return Scalar(mpq_class(-std::get<mpq_class>(value_)));
        case 1: {
            const auto& r = std::get<Residue>(value_);
            return Scalar(Residue{r.value == 0 ? 0 : r.p - r.value, r.p});
        }
        default: {
            const auto& f = std::get<RationalFunction>(value_);
            return Scalar(RationalFunction{-f.num, f.den});
        }
        }
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        switch (a.value_.index()) {
        case 0: return Scalar(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
        case 1: {
            const auto& x = std::get<Residue>(a.value_);
            const auto& y = std::get<Residue>(b.value_);
            return Scalar(Residue{(x.value + y.value) % x.p, x.p});
        }
        default: return Scalar(add(std::get<RationalFunction>(a.value_), std::get<RationalFunction>(b.value_)));
        }
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        switch (a.value_.index()) {
        case 0: return Scalar(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
        case 1: {
            const auto& x = std::get<Residue>(a.value_);
            const auto& y = std::get<Residue>(b.value_);
            return Scalar(Residue{(x.value * y.value) % x.p, x.p});
        }
        default: return Scalar(mul(std::get<RationalFunction>(a.value_), std::get<RationalFunction>(b.value_)));
        }
    }

    Scalar inverse() const {
        if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
        switch (value_.index()) {
        case 0: return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
        case 1: {
            const auto& r = std::get<Residue>(value_);
            mpz_class inv;
            mpz_class v(static_cast<unsigned long>(r.value));
            mpz_class p(static_cast<unsigned long>(r.p));
            mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            return Scalar(Residue{inv.get_ui(), r.p});
        }
        default: {
            const auto& f = std::get<RationalFunction>(value_);
            return Scalar(normalize(RationalFunction{f.den, f.num}));
        }
        }
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check_same(a, b);
        return a * b.inverse();
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

    /// Splits off a leading sign for term rendering.
    detail::SignedText signed_text() const {
        switch (value_.index()) {
        case 0: return detail::rational_text(std::get<mpq_class>(value_));
        case 1: {
            const auto v = std::get<Residue>(value_).value;
            return {false, std::to_string(v), v == 1};
        }
        default: {
            const auto& f = std::get<RationalFunction>(value_);
            if (!f.den.is_one()) {
                const bool negative = sgn(f.num.lc()) < 0;
                const auto num = negative ? -f.num : f.num;
                auto wrap = [](const detail::QPoly& p) {
                    return p.term_count() > 1 ? "(" + p.str() + ")" : p.str();
                };
                return {negative, wrap(num) + "/" + wrap(f.den), false};
            }
            if (f.num.term_count() <= 1) {
                const bool negative = !f.num.is_zero() && sgn(f.num.lc()) < 0;
                const auto magnitude = negative ? -f.num : f.num;
                return {negative, magnitude.is_zero() ? "0" : magnitude.str(), magnitude.is_one()};
            }
            return {false, "(" + f.num.str() + ")", false};
        }
        }
    }

    /// Canonical text: "a/b", a bare residue, "q^2 - 1" or "(q + 1)/q".
    std::string str() const {
        if (const auto* f = as_rational_function(); f && f->den.is_one()) return f->num.str();
        auto parts = signed_text();
        return (parts.negative ? "-" : "") + parts.magnitude;
    }

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t p;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    explicit Scalar(mpq_class v) : value_(std::move(v)) {}
    explicit Scalar(Residue r) : value_(r) {}
    explicit Scalar(RationalFunction f) : value_(std::move(f)) {}

    static void check_same(const Scalar& a, const Scalar& b) {
        if (a.value_.index() != b.value_.index())
            raise(ErrorCode::MixedField, "mixed fields: " + a.field().name() + " and " + b.field().name());
        if (a.value_.index() == 1 && std::get<Residue>(a.value_).p != std::get<Residue>(b.value_).p)
            raise(ErrorCode::MixedField, "mixed fields: " + a.field().name() + " and " + b.field().name());
    }

    static RationalFunction normalize(RationalFunction f) {
        if (f.num.is_zero()) return {detail::QPoly(), detail::QPoly(mpq_class(1))};
        if (!f.den.is_constant()) {
            auto g = gcd(f.num, f.den);
            if (!g.is_one()) {
                f.num = divmod(f.num, g).first;
                f.den = divmod(f.den, g).first;
            }
        }
        const mpq_class lead = f.den.lc();
        if (lead != 1) {
            f.num = f.num.scaled(1 / lead);
            f.den = f.den.scaled(1 / lead);
        }
        return f;
    }

    static RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
        if (a.den == b.den) {
            if (a.den.is_one()) return {a.num + b.num, a.den};
            return normalize({a.num + b.num, a.den});
        }
        return normalize({a.num * b.den + b.num * a.den, a.den * b.den});
    }

    static RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
        if (a.num.is_zero() || b.num.is_zero()) return {};
        if (a.den.is_one() && b.den.is_one()) return {a.num * b.num, a.den};
        // Cross-cancel so the product stays reduced; both gcds are monic.
        auto g1 = gcd(a.num, b.den);
        auto g2 = gcd(b.num, a.den);
        auto an = g1.is_one() ? a.num : divmod(a.num, g1).first;
        auto bd = g1.is_one() ? b.den : divmod(b.den, g1).first;
        auto bn = g2.is_one() ? b.num : divmod(b.num, g2).first;
        auto ad = g2.is_one() ? a.den : divmod(a.den, g2).first;
        return {an * bn, ad * bd};
    }

    std::variant<mpq_class, Residue, RationalFunction> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

inline Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    }
    return a;
}

inline Scalar scalar_pow(const Scalar& a, long n) {
    if (n < 0) {
        if (a.is_zero()) raise(ErrorCode::DivisionByZero, "negative power of zero");
        return scalar_pow(a.inverse(), -n);
    }
    Scalar result = Scalar::one(a.field());
    Scalar base = a;
    auto e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

} // namespace crystal
