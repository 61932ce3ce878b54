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
 * @file coeff.hpp
 * @brief The degree-zero coefficient ring A_0 and its elements.
 *
 * A_0 is one of K[t], K[t, t^-1] or K[t_1, ..., t_n]. `Coeff` is a value
 * type over the three carriers; binary operations require both operands to
 * live in the same carrier.
 */

#include <string>
#include <variant>

#include "crystal/affine.hpp"
#include "crystal/error.hpp"
#include "crystal/scalar.hpp"
#include "crystal/sparse_poly.hpp"
#include "crystal/unipoly.hpp"

namespace crystal {

enum class Carrier { Poly, Laurent, Multi };

/// Descriptor of a coefficient ring: field, carrier kind and arity.
struct CoeffRing {
    Field field = Field::rational();
    Carrier carrier = Carrier::Poly;
    std::size_t arity = 1;

    static CoeffRing poly(Field f) { return {f, Carrier::Poly, 1}; }
    static CoeffRing laurent(Field f) { return {f, Carrier::Laurent, 1}; }
    static CoeffRing multi(Field f, std::size_t n) {
        if (n == 0) raise(ErrorCode::ArityMismatch, "multivariate carrier needs at least one variable");
        return {f, Carrier::Multi, n};
    }

    /// "poly", "laurent" or "multi:<n>".
    std::string carrier_name() const {
        switch (carrier) {
        case Carrier::Poly: return "poly";
        case Carrier::Laurent: return "laurent";
        case Carrier::Multi: return "multi:" + std::to_string(arity);
        }
        return "?";
    }

    static CoeffRing parse(const Field& f, const std::string& carrier) {
        if (carrier == "poly") return poly(f);
        if (carrier == "laurent") return laurent(f);
        if (carrier.rfind("multi:", 0) == 0) {
            try {
                return multi(f, std::stoul(carrier.substr(6)));
            } catch (const std::logic_error&) {
            }
        }
        raise(ErrorCode::SchemaError, "unknown carrier '" + carrier + "'");
    }

    friend bool operator==(const CoeffRing&, const CoeffRing&) = default;
};

class Coeff {
public:
    using Storage = std::variant<UniPoly, LaurentPoly, MultiPoly>;

    Coeff(UniPoly p) : value_(std::move(p)) {}
    Coeff(LaurentPoly p) : value_(std::move(p)) {}
    Coeff(MultiPoly p) : value_(std::move(p)) {}

    static Coeff constant(const CoeffRing& ring, const Scalar& c) {
        if (!(c.field() == ring.field)) raise(ErrorCode::MixedField, "constant in the wrong field");
        switch (ring.carrier) {
        case Carrier::Poly: return UniPoly::constant(c);
        case Carrier::Laurent: return LaurentPoly::constant(c, 1);
        case Carrier::Multi: return MultiPoly::constant(c, ring.arity);
        }
        return UniPoly::constant(c);
    }
    static Coeff zero(const CoeffRing& ring) { return constant(ring, Scalar::zero(ring.field)); }
    static Coeff one(const CoeffRing& ring) { return constant(ring, Scalar::one(ring.field)); }

    /// t (or t_{index+1}) raised to `exponent`; negative exponents only on Laurent carriers.
    static Coeff variable(const CoeffRing& ring, std::size_t index = 0, long exponent = 1) {
        const Scalar one = Scalar::one(ring.field);
        if (index >= ring.arity) raise(ErrorCode::ArityMismatch, "variable index out of range");
        if (exponent < 0 && ring.carrier != Carrier::Laurent)
            raise(ErrorCode::InvalidAutomorphism, "negative powers of t need a Laurent carrier");
        switch (ring.carrier) {
        case Carrier::Poly: return UniPoly::monomial(one, static_cast<std::size_t>(exponent));
        case Carrier::Laurent: return LaurentPoly::monomial(one, exponent, 1);
        case Carrier::Multi: {
            std::vector<int> e(ring.arity, 0);
            e[index] = static_cast<int>(exponent);
            return MultiPoly::monomial(one, e, ring.arity);
        }
        }
        return UniPoly(ring.field);
    }

    CoeffRing ring() const {
        return std::visit(
            [](const auto& p) -> CoeffRing {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, UniPoly>) return CoeffRing::poly(p.field());
                else if constexpr (std::is_same_v<P, LaurentPoly>) return CoeffRing::laurent(p.field());
                else return CoeffRing::multi(p.field(), p.arity());
            },
            value_);
    }
    Field field() const {
        return std::visit([](const auto& p) { return p.field(); }, value_);
    }

    const Storage& storage() const { return value_; }
    const UniPoly* as_uni() const { return std::get_if<UniPoly>(&value_); }
    const LaurentPoly* as_laurent() const { return std::get_if<LaurentPoly>(&value_); }
    const MultiPoly* as_multi() const { return std::get_if<MultiPoly>(&value_); }

    bool is_zero() const {
        return std::visit([](const auto& p) { return p.is_zero(); }, value_);
    }
    bool is_one() const {
        return std::visit([](const auto& p) { return p.is_one(); }, value_);
    }
    bool is_constant() const {
        return std::visit([](const auto& p) { return p.is_constant(); }, value_);
    }

    /// Degree in t for K[t]; highest exponent for Laurent; total degree for K[t_1..t_n].
    int degree() const {
        return std::visit(
            [](const auto& p) -> int {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, UniPoly>) return p.degree();
                else if constexpr (std::is_same_v<P, LaurentPoly>)
                    return p.is_zero() ? -1 : static_cast<int>(p.terms().rbegin()->first);
                else {
                    int best = -1;
                    for (const auto& [e, c] : p.terms()) {
                        int total = 0;
                        for (int x : e) total += x;
                        best = std::max(best, total);
                    }
                    return best;
                }
            },
            value_);
    }

    Coeff operator-() const {
        return std::visit([](const auto& p) { return Coeff(-p); }, value_);
    }
    friend Coeff operator+(const Coeff& a, const Coeff& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
    }
    friend Coeff operator-(const Coeff& a, const Coeff& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
    }
    friend Coeff operator*(const Coeff& a, const Coeff& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
    }
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    Coeff scaled(const Scalar& c) const {
        return std::visit([&](const auto& p) { return Coeff(p.scaled(c)); }, value_);
    }

    friend bool operator==(const Coeff& a, const Coeff& b) { return a.value_ == b.value_; }

    /// Exact quotient; throws ExactDivisionFailed if b does not divide a.
    friend Coeff exact_div(const Coeff& a, const Coeff& b) {
        return binary(a, b, [](const auto& x, const auto& y) { return exact_div(x, y); });
    }

    Coeff apply(const Auto& phi) const {
        return std::visit(
            [&](const auto& p) -> Coeff {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, MultiPoly>) return apply_auto(phi, p);
                else {
                    if (phi.arity() != 1) raise(ErrorCode::ArityMismatch, "univariate carrier needs a single affine map");
                    return apply_auto(phi[0], p);
                }
            },
            value_);
    }

    std::string str() const {
        return std::visit([](const auto& p) { return p.str(); }, value_);
    }

    /// Text usable as a factor in a product: parenthesized unless a single term.
    std::string factor_str() const {
        std::string s = str();
        const bool single = std::visit(
            [](const auto& p) {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, UniPoly>) {
                    int nonzero = 0;
                    for (const auto& c : p.coeffs()) nonzero += c.is_zero() ? 0 : 1;
                    return nonzero <= 1;
                } else {
                    return p.terms().size() <= 1;
                }
            },
            value_);
        if (single && s.find(" + ") == std::string::npos && s.find(" - ") == std::string::npos) return s;
        return "(" + s + ")";
    }

private:
    template <class Op>
    static Coeff binary(const Coeff& a, const Coeff& b, Op op) {
        if (a.value_.index() != b.value_.index())
            raise(ErrorCode::ArityMismatch, "coefficients from different carriers");
        return std::visit(
            [&](const auto& x) -> Coeff {
                using P = std::decay_t<decltype(x)>;
                return Coeff(op(x, std::get<P>(b.value_)));
            },
            a.value_);
    }

    Storage value_;
};

} // namespace crystal
