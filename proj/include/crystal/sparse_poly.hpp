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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crystal/detail/render.hpp"
#include "crystal/error.hpp"
#include "crystal/scalar.hpp"
#include "crystal/unipoly.hpp"

namespace crystal {

template <class Exponent>
struct exponent_traits;

/// Laurent monomials t^e, e in Z.
template <>
struct exponent_traits<long> {
    static long unit(std::size_t) { return 0; }
    static long add(long a, long b) { return a + b; }
    static bool valid(long, std::size_t) { return true; }
    static std::string text(long e) { return detail::power_text("t", e); }
};

/// Ordinary monomials t_1^e_1 ... t_n^e_n, e_i >= 0.
template <>
struct exponent_traits<std::vector<int>> {
    static std::vector<int> unit(std::size_t arity) { return std::vector<int>(arity, 0); }
    static std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    }
    static bool valid(const std::vector<int>& e, std::size_t arity) {
        if (e.size() != arity) return false;
        for (int x : e)
            if (x < 0) return false;
        return true;
    }
    static std::string text(const std::vector<int>& e) {
        std::string out;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto part = detail::power_text("t_" + std::to_string(i + 1), e[i]);
            if (part.empty()) continue;
            if (!out.empty()) out += "*";
            out += part;
        }
        return out;
    }
};

/// Finitely supported map from monomial exponents to nonzero coefficients.
template <class Exponent>
class SparsePoly {
    using traits = exponent_traits<Exponent>;

public:
    using exponent_type = Exponent;
    using term_map = std::map<Exponent, Scalar>;

    SparsePoly(Field field, std::size_t arity) : field_(field), arity_(arity) {}

    static SparsePoly constant(const Scalar& c, std::size_t arity) {
        SparsePoly out(c.field(), arity);
        out.add_term(traits::unit(arity), c);
        return out;
    }

    static SparsePoly monomial(const Scalar& c, const Exponent& e, std::size_t arity) {
        SparsePoly out(c.field(), arity);
        out.add_term(e, c);
        return out;
    }

    const Field& field() const { return field_; }
    std::size_t arity() const { return arity_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == traits::unit(arity_) && terms_.begin()->second.is_one();
    }
    bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == traits::unit(arity_)); }

    Scalar coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    /// Adds c*x^e in place, dropping cancelled terms.
    void add_term(const Exponent& e, const Scalar& c) {
        if (!traits::valid(e, arity_)) raise(ErrorCode::ArityMismatch, "monomial does not fit the carrier");
        if (!(c.field() == field_)) raise(ErrorCode::MixedField, "coefficient field mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePoly operator-() const {
        SparsePoly out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        check_same(a, b);
        SparsePoly out(a.field_, a.arity_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(traits::add(ea, eb), ca * cb);
        return out;
    }

    SparsePoly scaled(const Scalar& c) const {
        SparsePoly out(field_, arity_);
        for (const auto& [e, x] : terms_) out.add_term(e, x * c);
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.field_ == b.field_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Terms in descending monomial order.
    std::string str() const {
        std::vector<detail::TermText> terms;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            terms.push_back({it->second.signed_text(), traits::text(it->first)});
        return detail::join_terms(terms);
    }

private:
    static void check_same(const SparsePoly& a, const SparsePoly& b) {
        if (!(a.field_ == b.field_)) raise(ErrorCode::MixedField, "polynomials over different fields");
        if (a.arity_ != b.arity_) raise(ErrorCode::ArityMismatch, "polynomials of different arity");
    }

    Field field_;
    std::size_t arity_;
    term_map terms_;
};

/// K[t, t^-1].
using LaurentPoly = SparsePoly<long>;
/// K[t_1, ..., t_n].
using MultiPoly = SparsePoly<std::vector<int>>;

inline long min_exponent(const LaurentPoly& f) { return f.terms().begin()->first; }

/// Multiplies by t^-k so that the constant term is nonzero; returns the
/// polynomial part together with k.
inline std::pair<UniPoly, long> strip_monomial(const LaurentPoly& f) {
    if (f.is_zero()) return {UniPoly(f.field()), 0};
    const long low = min_exponent(f);
    const long high = f.terms().rbegin()->first;
    std::vector<Scalar> coeffs(static_cast<std::size_t>(high - low + 1), Scalar::zero(f.field()));
    for (const auto& [e, c] : f.terms()) coeffs[static_cast<std::size_t>(e - low)] = c;
    return {UniPoly(f.field(), std::move(coeffs)), low};
}

inline LaurentPoly to_laurent(const UniPoly& f, long shift = 0) {
    LaurentPoly out(f.field(), 1);
    for (int k = 0; k <= f.degree(); ++k) out.add_term(k + shift, f.coeffs()[k]);
    return out;
}

inline LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) raise(ErrorCode::DivisionByZero, "Laurent division by zero");
    if (f.is_zero()) return f;
    auto [pf, kf] = strip_monomial(f);
    auto [pg, kg] = strip_monomial(g);
    return to_laurent(exact_div(pf, pg), kf - kg);
}

/// Exact division by lexicographic leading-term reduction.
inline MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero");
    MultiPoly quotient(f.field(), f.arity());
    MultiPoly rest = f;
    const auto& [lead_exp, lead_coeff] = *g.terms().rbegin();
    while (!rest.is_zero()) {
        const auto& [e, c] = *rest.terms().rbegin();
        std::vector<int> diff(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            diff[i] = e[i] - lead_exp[i];
            if (diff[i] < 0)
                raise(ErrorCode::ExactDivisionFailed, "(" + f.str() + ") is not divisible by (" + g.str() + ")");
        }
        auto step = MultiPoly::monomial(c / lead_coeff, diff, f.arity());
        quotient = quotient + step;
        rest = rest - step * g;
    }
    return quotient;
}

} // namespace crystal
