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

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "crystal/detail/render.hpp"
#include "crystal/error.hpp"

namespace crystal::detail {

inline SignedText rational_text(const mpq_class& value) {
    SignedText out;
    out.negative = sgn(value) < 0;
    mpq_class magnitude = abs(value);
    out.magnitude = magnitude.get_str();
    out.unit = magnitude == 1;
    return out;
}

/// Dense polynomial in the transcendental q over the rationals. Coefficients
/// are stored by ascending degree without trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const mpq_class& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    explicit QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly monomial(const mpq_class& c, std::size_t degree) {
        std::vector<mpq_class> coeffs(degree + 1);
        coeffs[degree] = c;
        return QPoly(std::move(coeffs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int order() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }
    std::size_t term_count() const {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c != 0; }));
    }
    const mpq_class& lc() const { return coeffs_.back(); }
    mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    QPoly operator-() const {
        QPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }
    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return QPoly(std::move(out));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPoly(std::move(out));
    }
    QPoly scaled(const mpq_class& c) const {
        if (c == 0) return {};
        QPoly out = *this;
        for (auto& x : out.coeffs_) x *= c;
        return out;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division over the rationals.
    friend std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
        if (b.is_zero()) raise(ErrorCode::DivisionByZero, "polynomial division by zero in Q[q]");
        std::vector<mpq_class> rem = a.coeffs_;
        if (a.degree() < b.degree()) return {QPoly(), a};
        std::vector<mpq_class> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
        const mpq_class inv_lc = 1 / b.lc();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            const mpq_class factor = rem[k + b.degree()] * inv_lc;
            quot[k] = factor;
            if (factor == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= factor * b.coeffs_[j];
        }
        return {QPoly(std::move(quot)), QPoly(std::move(rem))};
    }

    QPoly monic() const { return is_zero() ? *this : scaled(1 / lc()); }

    /// Monic gcd via a primitive pseudo-remainder sequence over the integers.
    friend QPoly gcd(const QPoly& a, const QPoly& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        if (a.is_constant() || b.is_constant()) return QPoly(mpq_class(1));
        auto x = primitive(a);
        auto y = primitive(b);
        if (x.size() < y.size()) std::swap(x, y);
        while (!y.empty()) {
            auto r = pseudo_remainder(x, y);
            x = std::move(y);
            y = r.empty() ? r : make_primitive(std::move(r));
        }
        std::vector<mpq_class> out(x.begin(), x.end());
        return QPoly(std::move(out)).monic();
    }

    std::string str(const std::string& var = "q") const {
        std::vector<TermText> terms;
        for (int k = degree(); k >= 0; --k) {
            if (coeffs_[k] == 0) continue;
            terms.push_back({rational_text(coeffs_[k]), power_text(var, k)});
        }
        return join_terms(terms);
    }

private:
    using IntPoly = std::vector<mpz_class>;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    static IntPoly make_primitive(IntPoly p) {
        mpz_class content = 0;
        for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        if (p.back() < 0) content = -content;
        if (content != 1)
            for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        return p;
    }

    static IntPoly primitive(const QPoly& p) {
        mpz_class lcm = 1;
        for (const auto& c : p.coeffs_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        IntPoly out;
        out.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) {
            mpq_class scaled = c * lcm;
            out.push_back(scaled.get_num());
        }
        return make_primitive(std::move(out));
    }

    static IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
        const std::size_t db = b.size() - 1;
        while (!a.empty() && a.size() - 1 >= db) {
            const mpz_class lead = a.back();
            const std::size_t shift = a.size() - 1 - db;
            for (auto& c : a) c *= b.back();
            for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= lead * b[j];
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (!a.empty()) a = make_primitive(std::move(a));
        }
        return a;
    }

    std::vector<mpq_class> coeffs_;
};

} // namespace crystal::detail
