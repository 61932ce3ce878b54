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
 * @file resultant.hpp
 * @brief Resultants, including resultants with a symbolic auxiliary
 * parameter, and exact rational-root extraction.
 *
 * Resultants are Sylvester determinants evaluated with fraction-free
 * Bareiss elimination, which works unchanged over K and over K[aux].
 */

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "crystal/error.hpp"
#include "crystal/scalar.hpp"
#include "crystal/unipoly.hpp"

namespace crystal {

/// Polynomial in t whose coefficients are polynomials in an auxiliary
/// variable, i.e. an element of K[aux][t]. coeffs[j] multiplies t^j.
struct BiPoly {
    std::vector<UniPoly> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Lifts f in K[t] with aux-constant coefficients.
    static BiPoly lift(const UniPoly& f) {
        BiPoly out;
        for (const auto& c : f.coeffs()) out.coeffs.push_back(UniPoly::constant(c));
        return out;
    }

    /// f(t + aux).
    static BiPoly shifted(const UniPoly& f) {
        const Field field = f.field();
        BiPoly out;
        for (int j = 0; j <= f.degree(); ++j) {
            std::vector<Scalar> in_aux(f.degree() - j + 1, Scalar::zero(field));
            mpz_class binom = 1; // C(k, j), starting at k = j
            for (int k = j; k <= f.degree(); ++k) {
                if (k > j) binom = binom * k / (k - j);
                in_aux[k - j] = f.coeffs()[k] * Scalar::from_rational(field, mpq_class(binom));
            }
            out.coeffs.push_back(UniPoly(field, std::move(in_aux)));
        }
        return out;
    }

    /// f(aux * t).
    static BiPoly scaled(const UniPoly& f) {
        BiPoly out;
        for (int k = 0; k <= f.degree(); ++k) out.coeffs.push_back(UniPoly::monomial(f.coeffs()[k], k));
        return out;
    }
};

namespace detail {

inline bool is_zero(const Scalar& x) { return x.is_zero(); }
inline bool is_zero(const UniPoly& x) { return x.is_zero(); }
inline Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }
inline UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }

/// Fraction-free Bareiss determinant over an integral domain with exact
/// division. `one` supplies the multiplicative identity of the domain.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t pivot = k + 1;
            while (pivot < n && is_zero(m[pivot][k])) ++pivot;
            if (pivot == n) return one - one;
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of f (degree m) and g (degree n), entries descending.
template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& f, const std::vector<T>& g, const T& zero) {
    const std::size_t m = f.size() - 1;
    const std::size_t n = g.size() - 1;
    std::vector<std::vector<T>> rows(m + n, std::vector<T>(m + n, zero));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) rows[r][r + k] = f[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) rows[n + r][r + k] = g[n - k];
    return rows;
}

template <class T>
T power(const T& base, int exponent, const T& one) {
    T out = one;
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

template <class T>
T resultant_impl(const std::vector<T>& f, const std::vector<T>& g, const T& one) {
    const T zero = one - one;
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) raise(ErrorCode::DivisionByZero, "resultant of a zero polynomial");
    if (m == 0) return power(f[0], n, one);
    if (n == 0) return power(g[0], m, one);
    return bareiss_determinant(sylvester(f, g, zero), one);
}

} // namespace detail

/// Res_t(f, g) for f, g in K[t].
inline Scalar resultant(const UniPoly& f, const UniPoly& g) {
    if (!(f.field() == g.field())) raise(ErrorCode::MixedField, "resultant across fields");
    return detail::resultant_impl(f.coeffs(), g.coeffs(), Scalar::one(f.field()));
}

/// Res_t(f, g) for f, g in K[aux][t]; the result is a polynomial in aux.
inline UniPoly resultant(const BiPoly& f, const BiPoly& g) {
    if (f.coeffs.empty() || g.coeffs.empty()) raise(ErrorCode::DivisionByZero, "resultant of a zero polynomial");
    const Field field = f.coeffs.back().field();
    return detail::resultant_impl(f.coeffs, g.coeffs, UniPoly::constant(Scalar::one(field)));
}

namespace detail {

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out);

inline mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto step = [&](const mpz_class& v) {
            mpz_class r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    for (unsigned long p = 2; p < 10000 && p * p <= n; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Positive divisors of |n| (n != 0).
inline std::vector<mpz_class> divisors(const mpz_class& n) {
    std::map<mpz_class, int> factors;
    factor_into(abs(n), factors);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t size = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

} // namespace detail

/// The distinct rational roots of f in Q[t], ascending.
inline std::vector<mpq_class> rational_roots(const UniPoly& f) {
    if (!f.field().is_rational()) raise(ErrorCode::FieldUnsupported, "rational roots need a polynomial over Q");
    if (f.is_zero()) raise(ErrorCode::DivisionByZero, "rational roots of the zero polynomial");
    std::vector<mpq_class> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(*c.as_rational());

    std::set<mpq_class> roots;
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;
    if (low > 0) roots.insert(mpq_class(0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
    if (coeffs.size() <= 1) return {roots.begin(), roots.end()};

    mpz_class lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : coeffs) ints.push_back(mpq_class(c * lcm).get_num());

    // Cauchy bound prunes candidates before exact evaluation.
    mpq_class bound = 0;
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) bound = std::max(bound, mpq_class(abs(ints[i]), abs(ints.back())));
    bound += 1;

    auto evaluates_to_zero = [&](const mpq_class& x) {
        mpq_class acc = 0;
        for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * x + *it;
        return acc == 0;
    };

    const auto nums = detail::divisors(ints.front());
    const auto dens = detail::divisors(ints.back());
    for (const auto& p : nums) {
        for (const auto& q : dens) {
            mpq_class candidate(p, q);
            candidate.canonicalize();
            if (candidate > bound) continue;
            if (evaluates_to_zero(candidate)) roots.insert(candidate);
            if (evaluates_to_zero(-candidate)) roots.insert(mpq_class(-candidate));
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace crystal
