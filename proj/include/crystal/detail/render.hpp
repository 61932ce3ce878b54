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

namespace crystal::detail {

/// A coefficient split into a sign and a printable magnitude. Coefficients
/// that have no natural sign (residues, parenthesized fractions) keep
/// `negative == false` and carry their full text.
struct SignedText {
    bool negative = false;
    std::string magnitude;
    bool unit = false; // magnitude is exactly one
};

struct TermText {
    SignedText coeff;
    std::string monomial; // empty for the constant term
};

inline std::string term_body(const TermText& term) {
    if (term.monomial.empty()) return term.coeff.magnitude;
    if (term.coeff.unit) return term.monomial;
    return term.coeff.magnitude + "*" + term.monomial;
}

/// Joins terms as "a - b + c"; an empty list renders as "0".
inline std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& term = terms[i];
        if (i == 0) {
            if (term.coeff.negative) out += "-";
        } else {
            out += term.coeff.negative ? " - " : " + ";
        }
        out += term_body(term);
    }
    return out;
}

/// "t", "t^3", "t^-2"; empty for exponent zero.
inline std::string power_text(const std::string& var, long exponent) {
    if (exponent == 0) return {};
    if (exponent == 1) return var;
    return var + "^" + std::to_string(exponent);
}

} // namespace crystal::detail
