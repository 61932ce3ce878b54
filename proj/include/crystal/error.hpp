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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crystal {

enum class ErrorCode {
    MixedField,
    DivisionByZero,
    ArityMismatch,
    InvalidAutomorphism,
    InvalidGroup,
    GroupMismatch,
    ZeroCocycleValue,
    CocycleUndefined,
    ExactDivisionFailed,
    NonUnitDenominator,
    InvariantViolation,
    ParameterDomain,
    FieldUnsupported,
    DegreeBoundExceeded,
    ParseError,
    SchemaError,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ZeroCocycleValue: return "ZeroCocycleValue";
    case ErrorCode::CocycleUndefined: return "CocycleUndefined";
    case ErrorCode::ExactDivisionFailed: return "ExactDivisionFailed";
    case ErrorCode::NonUnitDenominator: return "NonUnitDenominator";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParameterDomain: return "ParameterDomain";
    case ErrorCode::FieldUnsupported: return "FieldUnsupported";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Syntax error in an expression, polynomial or scalar literal.
class ParseError : public Error {
public:
    ParseError(int line, int column, std::string message,
               std::vector<std::string> expected = {})
        : Error(ErrorCode::ParseError, format(line, column, message, expected)),
          line_(line), column_(column), expected_(std::move(expected)) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string format(int line, int column, const std::string& message,
                              const std::vector<std::string>& expected) {
        std::string out = "line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + message;
        if (!expected.empty()) {
            out += "; expected one of {";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) out += ", ";
                out += expected[i];
            }
            out += "}";
        }
        return out;
    }

    int line_;
    int column_;
    std::vector<std::string> expected_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace crystal
