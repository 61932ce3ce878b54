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
 * @file expr.hpp
 * @brief The noncommutative expression language.
 *
 *     expr   := term (('+' | '-') term)*
 *     term   := ['-'] factor (('*' | '/') factor)*
 *     factor := atom ['^' int]
 *     atom   := number | 't' | 't_' index | 'q' | 'u' '[' int (',' int)* ']'
 *             | ident | '(' expr ')'
 *
 * Products keep their written order. Division is only by nonzero scalars;
 * negative exponents are only allowed on t, t_i and q.
 */

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "crystal/coeff.hpp"
#include "crystal/error.hpp"
#include "crystal/ring.hpp"
#include "crystal/scalar.hpp"

namespace crystal {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Var, Q, U, Ident, Sum, Product, Quotient, Neg, Power };

    Kind kind = Kind::Number;
    mpz_class number;
    std::size_t var_index = 0;
    std::vector<long> coords;
    std::string ident;
    long exponent = 1;
    std::vector<ExprPtr> children;
    int line = 1;
    int column = 1;
};

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        const int l = line, col = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                text += src[i];
                advance();
            }
            out.push_back({Token::Kind::Number, text, l, col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                text += src[i];
                advance();
            }
            out.push_back({Token::Kind::Ident, text, l, col});
            continue;
        }
        Token::Kind kind;
        switch (c) {
        case '+': kind = Token::Kind::Plus; break;
        case '-': kind = Token::Kind::Minus; break;
        case '*': kind = Token::Kind::Star; break;
        case '/': kind = Token::Kind::Slash; break;
        case '^': kind = Token::Kind::Caret; break;
        case '(': kind = Token::Kind::LParen; break;
        case ')': kind = Token::Kind::RParen; break;
        case '[': kind = Token::Kind::LBracket; break;
        case ']': kind = Token::Kind::RBracket; break;
        case ',': kind = Token::Kind::Comma; break;
        default: throw ParseError(l, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), l, col});
        advance();
    }
    out.push_back({Token::Kind::End, "end of input", line, column});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : tokens_(tokenize(src)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'", {"+", "-", "*", "/", "^", "end of input"});
        return e;
    }

private:
    using K = Token::Kind;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    bool accept(K kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        throw ParseError(peek().line, peek().column, message, std::move(expected));
    }
    const Token& expect(K kind, const std::string& what) {
        if (peek().kind != kind) fail("unexpected '" + peek().text + "'", {what});
        return take();
    }

    static std::shared_ptr<Expr> node(Expr::Kind kind, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    ExprPtr expr() {
        const Token& start = peek();
        auto sum = node(Expr::Kind::Sum, start);
        sum->children.push_back(term());
        while (peek().kind == K::Plus || peek().kind == K::Minus) {
            const Token& op = take();
            ExprPtr rhs = term();
            if (op.kind == K::Minus) {
                auto neg = node(Expr::Kind::Neg, op);
                neg->children.push_back(rhs);
                rhs = neg;
            }
            sum->children.push_back(rhs);
        }
        return sum->children.size() == 1 ? sum->children.front() : sum;
    }

    ExprPtr term() {
        const Token& start = peek();
        const bool negative = accept(K::Minus);
        ExprPtr acc = factor();
        while (peek().kind == K::Star || peek().kind == K::Slash) {
            const Token& op = take();
            ExprPtr rhs = factor();
            if (op.kind == K::Star) {
                if (acc->kind == Expr::Kind::Product) {
                    auto copy = std::make_shared<Expr>(*acc);
                    copy->children.push_back(rhs);
                    acc = copy;
                } else {
                    auto prod = node(Expr::Kind::Product, start);
                    prod->children = {acc, rhs};
                    acc = prod;
                }
            } else {
                auto quot = node(Expr::Kind::Quotient, op);
                quot->children = {acc, rhs};
                acc = quot;
            }
        }
        if (!negative) return acc;
        auto neg = node(Expr::Kind::Neg, start);
        neg->children.push_back(acc);
        return neg;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (!accept(K::Caret)) return base;
        const Token& at = peek();
        const bool negative = accept(K::Minus);
        const Token& digits = expect(K::Number, negative ? "integer" : "integer or '-'");
        long value = std::stol(digits.text);
        if (negative) {
            value = -value;
            const bool invertible = base->kind == Expr::Kind::Var || base->kind == Expr::Kind::Q;
            if (!invertible)
                throw ParseError(at.line, at.column,
                                 "negative exponent is only allowed on t, t_i and q (use the inv command for u)",
                                 {"nonnegative integer"});
        }
        auto pow = node(Expr::Kind::Power, at);
        pow->children.push_back(base);
        pow->exponent = value;
        return pow;
    }

    long signed_int() {
        const bool negative = accept(K::Minus);
        const Token& digits = expect(K::Number, "integer");
        const long v = std::stol(digits.text);
        return negative ? -v : v;
    }

    ExprPtr atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case K::Number: {
            take();
            auto e = node(Expr::Kind::Number, tok);
            e->number = mpz_class(tok.text);
            return e;
        }
        case K::LParen: {
            take();
            ExprPtr inner = expr();
            expect(K::RParen, ")");
            return inner;
        }
        case K::Ident: {
            take();
            if (tok.text == "t") return node(Expr::Kind::Var, tok);
            if (tok.text.size() > 2 && tok.text.rfind("t_", 0) == 0 &&
                tok.text.find_first_not_of("0123456789", 2) == std::string::npos) {
                auto e = node(Expr::Kind::Var, tok);
                const long index = std::stol(tok.text.substr(2));
                if (index < 1) throw ParseError(tok.line, tok.column, "variable indices start at 1");
                e->var_index = static_cast<std::size_t>(index - 1);
                return e;
            }
            if (tok.text == "q") return node(Expr::Kind::Q, tok);
            if (tok.text == "u" && peek().kind == K::LBracket) {
                take();
                auto e = node(Expr::Kind::U, tok);
                e->coords.push_back(signed_int());
                while (accept(K::Comma)) e->coords.push_back(signed_int());
                expect(K::RBracket, "]");
                return e;
            }
            auto e = node(Expr::Kind::Ident, tok);
            e->ident = tok.text;
            return e;
        }
        default: fail("unexpected '" + tok.text + "'", {"number", "t", "q", "u[", "identifier", "("});
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline ExprPtr parse_expr(const std::string& src) { return detail::Parser(src).parse(); }

/// Evaluates an expression with an algebra providing number, var, q, u,
/// ident, add, neg, mul, divide and one.
template <class Algebra>
typename Algebra::value_type eval_with(const Expr& e, const Algebra& alg) {
    using V = typename Algebra::value_type;
    switch (e.kind) {
    case Expr::Kind::Number: return alg.number(e.number);
    case Expr::Kind::Var: return alg.var(e, 1);
    case Expr::Kind::Q: return alg.q(e, 1);
    case Expr::Kind::U: return alg.u(e);
    case Expr::Kind::Ident: return alg.ident(e);
    case Expr::Kind::Neg: return alg.neg(eval_with(*e.children[0], alg));
    case Expr::Kind::Sum: {
        V acc = eval_with(*e.children[0], alg);
        for (std::size_t i = 1; i < e.children.size(); ++i) acc = alg.add(acc, eval_with(*e.children[i], alg));
        return acc;
    }
    case Expr::Kind::Product: {
        V acc = eval_with(*e.children[0], alg);
        for (std::size_t i = 1; i < e.children.size(); ++i) acc = alg.mul(acc, eval_with(*e.children[i], alg));
        return acc;
    }
    case Expr::Kind::Quotient: return alg.divide(e, eval_with(*e.children[0], alg), eval_with(*e.children[1], alg));
    case Expr::Kind::Power: {
        const Expr& base = *e.children[0];
        if (base.kind == Expr::Kind::Var) return alg.var(base, e.exponent);
        if (base.kind == Expr::Kind::Q) return alg.q(base, e.exponent);
        const V b = eval_with(base, alg);
        V acc = alg.one();
        for (long i = 0; i < e.exponent; ++i) acc = alg.mul(acc, b);
        return acc;
    }
    }
    return alg.one();
}

namespace detail {

[[noreturn]] inline void fail_at(const Expr& e, const std::string& message, std::vector<std::string> expected = {}) {
    throw ParseError(e.line, e.column, message, std::move(expected));
}

inline Scalar q_power(const Field& field, const Expr& e, long exponent) {
    if (!field.is_rational_function()) raise(ErrorCode::MixedField, "q needs the field Qq (line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ")");
    return scalar_pow(Scalar::q(), exponent);
}

struct ScalarAlgebra {
    using value_type = Scalar;
    Field field;

    Scalar one() const { return Scalar::one(field); }
    Scalar number(const mpz_class& n) const { return Scalar::from_rational(field, mpq_class(n)); }
    Scalar var(const Expr& e, long) const { fail_at(e, "t is not a scalar", {"number", "q", "("}); }
    Scalar q(const Expr& e, long exponent) const { return q_power(field, e, exponent); }
    Scalar u(const Expr& e) const { fail_at(e, "u[...] is not a scalar", {"number", "q", "("}); }
    Scalar ident(const Expr& e) const { fail_at(e, "unknown identifier '" + e.ident + "'", {"number", "q", "("}); }
    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar neg(const Scalar& a) const { return -a; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar divide(const Expr&, const Scalar& a, const Scalar& b) const { return a / b; }
};

struct CoeffAlgebra {
    using value_type = Coeff;
    CoeffRing ring;

    Coeff one() const { return Coeff::one(ring); }
    Coeff number(const mpz_class& n) const { return Coeff::constant(ring, Scalar::from_rational(ring.field, mpq_class(n))); }
    Coeff var(const Expr& e, long exponent) const {
        if (e.var_index >= ring.arity) fail_at(e, "variable index out of range for carrier " + ring.carrier_name());
        if (exponent < 0 && ring.carrier != Carrier::Laurent)
            fail_at(e, "negative powers of t need a Laurent carrier", {"nonnegative integer"});
        return Coeff::variable(ring, e.var_index, exponent);
    }
    Coeff q(const Expr& e, long exponent) const { return Coeff::constant(ring, q_power(ring.field, e, exponent)); }
    Coeff u(const Expr& e) const { fail_at(e, "u[...] is not a coefficient", {"number", "t", "q", "("}); }
    Coeff ident(const Expr& e) const { fail_at(e, "unknown identifier '" + e.ident + "'", {"number", "t", "q", "("}); }
    Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
    Coeff neg(const Coeff& a) const { return -a; }
    Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
    Coeff divide(const Expr& e, const Coeff& a, const Coeff& b) const {
        if (!b.is_constant() || b.is_zero()) fail_at(e, "division is only by nonzero scalars");
        return a.scaled(scalar_of(b).inverse());
    }

    static Scalar scalar_of(const Coeff& c) {
        return std::visit(
            [](const auto& p) -> Scalar {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, UniPoly>) return p.coeff(0);
                else return p.terms().begin()->second;
            },
            c.storage());
    }
};

struct ElementAlgebra {
    using value_type = RingElement;
    RingPtr ring;
    const std::map<std::string, RingElement>* aliases;

    CoeffAlgebra coeffs() const { return {ring->coeffs()}; }
    RingElement lift(const Coeff& c) const { return RingElement::coefficient(ring, c); }

    RingElement one() const { return RingElement::one(ring); }
    RingElement number(const mpz_class& n) const { return lift(coeffs().number(n)); }
    RingElement var(const Expr& e, long exponent) const { return lift(coeffs().var(e, exponent)); }
    RingElement q(const Expr& e, long exponent) const { return lift(coeffs().q(e, exponent)); }
    RingElement u(const Expr& e) const {
        const GradingGroup& group = ring->group();
        const std::size_t want = group.is_finite() ? 1 : group.rank();
        if (e.coords.size() != want)
            raise(ErrorCode::GroupMismatch, "u[...] at line " + std::to_string(e.line) + ", column " +
                                                std::to_string(e.column) + " has " + std::to_string(e.coords.size()) +
                                                " indices; " + group.name() + " needs " + std::to_string(want));
        if (group.kind() == GradingGroup::Kind::FiniteTable && (e.coords[0] < 0 || static_cast<std::size_t>(e.coords[0]) >= group.order()))
            raise(ErrorCode::GroupMismatch, "u[" + std::to_string(e.coords[0]) + "] is not an element of the table group");
        return RingElement::u(ring, group.make(e.coords));
    }
    RingElement ident(const Expr& e) const {
        if (aliases) {
            auto it = aliases->find(e.ident);
            if (it != aliases->end()) return it->second;
        }
        std::vector<std::string> expected{"number", "t", "u["};
        if (aliases)
            for (const auto& [name, value] : *aliases) expected.push_back(name);
        fail_at(e, "unknown identifier '" + e.ident + "'", expected);
    }
    RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
    RingElement neg(const RingElement& a) const { return -a; }
    RingElement mul(const RingElement& a, const RingElement& b) const { return a * b; }
    RingElement divide(const Expr& e, const RingElement& a, const RingElement& b) const {
        const GroupElt id = ring->group().identity();
        if (b.terms().size() != 1 || b.terms().begin()->first != id || !b.terms().begin()->second.is_constant())
            fail_at(e, "division is only by nonzero scalars");
        const Scalar c = CoeffAlgebra::scalar_of(b.terms().begin()->second);
        return a.left_scaled(Coeff::constant(ring->coeffs(), c.inverse()));
    }
};

} // namespace detail

inline Scalar parse_scalar(const std::string& src, const Field& field) {
    return eval_with(*parse_expr(src), detail::ScalarAlgebra{field});
}

inline Coeff parse_coeff(const std::string& src, const CoeffRing& ring) {
    return eval_with(*parse_expr(src), detail::CoeffAlgebra{ring});
}

inline RingElement eval_expr(const Expr& e, const RingPtr& ring, const std::map<std::string, RingElement>* aliases = nullptr) {
    return eval_with(e, detail::ElementAlgebra{ring, aliases});
}

inline RingElement parse_element(const std::string& src, const RingPtr& ring,
                                 const std::map<std::string, RingElement>* aliases = nullptr) {
    return eval_expr(*parse_expr(src), ring, aliases);
}

} // namespace crystal
