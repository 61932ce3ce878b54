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
 * @file catalog.hpp
 * @brief Named example rings.
 *
 * | name           | A_0          | sigma            | alpha                          |
 * |----------------|--------------|------------------|--------------------------------|
 * | weyl           | Q[t]         | t -> t - 1       | GWA, a = t + 1                 |
 * | qweyl          | K[t]         | t -> (t - 1)/q   | GWA, a = q t + 1               |
 * | qplane         | K[t]         | t -> lambda t    | GWA, a = t/lambda              |
 * | cyclic-inv     | Q[t]         | t -> t - 1       | GWA, a = m^m prod (t + k/m)    |
 * | usl2           | K[t]         | t -> t - 1       | GWA, a = lambda - t(t - 1)     |
 * | uqsl2          | K[t, t^-1]   | t -> q t         | GWA, a = lambda + c            |
 * | bavula-bekkert | Q[t]         | t -> t - 1       | GWA, a = 27 t(t - 1/3)(t - 2/3)|
 * | class3         | K[t]         | t -> mu^2 t      | GWA, a = -(c - t)(d + t)/mu    |
 * | general-type   | K[t]         | affine           | general type, p                |
 * | rollup         | F_p[t]       | t -> s t, s^n=1  | table over Z/nZ                |
 */

#include <map>
#include <string>
#include <vector>

#include "crystal/expr.hpp"
#include "crystal/gwa.hpp"
#include "crystal/verify.hpp"

namespace crystal {

struct ExampleSpec {
    std::string name;
    std::map<std::string, std::string> params;
};

inline const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"weyl",           "qweyl",  "qplane",       "cyclic-inv", "usl2",
                                                "uqsl2",          "bavula-bekkert", "class3", "general-type", "rollup"};
    return names;
}

namespace detail {

class Params {
public:
    Params(const ExampleSpec& spec, std::vector<std::pair<std::string, std::string>> defaults) : name_(spec.name) {
        for (auto& [k, v] : defaults) values_[k] = v;
        for (const auto& [k, v] : spec.params) {
            if (!values_.count(k) && k != "field")
                raise(ErrorCode::ParameterDomain, "example '" + name_ + "' has no parameter '" + k + "'");
            values_[k] = v;
        }
    }

    const std::string& text(const std::string& key) const { return values_.at(key); }

    /// The field named by "field", else Qq if any parameter mentions q, else Q.
    Field field() const {
        if (auto it = values_.find("field"); it != values_.end()) return Field::parse(it->second);
        for (const auto& [k, v] : values_)
            if (k != "field" && v.find('q') != std::string::npos) return Field::rational_function();
        return Field::rational();
    }

    Scalar scalar(const std::string& key, const Field& f) const { return parse_scalar(text(key), f); }

    long integer(const std::string& key) const {
        try {
            std::size_t used = 0;
            const long v = std::stol(text(key), &used);
            if (used == text(key).size()) return v;
        } catch (const std::logic_error&) {
        }
        raise(ErrorCode::ParameterDomain, "parameter '" + key + "' must be an integer");
    }

    /// "scale" or "scale,shift".
    AffineAuto affine(const std::string& key, const Field& f) const {
        const std::string& s = text(key);
        const auto comma = s.find(',');
        const Scalar scale = parse_scalar(s.substr(0, comma), f);
        const Scalar shift = comma == std::string::npos ? Scalar::zero(f) : parse_scalar(s.substr(comma + 1), f);
        if (scale.is_zero()) raise(ErrorCode::ParameterDomain, "parameter '" + key + "' has zero scale");
        return {scale, shift};
    }

    [[noreturn]] void reject(const std::string& why) const {
        raise(ErrorCode::ParameterDomain, name_ + ": " + why);
    }

private:
    std::string name_;
    std::map<std::string, std::string> values_;
};

inline UniPoly linear(const Scalar& c0, const Scalar& c1) { return UniPoly(c0.field(), {c0, c1}); }

inline GWAData line_gwa(const AffineAuto& sigma, const UniPoly& a) {
    return {CoeffRing::poly(a.field()), {Auto(sigma)}, {Coeff(a)}};
}

} // namespace detail

/// Defining data of the GWA-type examples; ParameterDomain for the others.
inline GWAData example_gwa(const ExampleSpec& spec) {
    using detail::linear;
    using detail::line_gwa;
    const std::string& name = spec.name;
    if (name == "weyl") {
        detail::Params p(spec, {});
        const Field f = p.field();
        const Scalar one = Scalar::one(f);
        return line_gwa(AffineAuto::translation(-one), linear(one, one));
    }
    if (name == "qweyl") {
        detail::Params p(spec, {{"q", "q"}});
        const Field f = p.field();
        const Scalar q = p.scalar("q", f), one = Scalar::one(f);
        if (q.is_zero()) p.reject("q must be nonzero");
        const Scalar qi = q.inverse();
        return line_gwa(AffineAuto(qi, -qi), linear(one, q));
    }
    if (name == "qplane") {
        detail::Params p(spec, {{"lambda", "2"}});
        const Field f = p.field();
        const Scalar l = p.scalar("lambda", f);
        if (l.is_zero()) p.reject("lambda must be nonzero");
        return line_gwa(AffineAuto::scaling(l), linear(Scalar::zero(f), l.inverse()));
    }
    if (name == "cyclic-inv") {
        detail::Params p(spec, {{"m", "2"}});
        const long m = p.integer("m");
        if (m < 1) p.reject("m must be at least 1");
        const Field f = p.field();
        UniPoly a = UniPoly::constant(scalar_pow(Scalar::from_int(f, m), m));
        for (long k = 0; k < m; ++k) a = a * linear(Scalar::from_rational(f, mpq_class(k, m)), Scalar::one(f));
        return line_gwa(AffineAuto::translation(-Scalar::one(f)), a);
    }
    if (name == "usl2") {
        detail::Params p(spec, {{"lambda", "0"}});
        const Field f = p.field();
        const Scalar l = p.scalar("lambda", f), one = Scalar::one(f);
        return line_gwa(AffineAuto::translation(-one), UniPoly(f, {l, one, -one}));
    }
    if (name == "uqsl2") {
        detail::Params p(spec, {{"lambda", "0"}, {"h", "1/2"}, {"q", "q"}});
        const Field f = p.field();
        const Scalar q = p.scalar("q", f), l = p.scalar("lambda", f), h = p.scalar("h", f), one = Scalar::one(f);
        if (q.is_zero()) p.reject("q must be nonzero");
        if ((q * q).is_one()) p.reject("q^2 must differ from 1");
        if (h.is_zero()) p.reject("h must be nonzero");
        const Scalar inv2h = (h + h).inverse();
        // c = (t^2/(q^2 - 1) - t^-2/(q^-2 - 1)) / (2h)
        LaurentPoly a(f, 1);
        a.add_term(0, l);
        a.add_term(2, inv2h / (q * q - one));
        a.add_term(-2, -(inv2h / (scalar_pow(q, -2) - one)));
        return {CoeffRing::laurent(f), {Auto(AffineAuto::scaling(q))}, {Coeff(a)}};
    }
    if (name == "bavula-bekkert") {
        detail::Params p(spec, {});
        const Field f = p.field();
        return line_gwa(AffineAuto::translation(-Scalar::one(f)), UniPoly::from_ints(f, {0, 6, -27, 27}));
    }
    if (name == "class3") {
        detail::Params p(spec, {{"mu", "q"}, {"c", "1"}, {"d", "0"}});
        const Field f = p.field();
        const Scalar mu = p.scalar("mu", f), c = p.scalar("c", f), d = p.scalar("d", f), one = Scalar::one(f);
        if (mu.is_zero()) p.reject("mu must be nonzero");
        const Scalar l = mu * mu;
        if (l.is_one()) p.reject("lambda = mu^2 must differ from 1");
        if (c == d) p.reject("c and d must differ");
        // a = -mu^-1 (c - t)(d + t)
        const UniPoly a = (linear(c, -one) * linear(d, one)).scaled(-mu.inverse());
        return line_gwa(AffineAuto::scaling(l), a);
    }
    raise(ErrorCode::ParameterDomain, "'" + name + "' is not a GWA example");
}

/// Builds a catalog ring and verifies it on the default window (all of the
/// group for finite gradings) before returning it.
inline RingPtr example(const ExampleSpec& spec, long radius = 4) {
    RingPtr ring;
    const std::string& name = spec.name;
    if (name == "general-type") {
        detail::Params p(spec, {{"p", "t^2 + 1"}, {"sigma", "1,-1"}});
        const Field f = p.field();
        const CoeffRing coeffs = CoeffRing::poly(f);
        const Coeff poly = parse_coeff(p.text("p"), coeffs);
        if (poly.is_zero()) p.reject("p must be nonzero");
        ring = CrystalRing::create(coeffs, GradingGroup::free_abelian(1),
                                   SigmaMap::generators({Auto(p.affine("sigma", f))}), GeneralCocycle{poly}, name);
    } else if (name == "rollup") {
        detail::Params p(spec, {{"n", "3"}, {"p", "7"}, {"sigma", "2"}, {"poly", "t^2 + 1"}});
        const long n = p.integer("n"), prime = p.integer("p");
        if (n < 1) p.reject("n must be at least 1");
        if (prime < 2) p.reject("p must be a prime");
        const Field f = Field::prime(static_cast<std::uint64_t>(prime));
        const CoeffRing coeffs = CoeffRing::poly(f);
        const Auto sigma(p.affine("sigma", f));
        if (!sigma.power(n).is_identity()) p.reject("sigma^n must be the identity");
        const Coeff poly = parse_coeff(p.text("poly"), coeffs);
        if (poly.is_zero()) p.reject("poly must be nonzero");
        std::vector<Auto> per_element;
        for (long i = 0; i < n; ++i) per_element.push_back(sigma.power(i));
        TableCocycle table;
        for (long i = 1; i < n; ++i)
            for (long j = 1; j < n; ++j) {
                const Coeff shifted = poly.apply(sigma.power(i));
                table.values.emplace(std::make_pair(GroupElt::of(i), GroupElt::of(j)),
                                     (i + j) % n == 0 ? poly * shifted : shifted);
            }
        ring = CrystalRing::create(coeffs, GradingGroup::cyclic(static_cast<std::size_t>(n)),
                                   SigmaMap::elements(std::move(per_element)), std::move(table), name);
    } else {
        bool known = false;
        for (const auto& n : example_names()) known = known || n == name;
        if (!known) raise(ErrorCode::ParameterDomain, "unknown example '" + name + "'");
        ring = gwa_ring(example_gwa(spec), name);
    }
    const VerifyReport report = verify_ring(*ring, radius);
    if (!report.passed()) raise(ErrorCode::InvariantViolation, name + " failed verification: " + report.str());
    return with_report(*ring, report);
}

inline RingPtr example(const std::string& name, std::map<std::string, std::string> params = {}) {
    return example(ExampleSpec{name, std::move(params)});
}

} // namespace crystal
