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
 * @file document.hpp
 * @brief Ring description documents, schema "cgr-1".
 *
 *     {
 *       "schema":  "cgr-1",
 *       "name":    "weyl",
 *       "field":   "Q" | "Fp:<p>" | "Qq",
 *       "carrier": "poly" | "laurent" | "multi:<n>",
 *       "group":   "Z" | "Z^<n>" | "C<n>" | {"table": [[0, 1], [1, 0]]},
 *       "sigma":   [[["<scale>", "<shift>"], ...], ...],
 *       "alpha":   {"kind": "trivial"}
 *                | {"kind": "gwa", "a": ["<poly>", ...]}
 *                | {"kind": "general", "p": "<poly>"}
 *                | {"kind": "table", "entries": [{"g": "1", "h": "2", "value": "<poly>"}, ...]},
 *       "aliases": {"x": "u[1]", "y": "u[-1]"}
 *     }
 *
 * sigma lists one automorphism per generator of Z^n or per element of a
 * finite group; each automorphism is one [scale, shift] pair per variable.
 * Polynomials use the canonical text form.
 */

#include <map>
#include <string>

#include "json.hpp"

#include "crystal/expr.hpp"
#include "crystal/ring.hpp"

namespace crystal {

struct RingDoc {
    RingPtr ring;
    std::map<std::string, std::string> alias_text;
    std::map<std::string, RingElement> aliases;
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void schema_error(const std::string& what) { raise(ErrorCode::SchemaError, what); }

inline const json& field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::string string_of(const json& j, const char* key) {
    const json& v = field_of(j, key);
    if (!v.is_string()) schema_error(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

inline GradingGroup parse_group(const json& j) {
    if (j.is_object()) {
        const json& t = field_of(j, "table");
        try {
            return GradingGroup::finite_table(t.get<std::vector<std::vector<int>>>());
        } catch (const json::exception&) {
            schema_error("group table must be a square array of integers");
        }
    }
    if (!j.is_string()) schema_error("group must be a string or a table object");
    const std::string s = j.get<std::string>();
    try {
        if (s == "Z") return GradingGroup::free_abelian(1);
        if (s.rfind("Z^", 0) == 0) return GradingGroup::free_abelian(std::stoul(s.substr(2)));
        if (s.rfind("C", 0) == 0) return GradingGroup::cyclic(std::stoul(s.substr(1)));
    } catch (const std::logic_error&) {
    }
    schema_error("unknown group '" + s + "'");
}

inline json group_json(const GradingGroup& g) {
    if (g.kind() == GradingGroup::Kind::FiniteTable) return json{{"table", g.table()}};
    return g.name();
}

inline GroupElt parse_elt(const GradingGroup& group, const std::string& text) {
    std::vector<long> coords;
    std::size_t start = 0;
    try {
        while (true) {
            const auto comma = text.find(',', start);
            std::size_t used = 0;
            const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            coords.push_back(std::stol(part, &used));
            if (part.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(part);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    } catch (const std::logic_error&) {
        raise(ErrorCode::ParseError, "malformed group element '" + text + "'");
    }
    if (group.kind() == GradingGroup::Kind::FiniteTable) {
        GroupElt g(std::move(coords));
        group.check(g);
        return g;
    }
    if (coords.size() != (group.is_finite() ? 1 : group.rank()))
        raise(ErrorCode::GroupMismatch, "'" + text + "' does not fit the group " + group.name());
    return group.make(std::move(coords));
}

inline Auto parse_auto(const json& j, const Field& f) {
    if (!j.is_array()) schema_error("each sigma entry must be an array of [scale, shift] pairs");
    std::vector<AffineAuto> maps;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
            schema_error("sigma pairs must be [\"scale\", \"shift\"]");
        maps.emplace_back(parse_scalar(pair[0].get<std::string>(), f), parse_scalar(pair[1].get<std::string>(), f));
    }
    return Auto(std::move(maps));
}

inline json auto_json(const Auto& phi) {
    json out = json::array();
    for (const auto& m : phi.maps()) out.push_back({m.scale().str(), m.shift().str()});
    return out;
}

} // namespace detail

inline RingDoc load_document(const std::string& text) {
    using detail::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(ErrorCode::SchemaError, std::string("malformed document: ") + e.what());
    }
    if (detail::string_of(j, "schema") != "cgr-1") detail::schema_error("unsupported schema (need \"cgr-1\")");
    const Field field = Field::parse(detail::string_of(j, "field"));
    const CoeffRing coeffs = CoeffRing::parse(field, detail::string_of(j, "carrier"));
    const GradingGroup group = detail::parse_group(detail::field_of(j, "group"));

    const json& sj = detail::field_of(j, "sigma");
    if (!sj.is_array()) detail::schema_error("sigma must be an array");
    std::vector<Auto> autos;
    for (const auto& a : sj) autos.push_back(detail::parse_auto(a, field));
    SigmaMap sigma = group.is_finite() ? SigmaMap::elements(std::move(autos)) : SigmaMap::generators(std::move(autos));

    const json& aj = detail::field_of(j, "alpha");
    const std::string kind = detail::string_of(aj, "kind");
    Cocycle alpha;
    if (kind == "trivial") {
        alpha = TrivialCocycle{};
    } else if (kind == "gwa") {
        const json& list = detail::field_of(aj, "a");
        if (!list.is_array() || list.empty()) detail::schema_error("gwa alpha needs a nonempty list 'a'");
        std::vector<Coeff> as;
        for (const auto& s : list) {
            if (!s.is_string()) detail::schema_error("gwa entries must be polynomial strings");
            as.push_back(parse_coeff(s.get<std::string>(), coeffs));
        }
        if (as.size() == 1) {
            alpha = GwaCocycle{as[0]};
        } else {
            TensorCocycle t;
            for (auto& a : as) t.factors.emplace_back(GwaCocycle{a});
            alpha = std::move(t);
        }
    } else if (kind == "general") {
        alpha = GeneralCocycle{parse_coeff(detail::string_of(aj, "p"), coeffs)};
    } else if (kind == "table") {
        const json& entries = detail::field_of(aj, "entries");
        if (!entries.is_array()) detail::schema_error("table alpha needs an array 'entries'");
        TableCocycle t;
        for (const auto& e : entries) {
            const GroupElt g = detail::parse_elt(group, detail::string_of(e, "g"));
            const GroupElt h = detail::parse_elt(group, detail::string_of(e, "h"));
            t.values.insert_or_assign({g, h}, parse_coeff(detail::string_of(e, "value"), coeffs));
        }
        alpha = std::move(t);
    } else {
        detail::schema_error("unknown alpha kind '" + kind + "'");
    }

    std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    RingDoc doc;
    doc.ring = CrystalRing::create(coeffs, group, std::move(sigma), std::move(alpha), std::move(name));
    if (j.contains("aliases")) {
        const json& al = j.at("aliases");
        if (!al.is_object()) detail::schema_error("aliases must be an object");
        for (const auto& [key, value] : al.items()) {
            if (!value.is_string()) detail::schema_error("alias '" + key + "' must be a string");
            RingElement x = parse_element(value.get<std::string>(), doc.ring);
            if (x.terms().size() != 1) detail::schema_error("alias '" + key + "' is not a homogeneous element");
            doc.alias_text.emplace(key, value.get<std::string>());
            doc.aliases.emplace(key, std::move(x));
        }
    }
    return doc;
}

inline std::string save_document(const RingDoc& doc) {
    using detail::json;
    const CrystalRing& ring = *doc.ring;
    json j;
    j["schema"] = "cgr-1";
    j["name"] = ring.name();
    j["field"] = ring.coeffs().field.name();
    j["carrier"] = ring.coeffs().carrier_name();
    j["group"] = detail::group_json(ring.group());
    json sigma = json::array();
    for (const auto& a : ring.sigma_map().autos()) sigma.push_back(detail::auto_json(a));
    j["sigma"] = sigma;

    json alpha;
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, TrivialCocycle>) {
                alpha["kind"] = "trivial";
            } else if constexpr (std::is_same_v<C, GwaCocycle>) {
                alpha["kind"] = "gwa";
                alpha["a"] = json::array({c.a.str()});
            } else if constexpr (std::is_same_v<C, GeneralCocycle>) {
                alpha["kind"] = "general";
                alpha["p"] = c.p.str();
            } else if constexpr (std::is_same_v<C, TableCocycle>) {
                alpha["kind"] = "table";
                json entries = json::array();
                for (const auto& [key, value] : c.values)
                    entries.push_back({{"g", key.first.str()}, {"h", key.second.str()}, {"value", value.str()}});
                alpha["entries"] = entries;
            } else {
                alpha["kind"] = "gwa";
                json as = json::array();
                for (const auto& f : c.factors) {
                    const auto* g = std::get_if<GwaCocycle>(&f);
                    if (!g) raise(ErrorCode::SchemaError, "only tensor products of GWA factors have a document form");
                    as.push_back(g->a.str());
                }
                alpha["a"] = as;
            }
        },
        ring.cocycle());
    j["alpha"] = alpha;
    if (!doc.alias_text.empty()) j["aliases"] = doc.alias_text;
    return j.dump(2) + "\n";
}

/// Default aliases: x -> u[1], y -> u[-1] on Z; x_i, y_i on Z^n; g -> u[1]
/// on cyclic groups.
inline RingDoc make_document(const RingPtr& ring) {
    RingDoc doc;
    doc.ring = ring;
    const GradingGroup& group = ring->group();
    if (group.kind() == GradingGroup::Kind::FreeAbelian && group.rank() == 1) {
        doc.alias_text = {{"x", "u[1]"}, {"y", "u[-1]"}};
    } else if (group.kind() == GradingGroup::Kind::FreeAbelian) {
        for (std::size_t i = 0; i < group.rank(); ++i) {
            std::string plus = "u[", minus = "u[";
            for (std::size_t k = 0; k < group.rank(); ++k) {
                plus += (k ? "," : "") + std::string(k == i ? "1" : "0");
                minus += (k ? "," : "") + std::string(k == i ? "-1" : "0");
            }
            doc.alias_text.emplace("x" + std::to_string(i + 1), plus + "]");
            doc.alias_text.emplace("y" + std::to_string(i + 1), minus + "]");
        }
    } else if (group.kind() == GradingGroup::Kind::Cyclic && group.order() > 1) {
        doc.alias_text = {{"g", "u[1]"}};
    }
    for (const auto& [k, v] : doc.alias_text) doc.aliases.emplace(k, parse_element(v, ring));
    return doc;
}

} // namespace crystal
