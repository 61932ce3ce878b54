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
 * @file cli.hpp
 * @brief The `crystal` command line, runnable in-process.
 *
 * Exit codes: 0 success, 1 usage/parse/IO error, 2 verification failure,
 * 3 not simple, 4 inconclusive.
 */

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crystal/analysis.hpp"
#include "crystal/catalog.hpp"
#include "crystal/document.hpp"
#include "crystal/localize.hpp"
#include "crystal/verify.hpp"

namespace crystal {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitVerifyFailed = 2, kExitNotSimple = 3, kExitInconclusive = 4 };

namespace detail {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

/// One item of a generator list: alpha[g][h], sigma[k]alpha[g][h],
/// diag[R] = {alpha(r,-r) : 1 <= |r| <= R}, sdiag[K][N] =
/// {sigma^k(alpha(n,-n)) : |k| <= K, 1 <= |n| <= N}, or a polynomial.
inline std::vector<UniPoly> resolve_item(const CrystalRing& ring, const std::string& raw) {
    static const std::regex alpha_re(R"(^\s*(?:sigma\[([^\]]+)\])?\s*alpha\[([^\]]+)\]\[([^\]]+)\]\s*$)");
    static const std::regex diag_re(R"(^\s*diag\[\s*(\d+)\s*\]\s*$)");
    static const std::regex sdiag_re(R"(^\s*sdiag\[\s*(\d+)\s*\]\[\s*(\d+)\s*\]\s*$)");
    const GradingGroup& group = ring.group();
    auto as_poly = [](const Coeff& c) {
        const UniPoly* p = c.as_uni();
        if (!p) raise(ErrorCode::FieldUnsupported, "membership needs the carrier K[t]");
        return *p;
    };
    auto diagonal = [&](long k, long n) {
        const GroupElt g = group.make({n});
        return as_poly(ring.apply_sigma(group.make({k}), ring.alpha(g, group.inverse(g))));
    };
    std::smatch m;
    if (std::regex_match(raw, m, alpha_re)) {
        const GroupElt g = parse_elt(group, m[2]), h = parse_elt(group, m[3]);
        Coeff v = ring.alpha(g, h);
        if (m[1].matched) v = ring.apply_sigma(parse_elt(group, m[1]), v);
        return {as_poly(v)};
    }
    if (std::regex_match(raw, m, diag_re) || std::regex_match(raw, m, sdiag_re)) {
        if (group.kind() != GradingGroup::Kind::FreeAbelian || group.rank() != 1)
            raise(ErrorCode::GroupMismatch, "diag[...] needs the group Z");
        const bool shifted = m.size() > 2 && m[2].matched;
        const long k_max = shifted ? std::stol(m[1]) : 0;
        const long n_max = std::stol(shifted ? m[2].str() : m[1].str());
        std::vector<UniPoly> out;
        for (long k = -k_max; k <= k_max; ++k)
            for (long n = -n_max; n <= n_max; ++n)
                if (n != 0) out.push_back(diagonal(k, n));
        return out;
    }
    return {as_poly(parse_coeff(raw, ring.coeffs()))};
}

inline std::vector<UniPoly> resolve_list(const CrystalRing& ring, const std::string& spec) {
    std::vector<UniPoly> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        for (auto& p : resolve_item(ring, item)) out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<DenomFactor> parse_factors(const GradingGroup& group, const std::string& spec) {
    std::vector<DenomFactor> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) raise(ErrorCode::ParseError, "factor '" + item + "' must read h:g");
        out.push_back({parse_elt(group, item.substr(0, colon)), parse_elt(group, item.substr(colon + 1))});
    }
    return out;
}

} // namespace detail

/// Runs one command line; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computation in crystalline graded rings", "crystal"};
    app.require_subcommand(1);

    std::string ring_path, output, expr_text, target, gens, s_spec, elt_text, example_name;
    std::vector<std::string> example_params;
    long window = 4, class_window = 2;
    int bound = -1;

    auto* example_cmd = app.add_subcommand("example", "Write a catalog ring document");
    example_cmd->add_option("name", example_name, "weyl, qweyl, qplane, cyclic-inv, usl2, uqsl2, bavula-bekkert, class3, general-type, rollup")->required();
    example_cmd->add_option("params", example_params, "key=value parameters");
    example_cmd->add_option("-o,--output", output, "Output path (default: stdout)");

    auto* mul_cmd = app.add_subcommand("mul", "Evaluate an expression");
    mul_cmd->add_option("-r,--ring", ring_path)->required();
    mul_cmd->add_option("expr", expr_text)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check the ring identities on a window");
    verify_cmd->add_option("-r,--ring", ring_path)->required();
    verify_cmd->add_option("-w,--window", window, "Radius of the window [-W,W]^n")->check(CLI::NonNegativeNumber);

    auto* simple_cmd = app.add_subcommand("simple", "Decide simplicity of a degree-one GWA");
    simple_cmd->add_option("-r,--ring", ring_path)->required();

    auto* member_cmd = app.add_subcommand("member", "Subalgebra membership up to a degree bound");
    member_cmd->add_option("-r,--ring", ring_path)->required();
    member_cmd->add_option("--target", target)->required();
    member_cmd->add_option("--gens", gens, "';'-separated: alpha[g][h], sigma[k]alpha[g][h], diag[R], sdiag[K][N] or polynomials")->required();
    member_cmd->add_option("--bound", bound, "Degree bound (default: degree of the target)");

    auto* classify_cmd = app.add_subcommand("classify", "Class 1/2/3 report on a window");
    classify_cmd->add_option("-r,--ring", ring_path)->required();
    classify_cmd->add_option("-w,--window", class_window, "Radius of the window")->check(CLI::NonNegativeNumber);

    auto* inv_cmd = app.add_subcommand("inv", "Inverse of u[g] in the localization");
    inv_cmd->add_option("-r,--ring", ring_path)->required();
    inv_cmd->add_option("g", elt_text, "Group element, e.g. 1 or 1,0")->required();

    auto* ore_cmd = app.add_subcommand("ore", "Left Ore witness for an element and a denominator");
    ore_cmd->add_option("-r,--ring", ring_path)->required();
    ore_cmd->add_option("expr", expr_text)->required();
    ore_cmd->add_option("--s", s_spec, "Denominator factors h:g;h:g meaning sigma_h(alpha(g,g^-1))")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        auto load = [&] { return load_document(detail::read_file(ring_path)); };

        if (*example_cmd) {
            ExampleSpec spec{example_name, {}};
            for (const auto& kv : example_params) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) raise(ErrorCode::ParameterDomain, "parameter '" + kv + "' must read key=value");
                spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            const std::string text = save_document(make_document(example(spec)));
            if (output.empty()) out << text;
            else detail::write_file(output, text);
            return kExitOk;
        }
        if (*mul_cmd) {
            const RingDoc doc = load();
            out << parse_element(expr_text, doc.ring, &doc.aliases).str() << "\n";
            return kExitOk;
        }
        if (*verify_cmd) {
            const RingDoc doc = load();
            const VerifyReport identities = verify_ring(*doc.ring, window);
            const VerifyReport torsion = verify_torsionfree(*doc.ring, window);
            out << "identities: " << identities.str() << "\n";
            out << "torsionfree: " << torsion.str() << "\n";
            for (const auto* rep : {&identities, &torsion})
                for (std::size_t i = 0; i < rep->violations.size() && i < 10; ++i)
                    out << "  " << rep->violations[i].str() << "\n";
            return identities.passed() && torsion.passed() ? kExitOk : kExitVerifyFailed;
        }
        if (*simple_cmd) {
            const RingDoc doc = load();
            const SimplicityVerdict v = simplicity(*doc.ring);
            out << v.str() << "\n";
            if (v.shared_factor) out << "shared factor: " << v.shared_factor->str() << "\n";
            if (v.simple()) return kExitOk;
            return v.not_simple() ? kExitNotSimple : kExitInconclusive;
        }
        if (*member_cmd) {
            const RingDoc doc = load();
            const auto targets = detail::resolve_list(*doc.ring, target);
            if (targets.size() != 1) raise(ErrorCode::ParseError, "--target must name exactly one polynomial");
            const auto generators = detail::resolve_list(*doc.ring, gens);
            const int b = bound >= 0 ? bound : std::max(0, targets[0].degree());
            out << subalgebra_member(targets[0], generators, b).str() << "\n";
            return kExitOk;
        }
        if (*classify_cmd) {
            const RingDoc doc = load();
            out << classify(*doc.ring, class_window).str() << "\n";
            return kExitOk;
        }
        if (*inv_cmd) {
            const RingDoc doc = load();
            const GroupElt g = detail::parse_elt(doc.ring->group(), elt_text);
            const LocalizedElement inv = u_inverse(doc.ring, g);
            const LocalizedElement u = localize(RingElement::u(doc.ring, g));
            const LocalizedElement one = LocalizedElement::one(doc.ring);
            out << inv.str() << "\n";
            const bool ok = u * inv == one && inv * u == one;
            out << "two-sided inverse: " << (ok ? "verified" : "FAILED") << "\n";
            return ok ? kExitOk : kExitVerifyFailed;
        }
        if (*ore_cmd) {
            const RingDoc doc = load();
            const RingElement x = parse_element(expr_text, doc.ring, &doc.aliases);
            const Denominator s = Denominator::from_factors(*doc.ring, detail::parse_factors(doc.ring->group(), s_spec));
            const OreWitness w = ore_left_witness(x, s);
            const RingElement lhs = RingElement::coefficient(doc.ring, w.s_prime.value()) * x;
            const RingElement rhs = w.x_prime * RingElement::coefficient(doc.ring, s.value());
            out << "s = " << s.value().str() << "  [" << s.factors_str() << "]\n";
            out << "s' = " << w.s_prime.value().str() << "  [" << w.s_prime.factors_str() << "]\n";
            out << "x' = " << w.x_prime.str() << "\n";
            out << "s'*x = " << lhs.str() << "\n";
            out << "x'*s = " << rhs.str() << "\n";
            out << "equation: " << (lhs == rhs ? "verified" : "FAILED") << "\n";
            return lhs == rhs ? kExitOk : kExitVerifyFailed;
        }
    } catch (const ParseError& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const detail::IoError& e) {
        err << "error: IOError: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace crystal
