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

#include <random>
#include <string>
#include <vector>

#include "crystal/ring.hpp"

namespace crystal {

struct Violation {
    /// "cocycle", "sigma-compatibility", "homomorphism", "normalization",
    /// "inverse-symmetry", "corollary", "nonzero" or "error".
    std::string identity;
    std::vector<GroupElt> args;
    std::string lhs;
    std::string rhs;

    std::string str() const {
        std::string out = identity + " at (";
        for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "; " : "") + args[i].str();
        out += ")";
        if (!lhs.empty() || !rhs.empty()) out += ": " + lhs + " != " + rhs;
        return out;
    }
};

struct VerifyReport {
    std::string window;
    std::size_t checks = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }

    bool has_violation(const std::string& identity, const std::vector<GroupElt>& args) const {
        for (const auto& v : violations)
            if (v.identity == identity && v.args == args) return true;
        return false;
    }

    std::string str() const {
        if (passed()) return "PASS (window " + window + ", " + std::to_string(checks) + " checks)";
        return "FAIL " + violations.front().str() + " (" + std::to_string(violations.size()) + " violations)";
    }
};

namespace detail {

inline std::string window_text(const GradingGroup& group, long radius) {
    if (group.is_finite()) return "all of " + group.name();
    std::string r = "[" + std::to_string(-radius) + "," + std::to_string(radius) + "]";
    return group.rank() == 1 ? r : r + "^" + std::to_string(group.rank());
}

/// Test elements for the sigma-compatibility identity: 1, t, t^2 and a
/// fixed pseudo-random polynomial.
inline std::vector<Coeff> probe_elements(const CoeffRing& ring) {
    std::vector<Coeff> out{Coeff::one(ring)};
    for (std::size_t i = 0; i < ring.arity; ++i) {
        out.push_back(Coeff::variable(ring, i));
        out.push_back(Coeff::variable(ring, i, 2));
    }
    std::mt19937 rng(20260101u);
    std::uniform_int_distribution<long> dist(-9, 9);
    Coeff random = Coeff::zero(ring);
    for (std::size_t i = 0; i < ring.arity; ++i)
        for (long e = 0; e <= 3; ++e)
            random += Coeff::variable(ring, i, e).scaled(Scalar::from_int(ring.field, dist(rng)));
    if (ring.carrier == Carrier::Laurent)
        random += Coeff::variable(ring, 0, -2).scaled(Scalar::from_int(ring.field, dist(rng)));
    out.push_back(random);
    return out;
}

} // namespace detail

/// Checks every identity of a crystalline graded ring on the window
/// [-radius, radius]^n (all elements for finite groups): the twisted
/// 2-cocycle identity on triples, sigma-compatibility and the homomorphism
/// property on pairs, normalization and alpha(g,g^-1) = sigma_g(alpha(g^-1,g)),
/// and alpha(g,g^-1) = sigma_g(alpha(g^-1,gh)) alpha(g,h).
inline VerifyReport verify_ring(const CrystalRing& ring, long radius = 4, std::size_t max_violations = 1000) {
    const GradingGroup& group = ring.group();
    const auto window = group.window(radius);
    const GroupElt e = group.identity();
    const auto probes = detail::probe_elements(ring.coeffs());
    VerifyReport report;
    report.window = detail::window_text(group, radius);

    auto record = [&](std::string identity, std::vector<GroupElt> args, const Coeff& lhs, const Coeff& rhs) {
        ++report.checks;
        if (lhs == rhs || report.violations.size() >= max_violations) return;
        report.violations.push_back({std::move(identity), std::move(args), lhs.str(), rhs.str()});
    };
    auto guarded = [&](const std::string& identity, const std::vector<GroupElt>& args, auto&& body) {
        try {
            body();
        } catch (const Error& err) {
            ++report.checks;
            if (report.violations.size() < max_violations)
                report.violations.push_back({"error", args, identity, std::string(err.what())});
        }
    };

    for (const auto& g : window) {
        const GroupElt gi = group.inverse(g);
        guarded("normalization", {g}, [&] {
            record("normalization", {g, e}, ring.alpha(g, e), ring.one());
            record("normalization", {e, g}, ring.alpha(e, g), ring.one());
            record("inverse-symmetry", {g}, ring.alpha(g, gi), ring.apply_sigma(g, ring.alpha(gi, g)));
        });
        for (const auto& h : window) {
            const GroupElt gh = group.op(g, h);
            guarded("pair", {g, h}, [&] {
                const Coeff a_gh = ring.alpha(g, h);
                const Auto composed = ring.sigma(g).after(ring.sigma(h));
                const Auto direct = ring.sigma(gh);
                ++report.checks;
                if (!(composed == direct) && report.violations.size() < max_violations)
                    report.violations.push_back({"homomorphism", {g, h}, composed.str(), direct.str()});
                for (const auto& x : probes)
                    record("sigma-compatibility", {g, h}, x.apply(composed) * a_gh, a_gh * x.apply(direct));
                record("corollary", {g, h}, ring.alpha(g, gi),
                       ring.apply_sigma(g, ring.alpha(gi, gh)) * a_gh);
            });
            for (const auto& k : window) {
                guarded("cocycle", {g, h, k}, [&] {
                    const Coeff lhs = ring.alpha(g, h) * ring.alpha(gh, k);
                    const Coeff rhs = ring.apply_sigma(g, ring.alpha(h, k)) * ring.alpha(g, group.op(h, k));
                    record("cocycle", {g, h, k}, lhs, rhs);
                });
            }
        }
    }
    return report;
}

/// Confirms alpha(g,h) != 0 on the window; over a domain this certifies
/// that A_0 has no S(G)-torsion there.
inline VerifyReport verify_torsionfree(const CrystalRing& ring, long radius = 4) {
    const auto window = ring.group().window(radius);
    VerifyReport report;
    report.window = detail::window_text(ring.group(), radius);
    for (const auto& g : window)
        for (const auto& h : window) {
            ++report.checks;
            try {
                if (ring.alpha(g, h).is_zero()) report.violations.push_back({"nonzero", {g, h}, "0", "nonzero"});
            } catch (const Error& err) {
                report.violations.push_back({"nonzero", {g, h}, err.what(), "nonzero"});
            }
        }
    return report;
}

/// The ring with its validation status updated from `report`.
inline RingPtr with_report(const CrystalRing& ring, const VerifyReport& report) {
    ValidationStatus status;
    status.state = report.passed() ? ValidationStatus::State::Verified : ValidationStatus::State::Failed;
    status.detail = report.passed() ? report.window : report.violations.front().str();
    return ring.with_status(std::move(status));
}

} // namespace crystal
