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

#include <gtest/gtest.h>

#include "support.hpp"

using namespace crystal;
using crystal::oracle::Rng;
using crystal::oracle::WeylOperators;

namespace {

const Field Q = Field::rational();

GroupElt z(long n) { return GroupElt::of(n); }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvariantViolation;
}

} // namespace

TEST(Groups, FreeAbelianAndCyclic) {
    const auto z2 = GradingGroup::free_abelian(2);
    EXPECT_EQ(z2.op(z2.make({1, -2}), z2.make({3, 5})), z2.make({4, 3}));
    EXPECT_EQ(z2.inverse(z2.make({1, -2})), z2.make({-1, 2}));
    EXPECT_EQ(z2.window(1).size(), 9u);
    const auto c5 = GradingGroup::cyclic(5);
    EXPECT_EQ(c5.op(c5.make({3}), c5.make({4})), c5.make({2}));
    EXPECT_EQ(c5.make({-1}), c5.make({4}));
    EXPECT_EQ(c5.window(100).size(), 5u);
    EXPECT_EQ(code_of([] { GradingGroup::free_abelian(0); }), ErrorCode::InvalidGroup);
}

TEST(Groups, FiniteTableValidation) {
    // Klein four-group.
    const auto v4 = GradingGroup::finite_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    EXPECT_EQ(v4.inverse(z(3)), z(3));
    EXPECT_EQ(code_of([] { GradingGroup::finite_table({{0, 1}, {1, 1}}); }), ErrorCode::InvalidGroup);
    EXPECT_EQ(code_of([] { GradingGroup::finite_table({{0, 1, 2}, {1, 2, 0}}); }), ErrorCode::InvalidGroup);
    // Not associative: a Latin square with identity 0 that is no group table.
    EXPECT_EQ(code_of([] {
                  GradingGroup::finite_table(
                      {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
              }),
              ErrorCode::InvalidGroup);
}

TEST(Rings, WeylProductsMatchDifferentialOperators) {
    const RingPtr w = example("weyl");
    const RingElement x = RingElement::u(w, z(1)), y = RingElement::u(w, z(-1));
    EXPECT_EQ((y * x).str(), "(t + 1)*u[0]");
    EXPECT_EQ((x * y).str(), "t*u[0]");
    EXPECT_TRUE(WeylOperators::product_matches(y, x, y * x));
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const RingElement a = oracle::random_element(w, rng, 3), b = oracle::random_element(w, rng, 3);
        EXPECT_TRUE(WeylOperators::product_matches(a, b, a * b)) << a.str() << " * " << b.str();
    }
}

TEST(Rings, OperatorOracleDistinguishesElements) {
    const RingPtr w = example("weyl");
    const RingElement x = RingElement::u(w, z(1)), y = RingElement::u(w, z(-1));
    EXPECT_FALSE(WeylOperators::same_action(x * y, y * x));
    EXPECT_TRUE(WeylOperators::same_action(y * x - x * y, RingElement::one(w)));
}

TEST(Rings, AssociativityFuzzOnTheCatalog) {
    Rng rng(22);
    for (const auto& name : example_names()) {
        const RingPtr r = example(name);
        for (int i = 0; i < 25; ++i) {
            const RingElement a = oracle::random_element(r, rng), b = oracle::random_element(r, rng),
                              c = oracle::random_element(r, rng);
            EXPECT_EQ((a * b) * c, a * (b * c)) << name;
        }
    }
}

TEST(Rings, DistributivityAndUnit) {
    Rng rng(23);
    const RingPtr r = example("qweyl");
    for (int i = 0; i < 30; ++i) {
        const RingElement a = oracle::random_element(r, rng), b = oracle::random_element(r, rng),
                          c = oracle::random_element(r, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(RingElement::one(r) * a, a);
        EXPECT_EQ(a * RingElement::one(r), a);
    }
}

TEST(Rings, CreationRejectsBadData) {
    const CoeffRing K = CoeffRing::poly(Q);
    const auto Z = GradingGroup::free_abelian(1);
    const SigmaMap shift = SigmaMap::generators({Auto(AffineAuto::translation(Scalar::from_int(Q, -1)))});
    EXPECT_EQ(code_of([&] { CrystalRing::create(K, Z, shift, GwaCocycle{Coeff::zero(K)}); }), ErrorCode::ZeroCocycleValue);
    EXPECT_EQ(code_of([&] {
                  CrystalRing::create(K, GradingGroup::free_abelian(2), shift, TrivialCocycle{});
              }),
              ErrorCode::GroupMismatch);
    EXPECT_EQ(code_of([&] {
                  CrystalRing::create(K, Z, SigmaMap::generators({Auto::identity(Q, 2)}), TrivialCocycle{});
              }),
              ErrorCode::ArityMismatch);
    EXPECT_EQ(code_of([&] {
                  CrystalRing::create(K, Z,
                                      SigmaMap::generators({Auto(AffineAuto::identity(Field::prime(3)))}),
                                      TrivialCocycle{});
              }),
              ErrorCode::MixedField);
}

TEST(Rings, NonCommutingGeneratorsRejected) {
    const CoeffRing K = CoeffRing::poly(Q);
    const SigmaMap sigma = SigmaMap::generators({Auto(AffineAuto::translation(Scalar::one(Q))),
                                                 Auto(AffineAuto::scaling(Scalar::from_int(Q, 2)))});
    EXPECT_EQ(code_of([&] { CrystalRing::create(K, GradingGroup::free_abelian(2), sigma, TrivialCocycle{}); }),
              ErrorCode::InvalidAutomorphism);
}

TEST(Rings, TableMissingEntryRaisesOnUse) {
    const Field f = Field::prime(7);
    const CoeffRing K = CoeffRing::poly(f);
    const SigmaMap sigma = SigmaMap::elements({Auto::identity(f, 1), Auto::identity(f, 1)});
    TableCocycle empty;
    EXPECT_EQ(code_of([&] { CrystalRing::create(K, GradingGroup::cyclic(2), sigma, empty); }),
              ErrorCode::CocycleUndefined);
}

TEST(Rings, GroupMismatchBetweenRings) {
    const RingPtr a = example("weyl"), b = example("qplane");
    EXPECT_EQ(code_of([&] { (void)(RingElement::u(a, z(1)) * RingElement::u(b, z(1))); }), ErrorCode::GroupMismatch);
}

TEST(Rings, RenderingIsCanonical) {
    const RingPtr w = example("weyl");
    EXPECT_EQ(RingElement(w).str(), "0");
    EXPECT_EQ(parse_element("-u[2] + (t + 1)*u[-1] + 3", w).str(), "(t + 1)*u[-1] + 3*u[0] - u[2]");
}

TEST(Verify, CatalogPassesAndReportsCounts) {
    for (const auto& name : example_names()) {
        const RingPtr r = example(name);
        EXPECT_EQ(r->status().state, ValidationStatus::State::Verified) << name;
        EXPECT_TRUE(verify_torsionfree(*r).passed()) << name;
    }
}

TEST(Verify, CorruptedTableIsCaught) {
    const RingPtr good = example("rollup");
    auto table = std::get<TableCocycle>(good->cocycle());
    const Coeff t = Coeff::variable(good->coeffs());
    table.values.insert_or_assign({z(1), z(1)}, t);
    const RingPtr bad = CrystalRing::create(good->coeffs(), good->group(), good->sigma_map(), table, "bad");
    const VerifyReport report = verify_ring(*bad);
    EXPECT_FALSE(report.passed());
    EXPECT_TRUE(report.has_violation("cocycle", {z(1), z(1), z(2)}));
    EXPECT_NE(report.str().find("FAIL"), std::string::npos);
}

TEST(Verify, GeneralTypeWithOtherPolynomialPasses) {
    const RingPtr w = example("weyl");
    const CoeffRing K = w->coeffs();
    const RingPtr general = CrystalRing::create(K, w->group(), w->sigma_map(), GeneralCocycle{parse_coeff("t + 1", K)});
    EXPECT_TRUE(verify_ring(*general, 3).passed());
}

TEST(Verify, InverseSymmetryViolationIsCaught) {
    // C2 with sigma_1(t) = -t: alpha(1,1) = t is not fixed by sigma_1.
    const CoeffRing K = CoeffRing::poly(Q);
    const RingPtr broken =
        CrystalRing::create(K, GradingGroup::cyclic(2),
                            SigmaMap::elements({Auto::identity(Q, 1), Auto(AffineAuto::scaling(Scalar::from_int(Q, -1)))}),
                            TableCocycle{{{{z(1), z(1)}, parse_coeff("t", K)}}});
    const VerifyReport report = verify_ring(*broken);
    EXPECT_TRUE(report.has_violation("inverse-symmetry", {z(1)}));
}

TEST(Localization, InverseOfGeneratorInWeyl) {
    const RingPtr w = example("weyl");
    const LocalizedElement inv = u_inverse(w, z(1));
    EXPECT_EQ(inv.str(), "(1/(t + 1))*u[-1]");
    const LocalizedElement u = localize(RingElement::u(w, z(1)));
    EXPECT_EQ(u * inv, LocalizedElement::one(w));
    EXPECT_EQ(inv * u, LocalizedElement::one(w));
}

TEST(Localization, InversesAcrossTheWindow) {
    for (const char* name : {"weyl", "qplane", "general-type", "usl2"}) {
        const std::string n = name;
        const RingPtr r = n == "usl2" ? example(n, {{"lambda", "1"}}) : n == "qplane" ? example(n, {{"lambda", "2"}}) : example(n);
        for (long g = -3; g <= 3; ++g) {
            const LocalizedElement inv = u_inverse(r, z(g));
            const LocalizedElement u = localize(RingElement::u(r, z(g)));
            EXPECT_EQ(u * inv, LocalizedElement::one(r)) << name << " " << g;
            EXPECT_EQ(inv * u, LocalizedElement::one(r)) << name << " " << g;
        }
    }
}

TEST(Localization, DenominatorsFromValues) {
    const RingPtr w = example("weyl");
    const Coeff s = parse_coeff("t*(t - 1)", w->coeffs());
    const Denominator d = Denominator::from_value(*w, s);
    EXPECT_EQ(d.value(), s);
    EXPECT_TRUE(d.consistent(*w));
    EXPECT_EQ(code_of([&] { Denominator::from_value(*w, parse_coeff("t^2 + 5", w->coeffs())); }),
              ErrorCode::NonUnitDenominator);
}

TEST(Localization, OreWitnesses) {
    Rng rng(24);
    for (const char* name : {"weyl", "qweyl", "bavula-bekkert"}) {
        const RingPtr r = example(name);
        for (int i = 0; i < 20; ++i) {
            const RingElement x = oracle::random_element(r, rng, 3);
            Denominator s = Denominator::unit(*r);
            for (int k = 0; k < 2; ++k) {
                const long g = oracle::uniform(rng, 1, 2) * (oracle::uniform(rng, 0, 1) ? 1 : -1);
                s = s * Denominator::factor(*r, z(oracle::uniform(rng, -2, 2)), z(g));
            }
            const OreWitness w = ore_left_witness(x, s);
            EXPECT_TRUE(ore_holds(x, s, w)) << name << " " << x.str() << " " << s.factors_str();
        }
    }
}

TEST(Localization, FractionsCompareByCrossMultiplication) {
    const RingPtr w = example("weyl");
    LocalizedElement a(w), b(w);
    const Denominator d1 = Denominator::factor(*w, z(0), z(1));
    const Denominator d2 = d1 * Denominator::factor(*w, z(0), z(-1));
    a.add_term(z(0), Fraction{Coeff::one(w->coeffs()), d1});
    b.add_term(z(0), Fraction{d2.value() * Coeff::one(w->coeffs()), d1 * d2});
    EXPECT_EQ(a, b);
}
