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

namespace {

const Field Q = Field::rational();

UniPoly P(const std::string& s, const Field& f = Q) { return *parse_coeff(s, CoeffRing::poly(f)).as_uni(); }

LaurentPoly laurent_from_roots(const std::vector<mpq_class>& roots, long shift) {
    return to_laurent(oracle::from_roots(roots), shift);
}

} // namespace

TEST(SimpleShift, Usl2Boundary) {
    for (const char* l : {"0", "3/4", "2", "15/4", "6", "35/4"}) {
        const auto v = simple_shift(*example_gwa({"usl2", {{"lambda", l}}}).a[0].as_uni());
        EXPECT_TRUE(v.not_simple()) << l;
        ASSERT_TRUE(v.witness.has_value()) << l;
    }
    for (const char* l : {"1", "1/2", "-1", "5"})
        EXPECT_TRUE(simple_shift(*example_gwa({"usl2", {{"lambda", l}}}).a[0].as_uni()).simple()) << l;
}

TEST(SimpleShift, WitnessAndSharedFactor) {
    // a = -t(t - 1): sigma^1 pairs the roots 0 and 1.
    const auto v = simple_shift(P("-t*(t - 1)"));
    ASSERT_TRUE(v.not_simple());
    EXPECT_EQ(*v.witness, 1);
    EXPECT_EQ(v.str(), "NOT SIMPLE (witness i=1)");
    EXPECT_EQ(v.shared_factor->degree(), 1);
}

TEST(SimpleShift, RandomSplitPolynomialsAgreeWithRootDifferences) {
    Rng rng(41);
    int disagreements = 0, not_simple = 0;
    for (int i = 0; i < 300; ++i) {
        const auto roots = oracle::random_roots(rng, static_cast<int>(oracle::uniform(rng, 1, 4)), 6, 3);
        const bool expected = oracle::shift_oracle_not_simple(roots);
        const auto v = simple_shift(oracle::from_roots(roots));
        not_simple += expected;
        if (v.not_simple() != expected) ++disagreements;
    }
    EXPECT_EQ(disagreements, 0);
    EXPECT_GT(not_simple, 20);
}

TEST(SimpleShift, PositiveCharacteristicIsNotSimple) {
    const auto v = simple_shift(P("t^2 + 1", Field::prime(5)));
    EXPECT_TRUE(v.not_simple());
    EXPECT_NE(v.note.find("characteristic"), std::string::npos);
}

TEST(SimpleShift, QqInputUnsupported) {
    try {
        simple_shift(P("t + q", Field::rational_function()));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldUnsupported);
    }
}

TEST(SimpleMult, RandomSplitLaurentInputsAgreeWithRootRatios) {
    Rng rng(42);
    for (const mpq_class& lambda : {mpq_class(2), mpq_class(3), mpq_class(1, 2)}) {
        int disagreements = 0, not_simple = 0;
        for (int i = 0; i < 150; ++i) {
            std::vector<mpq_class> roots;
            const int n = static_cast<int>(oracle::uniform(rng, 1, 4));
            for (int k = 0; k < n; ++k) {
                mpq_class r(oracle::uniform(rng, 1, 9) * (oracle::uniform(rng, 0, 1) ? 1 : -1), oracle::uniform(rng, 1, 4));
                r.canonicalize();
                roots.push_back(r);
            }
            const bool expected = oracle::mult_oracle_not_simple(roots, lambda);
            const auto v = simple_mult(laurent_from_roots(roots, oracle::uniform(rng, -2, 2)), Scalar::rational(lambda));
            not_simple += expected;
            if (v.not_simple() != expected) ++disagreements;
        }
        EXPECT_EQ(disagreements, 0) << lambda;
        EXPECT_GT(not_simple, 10) << lambda;
    }
}

TEST(SimpleMult, RootsOfUnityRejected) {
    const LaurentPoly a = laurent_from_roots({3}, 0);
    for (long l : {1L, -1L}) {
        const auto v = simple_mult(a, Scalar::from_int(Q, l));
        EXPECT_TRUE(v.not_simple());
        EXPECT_NE(v.note.find("root of unity"), std::string::npos);
    }
}

TEST(SimpleMult, QuantumSl2) {
    // lambda = 0: the numerator of a is t^4 + q^2, and a(q^i t) has roots
    // t^4 = -q^(2 - 4i), so no i != 0 gives a common factor.
    EXPECT_TRUE(simplicity(*example("uqsl2")).simple());
    const Field f = Field::rational_function();
    const LaurentPoly b = to_laurent(*parse_coeff("(t - 1)*(q*t - 1)", CoeffRing::poly(f)).as_uni());
    const auto w = simple_mult(b, Scalar::q());
    ASSERT_TRUE(w.not_simple());
    EXPECT_EQ(std::abs(*w.witness), 1);
    const auto s = simple_mult(to_laurent(*parse_coeff("(t - 1)*(t - 2)", CoeffRing::poly(f)).as_uni()), Scalar::q());
    EXPECT_TRUE(s.simple());
}

TEST(Simplicity, RingDispatch) {
    EXPECT_TRUE(simplicity(*example("weyl")).simple());
    EXPECT_TRUE(simplicity(*example("usl2")).not_simple());
    EXPECT_TRUE(simplicity(*example("usl2", {{"lambda", "1"}})).simple());
    EXPECT_TRUE(simplicity(*example("bavula-bekkert")).simple());
    EXPECT_TRUE(simplicity(*example("qplane")).not_simple());
    EXPECT_EQ(simplicity(*example("general-type")).verdict, SimplicityVerdict::Kind::Inconclusive);
    EXPECT_EQ(simplicity(*example("rollup")).verdict, SimplicityVerdict::Kind::Inconclusive);
    // A shift by 2 is rescaled to a shift by 1 first.
    const RingPtr scaled = gwa_ring({CoeffRing::poly(Q), {Auto(AffineAuto::translation(Scalar::from_int(Q, -2)))}, {Coeff(P("t*(t - 2)"))}});
    EXPECT_TRUE(simplicity(*scaled).not_simple());
    const RingPtr apart = gwa_ring({CoeffRing::poly(Q), {Auto(AffineAuto::translation(Scalar::from_int(Q, -2)))}, {Coeff(P("t*(t - 1)"))}});
    EXPECT_TRUE(simplicity(*apart).simple());
}

TEST(Membership, CertificatesReexpand) {
    const std::vector<UniPoly> gens{P("t^2"), P("t^3")};
    const auto v = subalgebra_member(P("t^5 + 2*t^4 - 1"), gens, 6);
    ASSERT_TRUE(v.member);
    EXPECT_EQ(v.certificate_str(), "-1 + g1*g2 + 2*g1^2");
    EXPECT_FALSE(subalgebra_member(P("t"), gens, 6).member);
    EXPECT_EQ(subalgebra_member(P("t"), gens, 6).str(), "NON-MEMBER up to degree 6 (span dimension 6)");
}

TEST(Membership, RandomCombinationsAreFound) {
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        std::vector<UniPoly> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_poly(Q, rng, 3));
        std::erase_if(gens, [](const UniPoly& g) { return g.degree() < 1; });
        if (gens.empty()) continue;
        UniPoly target = UniPoly::constant(oracle::small_scalar(Q, rng));
        for (const auto& g : gens) target = target + g.scaled(oracle::small_scalar(Q, rng));
        if (gens.size() >= 2) target = target + gens[0] * gens[1];
        const int bound = std::max(6, target.degree());
        const auto v = subalgebra_member(target, gens, bound);
        EXPECT_TRUE(v.member);
        EXPECT_TRUE(v.confirmed);
    }
}

TEST(Membership, BoundTooSmallRaises) {
    try {
        subalgebra_member(P("t^4"), {P("t^2")}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeBoundExceeded);
    }
}

TEST(Classify, CommutingGwasAreClassOne) {
    const ClassReport w = classify(*example("weyl"));
    EXPECT_TRUE(w.supported);
    EXPECT_TRUE(w.class2);
    EXPECT_TRUE(w.class3);
    const ClassReport c3 = classify(*example("class3"));
    EXPECT_TRUE(c3.class3);
    EXPECT_FALSE(classify(*example("uqsl2")).supported);
}

TEST(Classify, GeneralTypeFailsClassThree) {
    const ClassReport r = classify(*example("general-type"));
    EXPECT_FALSE(r.class3);
    EXPECT_FALSE(r.class3_witness.empty());
}
