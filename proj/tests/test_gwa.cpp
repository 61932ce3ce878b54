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
using crystal::oracle::GeneratorChain;

namespace {

const Field Q = Field::rational();

GroupElt z(long n) { return GroupElt::of(n); }

UniPoly poly(const Coeff& c) { return *c.as_uni(); }

/// prod_{k=lo}^{hi} (t + k).
UniPoly rising(long lo, long hi) {
    UniPoly p = UniPoly::constant(Scalar::one(Q));
    for (long k = lo; k <= hi; ++k) p = p * UniPoly::from_ints(Q, {k, 1});
    return p;
}

} // namespace

class TwoPath : public ::testing::TestWithParam<const char*> {};

TEST_P(TwoPath, RuleTableMatchesGeneratorWords) {
    const GWAData data = example_gwa({GetParam(), {}});
    const RingPtr r = gwa_ring(data);
    const GeneratorChain chain(data.sigma[0], data.a[0]);
    for (long n = -5; n <= 5; ++n)
        for (long m = -5; m <= 5; ++m) EXPECT_EQ(r->alpha(z(n), z(m)), chain.alpha(n, m)) << n << "," << m;
}

TEST_P(TwoPath, ProductsMatchGeneratorWords) {
    const GWAData data = example_gwa({GetParam(), {}});
    const RingPtr r = gwa_ring(data);
    const GeneratorChain chain(data.sigma[0], data.a[0]);
    oracle::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const Coeff f = oracle::random_coeff(data.coeffs, rng), g = oracle::random_coeff(data.coeffs, rng);
        const long n = oracle::uniform(rng, -4, 4), m = oracle::uniform(rng, -4, 4);
        const auto [c, d] = chain.mul(f, n, g, m);
        EXPECT_EQ(RingElement::homogeneous(r, f, z(n)) * RingElement::homogeneous(r, g, z(m)),
                  RingElement::homogeneous(r, c, z(d)));
    }
}

INSTANTIATE_TEST_SUITE_P(Catalog, TwoPath,
                         ::testing::Values("weyl", "qweyl", "qplane", "cyclic-inv", "usl2", "uqsl2", "bavula-bekkert",
                                           "class3"),
                         [](const auto& info) {
                             std::string s = info.param;
                             std::erase(s, '-');
                             return s;
                         });

TEST(Gwa, WeylDiagonalValues) {
    const RingPtr w = example("weyl");
    for (long n = 1; n <= 6; ++n) {
        // x^n y^n = t (t - 1) ... (t - n + 1); y^n x^n = (t + 1) ... (t + n).
        EXPECT_EQ(poly(w->alpha(z(n), z(-n))), rising(-n + 1, 0));
        EXPECT_EQ(poly(w->alpha(z(-n), z(n))), rising(1, n));
    }
}

TEST(Gwa, TensorProductOfWeylAlgebras) {
    const GWAData weyl = example_gwa({"weyl", {}});
    const GWAData two = gwa_tensor(weyl, weyl);
    ASSERT_EQ(two.degree(), 2u);
    const RingPtr r = gwa_ring(two, "weyl2");
    EXPECT_TRUE(verify_ring(*r, 2).passed());
    const auto& G = r->group();
    const RingElement x1 = RingElement::u(r, G.make({1, 0})), y1 = RingElement::u(r, G.make({-1, 0}));
    const RingElement x2 = RingElement::u(r, G.make({0, 1})), y2 = RingElement::u(r, G.make({0, -1}));
    EXPECT_EQ(x1 * x2, x2 * x1);
    EXPECT_EQ(x1 * y2, y2 * x1);
    EXPECT_EQ(y1 * x2, x2 * y1);
    EXPECT_EQ((y1 * x1).str(), "(t_1 + 1)*u[0,0]");
    EXPECT_EQ((y2 * x2).str(), "(t_2 + 1)*u[0,0]");
    EXPECT_EQ(y1 * x1 - x1 * y1, RingElement::one(r));
    EXPECT_EQ(y2 * x2 - x2 * y2, RingElement::one(r));
    oracle::Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const RingElement a = oracle::random_element(r, rng, 1), b = oracle::random_element(r, rng, 1),
                          c = oracle::random_element(r, rng, 1);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Gwa, TensorRejectsMixedFields) {
    const GWAData a = example_gwa({"weyl", {}});
    const GWAData b = example_gwa({"qweyl", {}});
    try {
        gwa_tensor(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MixedField);
    }
}

TEST(Gwa, AssociatedGradedIsCommutativeGwa) {
    const GWAData u = example_gwa({"usl2", {{"lambda", "3"}}});
    const GWAData gr = assoc_graded(u);
    EXPECT_TRUE(gr.sigma[0].is_identity());
    EXPECT_EQ(gr.a[0].str(), "-t^2");
    const RingPtr r = gwa_ring(gr);
    EXPECT_TRUE(verify_ring(*r).passed());
    const RingElement x = RingElement::u(r, z(1)), y = RingElement::u(r, z(-1));
    EXPECT_EQ(x * y, y * x);
}

TEST(Gwa, CheckRejectsZeroA) {
    GWAData d = example_gwa({"weyl", {}});
    d.a[0] = Coeff::zero(d.coeffs);
    try {
        check_gwa(d);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
    }
}

TEST(Catalog, CyclicInvariantValues) {
    for (long m = 1; m <= 4; ++m) {
        const RingPtr r = example("cyclic-inv", {{"m", std::to_string(m)}});
        UniPoly expected = UniPoly::constant(scalar_pow(Scalar::from_int(Q, m), m));
        for (long k = 0; k < m; ++k)
            expected = expected * UniPoly(Q, {Scalar::rational(mpq_class(k, m)), Scalar::one(Q)});
        EXPECT_EQ(poly(r->alpha(z(-1), z(1))), expected) << m;
    }
}

TEST(Catalog, BavulaBekkertShifts) {
    const RingPtr r = example("bavula-bekkert");
    const Coeff a = r->alpha(z(-1), z(1));
    for (long s = 1; s <= 4; ++s) {
        const UniPoly expected =
            oracle::from_roots({mpq_class(s), mpq_class(3 * s + 1, 3), mpq_class(3 * s + 2, 3)}).scaled(Scalar::from_int(Q, 27));
        EXPECT_EQ(poly(r->apply_sigma(z(s), a)), expected) << s;
    }
}

TEST(Catalog, UnknownNamesAndParameters) {
    for (const auto& spec : std::vector<ExampleSpec>{{"nope", {}}, {"weyl", {{"lambda", "1"}}}, {"qplane", {{"lambda", "0"}}},
                                                     {"cyclic-inv", {{"m", "0"}}}, {"rollup", {{"sigma", "3"}}}}) {
        try {
            example(spec);
            ADD_FAILURE() << spec.name;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParameterDomain) << spec.name;
        }
    }
}

TEST(Catalog, RollupValues) {
    const RingPtr r = example("rollup");
    EXPECT_EQ(r->group().order(), 3u);
    // sigma(t) = 2t over F_7; alpha(1,2) = p sigma(p) with p = t^2 + 1.
    EXPECT_EQ(r->alpha(z(1), z(1)).str(), "4*t^2 + 1");
    EXPECT_EQ(r->alpha(z(1), z(2)).str(), "4*t^4 + 5*t^2 + 1");
    EXPECT_TRUE(verify_ring(*r, 0).passed());
}

TEST(Catalog, GeneralTypeValues) {
    const RingPtr r = example("general-type");
    // sigma(t) = t - 1, p = t^2 + 1.
    EXPECT_EQ(r->alpha(z(1), z(1)).str(), "t^2 - 2*t + 2");
    EXPECT_EQ(r->alpha(z(-1), z(2)).str(), "t^2 + 2*t + 2");
    EXPECT_EQ(r->alpha(z(1), z(-1)), r->alpha(z(1), z(1)) * parse_coeff("t^2 + 1", r->coeffs()));
    EXPECT_TRUE(verify_ring(*r, 5).passed());
}
