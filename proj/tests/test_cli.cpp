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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "crystal/cli.hpp"
#include "support.hpp"

using namespace crystal;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("crystal-test-" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Parser, PrecedenceAndPowers) {
    const CoeffRing K = CoeffRing::poly(Field::rational());
    EXPECT_EQ(parse_coeff("1 + 2*t^2", K).str(), "2*t^2 + 1");
    EXPECT_EQ(parse_coeff("-t^2", K).str(), "-t^2");
    EXPECT_EQ(parse_coeff("(t - 1)*(t + 1)", K).str(), "t^2 - 1");
    EXPECT_THROW(parse_coeff("(t - 1)(t + 1)", K), ParseError);
    EXPECT_EQ(parse_coeff("t/2 + 1/3", K).str(), "1/2*t + 1/3");
    EXPECT_EQ(parse_scalar("q^-2*(q^2 + q)", Field::rational_function()).str(), "(q + 1)/q");
}

TEST(Parser, ErrorsCarryPositions) {
    const RingPtr w = example("weyl");
    try {
        parse_element("u[1]^-1", w);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 6);
        ASSERT_FALSE(e.expected().empty());
        EXPECT_EQ(e.expected()[0], "nonnegative integer");
    }
    try {
        parse_element("u[1] +\n  * 2", w);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 3);
    }
    try {
        parse_element("z", w);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("z"), std::string::npos);
    }
}

TEST(Parser, GroupArityChecked) {
    try {
        parse_element("u[1,2]", example("weyl"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::GroupMismatch);
    }
}

TEST(Parser, RenderedElementsParseBack) {
    oracle::Rng rng(51);
    for (const auto& name : example_names()) {
        const RingPtr r = example(name);
        for (int i = 0; i < 20; ++i) {
            const RingElement x = oracle::random_element(r, rng);
            EXPECT_EQ(parse_element(x.str(), r), x) << name << ": " << x.str();
        }
    }
}

TEST(Documents, RoundTripIsByteIdentical) {
    for (const auto& name : example_names()) {
        const std::string text = save_document(make_document(example(name)));
        const RingDoc doc = load_document(text);
        EXPECT_EQ(save_document(doc), text) << name;
        EXPECT_EQ(doc.ring->alpha(doc.ring->group().make({1}), doc.ring->group().make({-1})),
                  example(name)->alpha(doc.ring->group().make({1}), doc.ring->group().make({-1})));
    }
}

TEST(Documents, TensorRoundTrip) {
    const GWAData w = example_gwa({"weyl", {}});
    const RingPtr r = gwa_ring(gwa_tensor(w, w), "weyl2");
    const std::string text = save_document(make_document(r));
    EXPECT_EQ(save_document(load_document(text)), text);
    EXPECT_NE(text.find("\"x2\": \"u[0,1]\""), std::string::npos);
}

TEST(Documents, SchemaErrors) {
    for (const char* bad : {"{", "{}", R"({"schema": "cgr-2"})",
                            R"({"schema": "cgr-1", "field": "Q", "carrier": "poly", "group": "Z", "sigma": [[["1","-1"]]], "alpha": {"kind": "mystery"}})",
                            R"({"schema": "cgr-1", "field": "Q", "carrier": "poly", "group": "W", "sigma": [], "alpha": {"kind": "trivial"}})"}) {
        try {
            load_document(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::SchemaError) << bad;
        }
    }
}

TEST(Cli, ExampleMulVerify) {
    TempDir dir;
    const std::string w = dir.file("weyl.json");
    EXPECT_EQ(run_cli({"example", "weyl", "-o", w}).code, 0);
    const Outcome mul = run_cli({"mul", "-r", w, "y*x - x*y"});
    EXPECT_EQ(mul.code, 0);
    EXPECT_EQ(mul.out, "u[0]\n");
    const Outcome verify = run_cli({"verify", "-r", w, "--window", "3"});
    EXPECT_EQ(verify.code, 0);
    EXPECT_NE(verify.out.find("PASS"), std::string::npos);
    const Outcome stdout_doc = run_cli({"example", "weyl"});
    EXPECT_EQ(stdout_doc.out, slurp(w));
}

TEST(Cli, VerifyFailureExitsTwo) {
    TempDir dir;
    const std::string path = dir.file("bad.json");
    auto doc = nlohmann::json::parse(save_document(make_document(example("rollup"))));
    for (auto& e : doc["alpha"]["entries"])
        if (e["g"] == "1" && e["h"] == "1") e["value"] = "t";
    std::ofstream(path) << doc.dump(2);
    const Outcome v = run_cli({"verify", "-r", path});
    EXPECT_EQ(v.code, 2);
    EXPECT_NE(v.out.find("cocycle"), std::string::npos);
}

TEST(Cli, SimpleExitCodes) {
    TempDir dir;
    const std::string u0 = dir.file("u0.json"), u1 = dir.file("u1.json"), gt = dir.file("gt.json");
    run_cli({"example", "usl2", "lambda=0", "-o", u0});
    run_cli({"example", "usl2", "lambda=1", "-o", u1});
    run_cli({"example", "general-type", "-o", gt});
    const Outcome a = run_cli({"simple", "-r", u0});
    EXPECT_EQ(a.code, 3);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "NOT SIMPLE (witness i=1)");
    EXPECT_EQ(run_cli({"simple", "-r", u1}).code, 0);
    EXPECT_EQ(run_cli({"simple", "-r", gt}).code, 4);
}

TEST(Cli, MemberClassifyInvOre) {
    TempDir dir;
    const std::string gt = dir.file("gt.json"), w = dir.file("w.json");
    run_cli({"example", "general-type", "-o", gt});
    run_cli({"example", "weyl", "-o", w});
    const Outcome m = run_cli({"member", "-r", gt, "--target", "alpha[1][1]", "--gens", "sdiag[3][3]", "--bound", "2"});
    EXPECT_EQ(m.code, 0);
    EXPECT_EQ(m.out, "NON-MEMBER up to degree 2 (span dimension 1)\n");
    const Outcome m2 = run_cli({"member", "-r", gt, "--target", "t^2", "--gens", "alpha[1][1]; t"});
    EXPECT_EQ(m2.code, 0);
    EXPECT_EQ(m2.out.rfind("MEMBER", 0), 0u);
    const Outcome c = run_cli({"classify", "-r", gt});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("Class 3: fails"), std::string::npos);
    const Outcome inv = run_cli({"inv", "-r", w, "1"});
    EXPECT_EQ(inv.code, 0);
    EXPECT_EQ(inv.out.substr(0, inv.out.find('\n')), "(1/(t + 1))*u[-1]");
    const Outcome ore = run_cli({"ore", "-r", w, "x + t*y", "--s", "0:1;1:-1"});
    EXPECT_EQ(ore.code, 0);
    EXPECT_NE(ore.out.find("equation: verified"), std::string::npos);
}

TEST(Cli, ErrorsExitOne) {
    const Outcome missing = run_cli({"mul", "-r", "/nonexistent/ring.json", "x"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_EQ(missing.err.rfind("error: IOError:", 0), 0u);
    const Outcome unknown = run_cli({"example", "nope"});
    EXPECT_EQ(unknown.code, 1);
    EXPECT_EQ(unknown.err.rfind("error: ParameterDomain:", 0), 0u);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ParseErrorReportsPosition) {
    TempDir dir;
    const std::string w = dir.file("w.json");
    run_cli({"example", "weyl", "-o", w});
    const Outcome p = run_cli({"mul", "-r", w, "u[1]^-1"});
    EXPECT_EQ(p.code, 1);
    EXPECT_NE(p.err.find("line 1, column 6"), std::string::npos);
}

TEST(Parser, ProductOfParsedExpressions) {
    oracle::Rng rng(52);
    for (const char* name : {"weyl", "qweyl", "uqsl2", "rollup", "general-type"}) {
        const RingPtr r = example(name);
        for (int i = 0; i < 15; ++i) {
            const std::string e1 = oracle::random_element(r, rng).str(), e2 = oracle::random_element(r, rng).str();
            EXPECT_EQ(parse_element(e1, r) * parse_element(e2, r), parse_element("(" + e1 + ")*(" + e2 + ")", r))
                << name << ": " << e1 << " | " << e2;
        }
    }
}

TEST(Parser, WorkedProducts) {
    const RingDoc weyl = make_document(example("weyl"));
    EXPECT_EQ(parse_element("y*x", weyl.ring, &weyl.aliases).str(), "(t + 1)*u[0]");
    EXPECT_EQ(parse_element("x^2*y^2", weyl.ring, &weyl.aliases).str(), "(t^2 - t)*u[0]");
    for (const char* lambda : {"2", "-3", "1/5", "q"}) {
        const RingDoc qplane = make_document(example("qplane", {{"lambda", lambda}}));
        EXPECT_EQ(parse_element("x*y", qplane.ring, &qplane.aliases).str(), "t*u[0]") << lambda;
    }
}

TEST(Documents, ReloadedRingsVerifyIdentically) {
    for (const auto& name : example_names()) {
        const RingPtr r = example(name);
        const RingDoc doc = load_document(save_document(make_document(r)));
        EXPECT_EQ(verify_ring(*doc.ring, 3).str(), verify_ring(*r, 3).str()) << name;
    }
}
