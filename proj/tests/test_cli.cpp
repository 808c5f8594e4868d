/*
   Copyright 2026 The pfactor Authors

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

#include "commands.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

using pfactor::cli::kExitFail;
using pfactor::cli::kExitInput;
using pfactor::cli::kExitPass;

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "pfactor");
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    Outcome o;
    o.code = pfactor::cli::run(args, in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string data(const std::string& name) { return std::string(PFACTOR_DATA_DIR) + "/" + name; }

nlohmann::json item(const nlohmann::json& doc, const std::string& name) {
    for (const auto& it : doc["items"]) {
        if (it["name"] == name) {
            return it;
        }
    }
    ADD_FAILURE() << "no item " << name;
    return nlohmann::json::object();
}

TEST(Cli, FactorAllPathsAgree) {
    const auto o = run({"factor", "V", "V12", "V13", "V34", "--path", "all", "-i", data("example_r4.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    const auto doc = o.json();
    EXPECT_EQ(doc["command"], "factor");
    EXPECT_EQ(doc["field"], "real");
    EXPECT_TRUE(doc["summary"]["all_pass"].get<bool>());
    std::size_t svd_values = 0;
    for (const auto& it : doc["items"]) {
        if (it.contains("path") && it["path"] == "svd") {
            ++svd_values;
            const double want = it["name"] == "V13" ? 0.0 : 0.5;
            EXPECT_NEAR(it["value"].get<double>(), want, 1e-12) << it["name"];
        }
    }
    EXPECT_EQ(svd_values, 3u);
}

TEST(Cli, MeasureOnSquare) {
    const auto o = run({"verify", "measure", "--set", "S", "--q", "2", "-i", data("example_r4.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    const auto m = item(o.json(), "measure");
    EXPECT_NEAR(m["target"].get<double>(), 16.0, 1e-12);
    std::vector<double> terms;
    for (const auto& t : m["terms"]) {
        terms.push_back(t["value"].get<double>());
    }
    ASSERT_EQ(terms.size(), 6u);
    const std::vector<double> want{2, 0, 2, 2, 0, 2};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR(terms[i], want[i], 1e-12);
    }
}

TEST(Cli, ComplexLineMeasure) {
    const auto o = run({"verify", "measure", "--set", "S", "--partition", "canonical", "-i", data("example_c2.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    const auto doc = o.json();
    EXPECT_EQ(doc["field"], "complex");
    EXPECT_NEAR(item(doc, "measure")["target"].get<double>(), 4.0, 1e-12);
}

TEST(Cli, TrirectangularTetrahedron) {
    const auto o = run({"verify", "measure", "--set", "ABC", "--q", "2", "-i", data("de_gua.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    EXPECT_NEAR(item(o.json(), "measure")["target"].get<double>(), 49.0, 1e-12);
}

TEST(Cli, SegmentOnPlanesAndSampledSegments) {
    const auto o = run({"verify", "measure", "--set", "segment", "--q", "2", "-i", data("segment.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    EXPECT_NEAR(item(o.json(), "measure")["value"].get<double>(), 3.0, 1e-12);

    const auto s = run({"--seed", "4", "verify", "measure", "--set", "two-segments", "--partition", "axes", "-i",
                        data("segment.json")});
    ASSERT_EQ(s.code, kExitPass) << s.err;
    const auto m = item(s.json(), "measure");
    EXPECT_TRUE(m.contains("std_error"));
    EXPECT_TRUE(m["pass"].get<bool>());
}

TEST(Cli, LinePartitionAndBinomial) {
    const auto a = run({"verify", "line-partition", "--subspace", "L", "--partition", "axes", "-i", data("segment.json")});
    ASSERT_EQ(a.code, kExitPass) << a.err;
    const auto b = run({"verify", "binomial", "--subspace", "L", "--q", "2", "-i", data("segment.json")});
    ASSERT_EQ(b.code, kExitPass) << b.err;
    const auto it = b.json()["items"][0];
    EXPECT_EQ(it["target"].get<double>(), 2.0);
}

TEST(Cli, RandomInstances) {
    for (const std::string theorem : {"line-partition", "subspace-coords", "binomial", "measure"}) {
        for (const std::string field : {"real", "complex"}) {
            const auto o = run({"--field", field, "--seed", "9", "verify", theorem, "--random", "5", "2", "3"});
            EXPECT_EQ(o.code, kExitPass) << theorem << " " << field << ": " << o.err;
        }
    }
}

TEST(Cli, PrincipalAndAngle) {
    const auto p = run({"principal", "V", "V12", "-i", data("example_r4.json")});
    ASSERT_EQ(p.code, kExitPass) << p.err;
    const auto a = run({"angle", "V", "V12", "-i", data("example_r4.json")});
    ASSERT_EQ(a.code, kExitPass) << a.err;
    EXPECT_NEAR(item(a.json(), "grassmann-angle")["value"].get<double>(), std::acos(0.5), 1e-12);
}

TEST(Cli, Quantum) {
    const auto o = run({"quantum", "superposition", "spin", "--fidelity", "tilted", "-i", data("quantum.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    const auto doc = o.json();
    for (const std::string lambda : {"lambda=-1", "lambda=0", "lambda=1"}) {
        EXPECT_NEAR(item(doc, lambda)["value"].get<double>(), 1.0 / 3.0, 1e-14);
    }
    EXPECT_NEAR(item(doc, "fidelity")["value"].get<double>(), 5.0 / 9.0, 1e-14);
    const auto e = run({"quantum", "eigen", "spin", "-i", data("quantum.json")});
    EXPECT_NEAR(item(e.json(), "lambda=-1")["value"].get<double>(), 1.0, 1e-15);
    EXPECT_EQ(run({"quantum", "eigen", "spin", "-i", data("segment.json")}).code, kExitInput);
}

TEST(Cli, AppendixSuite) {
    const auto o = run({"appendix", "--trials", "40", "--dims-up-to", "6"});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    const auto doc = o.json();
    EXPECT_EQ(doc["items"].size(), 44u);
    EXPECT_EQ(doc["items"][0]["name"], "real:zero-conventions");
    const auto empty = run({"appendix", "--trials", "0"});
    EXPECT_EQ(empty.code, kExitPass);
    EXPECT_TRUE(empty.json()["items"].empty());
}

TEST(Cli, VerificationFailureExitsOne) {
    const auto o = run({"--tol", "0", "appendix", "--trials", "20", "--dims-up-to", "5"});
    EXPECT_EQ(o.code, kExitFail);
    EXPECT_FALSE(o.json()["summary"]["all_pass"].get<bool>());
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run({}).code, kExitInput);
    EXPECT_EQ(run({"bogus"}).code, kExitInput);
    EXPECT_EQ(run({"factor", "V", "W"}, "{\"field\": \"real\"").code, kExitInput);
    EXPECT_EQ(run({"factor", "V", "nope", "-i", data("example_r4.json")}).code, kExitInput);
    EXPECT_EQ(run({"factor", "V", "V12", "-i", data("missing.json")}).code, kExitInput);
    EXPECT_EQ(run({"verify", "line-partition", "--subspace", "A", "--partition", "skewed", "-i",
                   data("bad_partition.json")})
                  .code,
              kExitInput);
    EXPECT_EQ(run({"--samples", "10", "appendix"}).code, kExitInput);
    EXPECT_EQ(run({"--field", "quaternion", "appendix"}).code, kExitInput);
    EXPECT_EQ(run({"appendix", "--dims-up-to", "1"}).code, kExitInput);

    const std::string unknown_key = R"({"field": "real", "ambient_dim": 2, "subspaces": {}, "extra": 1})";
    EXPECT_EQ(run({"factor", "V", "W"}, unknown_key).code, kExitInput);
    const std::string short_column = R"({"field": "real", "ambient_dim": 2, "subspaces": {"V": [[1]], "W": [[1, 0]]}})";
    EXPECT_EQ(run({"factor", "V", "W"}, short_column).code, kExitInput);
    const std::string dependent =
        R"({"field": "real", "ambient_dim": 2, "subspaces": {"V": [[1, 0], [2, 0]], "W": [[1, 0]]}})";
    EXPECT_EQ(run({"factor", "V", "W"}, dependent).code, kExitInput);
    const auto e = run({"factor", "V", "W"}, "not json");
    EXPECT_FALSE(e.err.empty());
    EXPECT_TRUE(e.out.empty());
}

TEST(Cli, ReadsStandardInput) {
    const std::string doc = R"({"field": "complex", "ambient_dim": 2,
        "subspaces": {"V": [[[1, 1], [1, 1]]], "E1": [[1, 0]]}})";
    const auto o = run({"factor", "V", "E1"}, doc);
    ASSERT_EQ(o.code, kExitPass) << o.err;
    EXPECT_NEAR(item(o.json(), "E1")["value"].get<double>(), 0.5, 1e-15);
    const auto dash = run({"factor", "V", "E1", "-i", "-"}, doc);
    EXPECT_EQ(dash.json()["items"], o.json()["items"]);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::vector<std::string>> commands = {
        {"--seed", "5", "appendix", "--trials", "30"},
        {"--seed", "5", "verify", "measure", "--set", "two-segments", "--partition", "axes", "-i", data("segment.json")},
        {"--format", "text", "--seed", "3", "quantum", "--random", "4", "2"},
    };
    for (const auto& c : commands) {
        const auto a = run(c);
        const auto b = run(c);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
        EXPECT_FALSE(a.out.empty());
    }
    const auto s1 = run({"--seed", "1", "appendix", "--trials", "10"});
    const auto s2 = run({"--seed", "2", "appendix", "--trials", "10"});
    EXPECT_NE(s1.out, s2.out);
}

TEST(Cli, TextFormat) {
    const auto o = run({"--format", "text", "verify", "measure", "--set", "S", "--q", "2", "-i", data("example_r4.json")});
    ASSERT_EQ(o.code, kExitPass) << o.err;
    EXPECT_NE(o.out.find("pass  measure = 16"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("1 passed, 0 failed"), std::string::npos);
    EXPECT_EQ(o.out.rfind("pfactor ", 0), 0u);
    const auto f = run({"--format", "text", "--tol", "0", "appendix", "--trials", "5", "--field", "real"});
    EXPECT_NE(f.out.find("FAIL"), std::string::npos);
}

}  // namespace
