/*
 * Copyright 2026 The Orbitlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "orbitlab/cli.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/workspace.hpp"

using namespace orbitlab;

namespace {

const std::string kData = ORBITLAB_DATA_DIR;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("workspace files load and validate") {
    for (const char* f : {"heisenberg.json", "heisenberg2.json", "engel.json",
                          "free2step3.json"}) {
        Workspace ws = load_workspace(kData + "/" + f);
        CHECK(ws.algebra.validate().ok());
        CHECK(!ws.functionals.empty());
        CHECK(!ws.lattices.empty());
    }
}

TEST_CASE("antisymmetric completion is applied to one-sided brackets") {
    Workspace ws = parse_workspace_text(R"({
        "dim": 3, "basis": ["X", "Y", "Z"],
        "brackets": [ {"i": 2, "j": 1, "coeffs": {"3": "-1"}} ]
    })");
    CHECK(ws.algebra.validate().ok());
    CHECK(ws.algebra.c(0, 1, 2) == Rational(1));
}

TEST_CASE("inconsistent two-sided brackets fail re-validation") {
    Workspace ws = parse_workspace_text(R"({
        "dim": 3, "basis": ["X", "Y", "Z"],
        "brackets": [
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 2, "j": 1, "coeffs": {"3": "1"}}
        ]
    })");
    CHECK(!ws.algebra.validate().antisymmetry_ok);
}

TEST_CASE("malformed workspaces raise input errors") {
    CHECK_THROWS_AS(parse_workspace_text("{"), InputError);
    CHECK_THROWS_AS(parse_workspace_text(R"({"dim": 2})"), InputError);
    CHECK_THROWS_AS(parse_workspace_text(R"({"dim": 2, "basis": ["A"]})"), InputError);
    CHECK_THROWS_AS(parse_workspace_text(
                        R"({"dim": 2, "basis": ["A", "B"],
                            "functionals": {"f": {"C": "1"}}})"),
                    InputError);
    CHECK_THROWS_AS(parse_workspace_text(
                        R"({"dim": 2, "basis": ["A", "B"],
                            "brackets": [{"i": 1, "j": 2, "coeffs": {"1": "1"}},
                                         {"i": 1, "j": 2, "coeffs": {"1": "2"}}]})"),
                    InputError);
    CHECK_THROWS_AS(load_workspace("/nonexistent/path.json"), InputError);
}

TEST_CASE("top-level ell is accepted as a functional") {
    Workspace ws = parse_workspace_text(R"({
        "dim": 3, "basis": ["X", "Y", "Z"],
        "brackets": [ {"i": 1, "j": 2, "coeffs": {"3": "1"}} ],
        "ell": {"Z": "3/2"}
    })");
    CHECK(ws.functional("ell").coords[2] == Rational(3, 2));
}

TEST_CASE("cli: analyze composes the module outputs") {
    CliResult r = run({"analyze", "--algebra", kData + "/heisenberg.json", "--ell", "zstar"});
    CHECK(r.code == 0);
    CHECK(r.out.find("orbit_dim 2") != std::string::npos);
    CHECK(r.out.find("flat true") != std::string::npos);
    CHECK(r.out.find("d_pi 1") != std::string::npos);
    CHECK(r.out.find("pker dim 1") != std::string::npos);
    CHECK(r.out.find("Z") != std::string::npos);
}

TEST_CASE("cli: density on ab2 reports product 2 and the incompleteness verdict") {
    CliResult r = run({"density", "--algebra", kData + "/heisenberg.json", "--ell", "zstar",
                       "--lattice", "ab2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("covol(p(Gamma)) * d_pi = 2") != std::string::npos);
    CHECK(r.out.find("IncompleteByTheorem") != std::string::npos);

    CliResult half = run({"density", "--algebra", kData + "/heisenberg.json", "--ell", "zstar",
                          "--lattice", "abhalf"});
    CHECK(half.code == 0);
    CHECK(half.out.find("= 1/2") != std::string::npos);
    CHECK(half.out.find("NotExcluded") != std::string::npos);
}

TEST_CASE("cli: density on a non-flat orbit exits 3") {
    CliResult r = run({"density", "--algebra", kData + "/engel.json", "--ell", "x4star",
                       "--lattice", "std"});
    CHECK(r.code == 3);
    CHECK(r.err.find("not flat") != std::string::npos);
}

TEST_CASE("cli: validate reports violations and exits 2") {
    // write a broken workspace to a temp file
    const std::string path = "/tmp/orbitlab_broken.json";
    {
        std::ofstream f(path);
        f << R"({"dim": 3, "basis": ["X","Y","Z"],
                 "brackets": [{"i":1,"j":2,"coeffs":{"3":"1"}},
                              {"i":2,"j":1,"coeffs":{"3":"1"}}]})";
    }
    CliResult r = run({"validate", "--algebra", path});
    CHECK(r.code == 2);
    CHECK(r.out.find("VIOLATED") != std::string::npos);

    CliResult ok = run({"validate", "--algebra", kData + "/engel.json"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("class 3") != std::string::npos);
}

TEST_CASE("cli: unknown inputs exit 2") {
    CHECK(run({"analyze", "--algebra", kData + "/heisenberg.json", "--ell", "nope"}).code == 2);
    CHECK(run({"density", "--algebra", kData + "/heisenberg.json", "--ell", "zstar",
               "--lattice", "nope"}).code == 2);
    CHECK(run({"bogus-subcommand"}).code == 2);
    CHECK(run({"analyze", "--algebra", "/missing.json", "--ell", "z"}).code == 2);
}

TEST_CASE("cli: polarize and pker print basis data") {
    CliResult r = run({"polarize", "--algebra", kData + "/heisenberg.json", "--ell", "zstar"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim 2") != std::string::npos);

    CliResult k = run({"pker", "--algebra", kData + "/free2step3.json", "--ell", "z12star"});
    CHECK(k.code == 0);
    CHECK(k.out.find("dim 4") != std::string::npos);
}

TEST_CASE("cli: classify verdict for the engel non-flat orbit") {
    CliResult r = run({"classify", "--algebra", kData + "/engel.json", "--ell", "x4star"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no coherent-state system") != std::string::npos);
}

TEST_CASE("cli: moment map and gabor-finite basics") {
    CliResult m = run({"moment-map", "--lambda", "1", "--eta", "gaussian", "--grid-N", "1024"});
    CHECK(m.code == 0);
    CHECK(m.out.find("J~") != std::string::npos);

    CliResult g = run({"gabor-finite", "--n", "4", "--subgroup", "gen=(1,0)", "--eta", "ones"});
    CHECK(g.code == 0);
    CHECK(g.out.find("rank of the system: 1") != std::string::npos);
    CHECK(g.out.find("incomplete") != std::string::npos);
}

TEST_CASE("cli: json output is stable under reparse-reserialize") {
    for (auto args : std::vector<std::vector<std::string>>{
             {"analyze", "--algebra", kData + "/heisenberg.json", "--ell", "zstar", "--json"},
             {"density", "--algebra", kData + "/heisenberg.json", "--ell", "zstar",
              "--lattice", "ab2", "--json"},
             {"gabor-finite", "--n", "4", "--scan", "--panel", "5", "--json"},
         }) {
        CliResult r = run(args);
        REQUIRE(r.code == 0);
        auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(nlohmann::ordered_json::parse(parsed.dump(2)) == parsed);
    }
}

TEST_CASE("cli: byte-identical output across runs with a fixed seed") {
    std::vector<std::string> args = {"pker", "--algebra", kData + "/engel.json",
                                     "--ell", "x4star", "--seed", "42"};
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: ORBITLAB_SEED is the fallback seed") {
    setenv("ORBITLAB_SEED", "777", 1);
    CliResult a = run({"pker", "--algebra", kData + "/engel.json", "--ell", "x4star"});
    unsetenv("ORBITLAB_SEED");
    CliResult b = run({"pker", "--algebra", kData + "/engel.json", "--ell", "x4star",
                       "--seed", "777"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    setenv("ORBITLAB_SEED", "not-a-number", 1);
    CliResult bad = run({"pker", "--algebra", kData + "/engel.json", "--ell", "x4star"});
    unsetenv("ORBITLAB_SEED");
    CHECK(bad.code == 2);
}

TEST_CASE("cli: subsystem csv dump") {
    CliResult r = run({"subsystem", "--lambda", "1", "--alpha", "2", "--beta", "1",
                       "--grid-N", "1024", "--probes", "6", "--csv",
                       "/tmp/orbitlab_curve.csv"});
    CHECK(r.code == 0);
    std::ifstream csv("/tmp/orbitlab_curve.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "probes,sigma_min");
    int lines = 0;
    for (std::string line; std::getline(csv, line);) ++lines;
    CHECK(lines == 6);
}
