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

#include "orbitlab/workspace.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
    throw InputError(origin + ": " + msg);
}

Rational parse_rational(const json& v, const std::string& origin, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const InputError& e) {
            fail(origin, where + ": " + e.what());
        }
    }
    fail(origin, where + ": expected an integer or a \"p/q\" string");
}

int basis_index(const std::vector<std::string>& names, const std::string& key,
                const std::string& origin, const std::string& where) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == key) return static_cast<int>(i);
    fail(origin, where + ": unknown basis name '" + key + "'");
}

RatVec parse_coordinate_map(const json& obj, const std::vector<std::string>& names,
                            const std::string& origin, const std::string& where) {
    if (!obj.is_object()) fail(origin, where + ": expected an object of coordinates");
    RatVec coords = rat_zero_vec(static_cast<int>(names.size()));
    for (const auto& [key, value] : obj.items())
        coords[basis_index(names, key, origin, where)] =
            parse_rational(value, origin, where + "." + key);
    return coords;
}

Workspace parse_workspace_json(const json& doc, const std::string& origin) {
    if (!doc.is_object()) fail(origin, "top-level JSON must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        fail(origin, "missing integer field 'dim'");
    const int dim = doc["dim"].get<int>();
    if (dim <= 0) fail(origin, "'dim' must be positive");
    if (!doc.contains("basis") || !doc["basis"].is_array() ||
        static_cast<int>(doc["basis"].size()) != dim)
        fail(origin, "'basis' must list exactly dim names");
    std::vector<std::string> names;
    for (const auto& b : doc["basis"]) {
        if (!b.is_string()) fail(origin, "basis names must be strings");
        names.push_back(b.get<std::string>());
    }
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        fail(origin, "basis names must be unique");

    std::vector<RatMat> c(dim, RatMat(dim, rat_zero_vec(dim)));
    std::set<std::pair<int, int>> given;
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) fail(origin, "'brackets' must be an array");
        for (const auto& entry : doc["brackets"]) {
            if (!entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
                fail(origin, "each bracket needs fields i, j, coeffs");
            const int i = entry["i"].get<int>();
            const int j = entry["j"].get<int>();
            if (i < 1 || i > dim || j < 1 || j > dim || i == j)
                fail(origin, "bracket indices must be distinct and within 1..dim");
            if (!given.insert({i, j}).second)
                fail(origin, "bracket (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") specified twice");
            if (!entry["coeffs"].is_object()) fail(origin, "bracket coeffs must be an object");
            for (const auto& [key, value] : entry["coeffs"].items()) {
                int k = 0;
                try {
                    k = std::stoi(key);
                } catch (...) {
                    fail(origin, "bracket coefficient keys must be 1-based indices");
                }
                if (k < 1 || k > dim) fail(origin, "bracket coefficient index out of range");
                c[i - 1][j - 1][k - 1] =
                    parse_rational(value, origin, "bracket (" + std::to_string(i) + "," +
                                                      std::to_string(j) + ")");
            }
        }
        // antisymmetric completion for pairs given in one order only
        for (const auto& [i, j] : given) {
            if (given.count({j, i})) continue;
            for (int k = 0; k < dim; ++k) c[j - 1][i - 1][k] = -c[i - 1][j - 1][k];
        }
    }

    Workspace ws{doc.value("name", origin), LieAlgebra(names, std::move(c)), {}, {}};

    auto add_functional = [&](const std::string& fname, const json& obj) {
        for (const auto& [existing, unused] : ws.functionals) {
            (void)unused;
            if (existing == fname) fail(origin, "duplicate functional name '" + fname + "'");
        }
        ws.functionals.emplace_back(
            fname, Functional{parse_coordinate_map(obj, names, origin,
                                                   "functional '" + fname + "'")});
    };
    if (doc.contains("functionals")) {
        if (!doc["functionals"].is_object()) fail(origin, "'functionals' must be an object");
        for (const auto& [fname, obj] : doc["functionals"].items()) add_functional(fname, obj);
    }
    if (doc.contains("ell")) add_functional("ell", doc["ell"]);

    if (doc.contains("lattices")) {
        if (!doc["lattices"].is_object()) fail(origin, "'lattices' must be an object");
        for (const auto& [lname, obj] : doc["lattices"].items()) {
            for (const auto& [existing, unused] : ws.lattices) {
                (void)unused;
                if (existing == lname) fail(origin, "duplicate lattice name '" + lname + "'");
            }
            if (!obj.contains("generators") || !obj["generators"].is_array())
                fail(origin, "lattice '" + lname + "' needs a 'generators' array");
            LatticeSpec spec;
            spec.declared_malcev = obj.value("malcev", true);
            for (const auto& gen : obj["generators"])
                spec.generators.push_back(GroupElement{parse_coordinate_map(
                    gen, names, origin, "lattice '" + lname + "' generator")});
            ws.lattices.emplace_back(lname, std::move(spec));
        }
    }
    return ws;
}

} // namespace

const Functional& Workspace::functional(const std::string& fname) const {
    for (const auto& [n, f] : functionals)
        if (n == fname) return f;
    throw InputError("no functional named '" + fname + "' in workspace '" + name + "'");
}

const LatticeSpec& Workspace::lattice(const std::string& lname) const {
    for (const auto& [n, l] : lattices)
        if (n == lname) return l;
    throw InputError("no lattice named '" + lname + "' in workspace '" + name + "'");
}

Workspace load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open workspace file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse_workspace_json(doc, path);
}

Workspace parse_workspace_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": " + e.what());
    }
    return parse_workspace_json(doc, origin);
}

std::string format_element(const LieAlgebra& alg, const RatVec& coords) {
    std::string out;
    for (int i = 0; i < alg.dim(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (coords[i] == Rational(1))
            out += alg.basis_names()[i];
        else
            out += coords[i].to_string() + "*" + alg.basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

std::string format_functional(const LieAlgebra& alg, const RatVec& coords) {
    std::string out;
    for (int i = 0; i < alg.dim(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (coords[i] == Rational(1))
            out += alg.basis_names()[i] + "*";
        else
            out += coords[i].to_string() + "*" + alg.basis_names()[i] + "*";
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> format_subspace(const LieAlgebra& alg, const Subspace& s) {
    std::vector<std::string> out;
    for (const RatVec& b : s.basis()) out.push_back(format_element(alg, b));
    return out;
}

} // namespace orbitlab
