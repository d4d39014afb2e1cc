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

#ifndef ORBITLAB_WORKSPACE_HPP
#define ORBITLAB_WORKSPACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbitlab/algebra.hpp"
#include "orbitlab/lattice.hpp"

namespace orbitlab {

/// One analysis workspace: an algebra given by rational structure constants
/// together with named functionals and named lattices.
///
/// File schema (JSON):
///   {
///     "name": "heisenberg-h1",
///     "dim": 3,
///     "basis": ["X", "Y", "Z"],
///     "brackets": [ {"i": 1, "j": 2, "coeffs": {"3": "1"}} ],
///     "functionals": { "zstar": {"Z": "1"} },
///     "lattices": { "int": {"generators": [{"X": "1"}, ...], "malcev": true} }
///   }
/// Rationals are "p/q" strings; unspecified brackets and coordinates are
/// zero; the antisymmetric completion c[j][i] = -c[i][j] is applied to
/// brackets given in one order only, and the result is re-validated before
/// any analysis runs.
struct Workspace {
    std::string name;
    LieAlgebra algebra;
    std::vector<std::pair<std::string, Functional>> functionals;
    std::vector<std::pair<std::string, LatticeSpec>> lattices;

    const Functional& functional(const std::string& fname) const;
    const LatticeSpec& lattice(const std::string& lname) const;
};

Workspace load_workspace(const std::string& path);
Workspace parse_workspace_text(const std::string& text, const std::string& origin = "<inline>");

/// "2*X + 1/2*Z"-style rendering in the algebra's basis names.
std::string format_element(const LieAlgebra& alg, const RatVec& coords);
/// Same for functionals, with starred names: "3/2*Z*".
std::string format_functional(const LieAlgebra& alg, const RatVec& coords);
std::vector<std::string> format_subspace(const LieAlgebra& alg, const Subspace& s);

} // namespace orbitlab

#endif
