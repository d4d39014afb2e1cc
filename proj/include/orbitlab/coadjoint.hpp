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

#ifndef ORBITLAB_COADJOINT_HPP
#define ORBITLAB_COADJOINT_HPP

#include <string>
#include <vector>

#include "orbitlab/algebra.hpp"
#include "orbitlab/linalg.hpp"

namespace orbitlab {

/// Haar convention used by every formal dimension and covolume in this
/// library: Lebesgue measure in exponential coordinates of the first kind on
/// G, and on quotients the chart through the greedy standard complement of
/// the projective kernel.
inline constexpr const char* kNormalizationTag =
    "haar=lebesgue-exp-first-kind; quotient-chart=greedy-standard-complement";

/// Skew form B_ij = ell([X_i, X_j]).
RatMat skew_form(const LieAlgebra& alg, const Functional& ell);

/// Annihilator subalgebra g(ell) = ker B, as a canonical subspace.
Subspace stabilizer(const LieAlgebra& alg, const Functional& ell);

/// Flat-orbit test: true iff [g, g(ell)] is contained in g(ell). The result
/// is cross-checked against the affine displacement test
/// Ad*(exp X_i) ell - ell in g(ell)^perp for every basis vector; disagreement
/// raises InternalError.
bool is_flat(const LieAlgebra& alg, const Functional& ell);

struct OrbitAnalysis {
    Subspace stabilizer;
    RatMat skew;
    int orbit_dim = 0; // rank of the skew form, always even
    bool flat = false;
    std::vector<int> complement;  // greedy standard complement of g(ell)
    Rational pfaffian;            // of the skew form on the complement chart
    Rational formal_dimension;    // |pfaffian|; zero when not applicable
    std::string status;           // "square-integrable", "character",
                                  // or "not square-integrable"
    std::string normalization_tag = kNormalizationTag;

    OrbitAnalysis() : stabilizer(0) {}
};

OrbitAnalysis analyze_orbit(const LieAlgebra& alg, const Functional& ell);

struct FormalDimension {
    Rational pfaffian;
    Rational d_pi;
    std::string normalization_tag = kNormalizationTag;
};

/// Formal dimension of the flat-orbit representation seeded by ell, under the
/// declared normalization. Throws HypothesisError on non-flat input
/// ("not square-integrable mod pker") and on zero-dimensional orbits
/// ("character").
FormalDimension formal_dimension(const LieAlgebra& alg, const Functional& ell);

/// Same value computed from an arbitrary basis of an arbitrary complement of
/// g(ell), corrected by the change-of-basis determinant. Used to verify that
/// the reported d_pi does not depend on the complement choice.
Rational formal_dimension_via_complement(const LieAlgebra& alg, const Functional& ell,
                                         const RatMat& complement_basis);

/// Membership of `candidate` in the affine variety ell0 + k^perp, i.e.
/// (candidate - ell0) vanishes on k. Exact.
bool affine_membership(const Functional& ell0, const Subspace& k, const Functional& candidate);

/// Tolerance-based overload for numeric candidates from the moment map.
bool affine_membership_numeric(const Functional& ell0, const Subspace& k,
                               const std::vector<double>& candidate, double tol);

} // namespace orbitlab

#endif
