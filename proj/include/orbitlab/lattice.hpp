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

#ifndef ORBITLAB_LATTICE_HPP
#define ORBITLAB_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orbitlab/coadjoint.hpp"
#include "orbitlab/kernels.hpp"

namespace orbitlab {

/// Uniform subgroup given by one generator per dimension, in log coordinates,
/// declared to be a strong Malcev basis adapted to the lower central series
/// (deepest generators last).
struct LatticeSpec {
    std::vector<GroupElement> generators;
    bool declared_malcev = true;
};

/// Coordinates t with exp(x) = g_1^{t_1} ... g_n^{t_n} (Malcev coordinates of
/// the second kind), obtained by peeling one generator at a time. Throws
/// InputError when the generators are not adapted (a peeled remainder escapes
/// the span of the later generators).
RatVec malcev_coordinates(const LieAlgebra& alg, const LatticeSpec& lattice, const RatVec& x);

/// Subgroup sanity for the declared basis: generator count equals dim,
/// nonsingular log matrix, and every pairwise product and every inverse of
/// generators peels to integer Malcev coordinates. Throws InputError.
void validate_lattice(const LieAlgebra& alg, const LatticeSpec& lattice);

struct CovolumeResult {
    Rational chart_determinant; // |det| of the generator log matrix
    bool exact = false;         // true when nilpotency class <= 2
    double estimate = 0.0;      // Monte-Carlo value (filled when !exact)
    double std_error = 0.0;
    int samples = 0;
    std::string note;
};

/// Covolume under the declared Haar normalization. Exact via the chart
/// determinant for class <= 2; for higher class the value is a Monte-Carlo
/// fundamental-domain estimate with reported confidence.
CovolumeResult covolume(const LieAlgebra& alg, const LatticeSpec& lattice,
                        int mc_samples = 4000, std::uint64_t seed = 1);

/// Monte-Carlo fundamental-domain volume (available for any class; used as a
/// cross-check of the exact path as well).
double covolume_monte_carlo(const LieAlgebra& alg, const LatticeSpec& lattice, int samples,
                            std::uint64_t seed, double* std_error = nullptr);

struct QuotientLattice {
    LieAlgebra quotient;          // structure of g/k in the complement chart
    std::vector<int> complement;  // chart indices, shared with formal_dimension
    LatticeSpec image;            // projected generators in chart coordinates
    Rational covol_quotient;      // exact; requires quotient class <= 2
};

/// Projection of the lattice to G/pker. The generator set must be adapted:
/// the generators lying in the kernel must span it. Throws InputError
/// ("provide a basis adapted to the projective kernel") otherwise.
QuotientLattice project_lattice(const LieAlgebra& alg, const LatticeSpec& lattice,
                                const Subspace& pker);

enum class DensityVerdict { IncompleteByTheorem, NotExcluded };

struct DensityReport {
    Rational covol_G;
    bool covol_G_exact = true;
    Rational covol_quotient; // scaled by the measure-scale parameter
    Rational d_pi;           // divided by the measure-scale parameter
    Rational product;        // covol_quotient * d_pi, scale-invariant
    DensityVerdict verdict = DensityVerdict::NotExcluded;
    std::string normalization_tag = kNormalizationTag;
};

/// Exact density product covol(p(Gamma)) * d_pi with the completeness verdict:
/// product > 1 means every admissible coherent subsystem over this lattice
/// orbit is incomplete; otherwise the density condition does not exclude
/// completeness. Requires a flat orbit of positive dimension
/// (HypothesisError otherwise). `measure_scale` rescales the invariant
/// measure on the quotient; the product is invariant under it.
DensityReport density_report(const LieAlgebra& alg, const Functional& ell,
                             const LatticeSpec& lattice,
                             const Rational& measure_scale = Rational(1),
                             std::uint64_t seed = 1);

} // namespace orbitlab

#endif
