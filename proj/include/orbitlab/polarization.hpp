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

#ifndef ORBITLAB_POLARIZATION_HPP
#define ORBITLAB_POLARIZATION_HPP

#include <complex>

#include "orbitlab/algebra.hpp"
#include "orbitlab/coadjoint.hpp"
#include "orbitlab/linalg.hpp"

namespace orbitlab {

struct PolarizationResult {
    Subspace subalgebra; // p
    Functional ell;      // seed functional; chi_ell(exp x) = e^{2 pi i ell(x)} on p
    bool subordinate_ok = false;
    bool dimension_ok = false;
    bool closed_ok = false;

    PolarizationResult() : subalgebra(0) {}
    bool ok() const { return subordinate_ok && dimension_ok && closed_ok; }
};

/// Full flag of ideals 0 = F_0 < F_1 < ... < F_n = g refining the lower
/// central series. Each step stays sandwiched between consecutive series
/// terms, which makes every member an ideal; within a layer, standard basis
/// vectors are tried in descending index order, then echelon basis vectors
/// of the layer. Deterministic.
std::vector<Subspace> ideal_flag(const LieAlgebra& alg);

/// Vergne polarization p = sum_j ker(B_ell restricted to F_j). The three
/// defining properties (subordination, subalgebra closure, dimension
/// dim p = dim g - dim(orbit)/2) are verified exactly before returning;
/// failure raises InternalError.
PolarizationResult vergne_polarization(const LieAlgebra& alg, const Functional& ell);

/// chi_ell(exp x) = e^{2 pi i ell(x)} for x in p (membership checked exactly;
/// throws InputError otherwise). The rational argument is reduced mod 1
/// before evaluating, so integral values give exactly 1.
std::complex<double> character_eval(const LieAlgebra& alg, const PolarizationResult& pol,
                                    const RatVec& x);

} // namespace orbitlab

#endif
