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

#ifndef ORBITLAB_KERNELS_HPP
#define ORBITLAB_KERNELS_HPP

#include <cstdint>
#include <string>

#include "orbitlab/coadjoint.hpp"

namespace orbitlab {

struct KernelAnalysis {
    Subspace pker;   // Lie algebra of pker(pi) = intersection of orbit stabilizers
    bool equals_stabilizer = false;
    int samples_used = 0;
    bool verified = false;

    KernelAnalysis() : pker(0) {}
};

/// Intersection of the stabilizer algebras over orbit samples Ad*(g) ell,
/// with g drawn as exp(t X_i) for t in {1, 1/2} plus seeded random rational
/// combinations, iterated until a full sweep leaves the intersection
/// unchanged. The result is then verified (must be an ideal and must sit
/// inside the stabilizer of 20 fresh orbit points); failure raises an
/// InternalError naming the offending orbit point. Deterministic per seed.
KernelAnalysis projective_kernel(const LieAlgebra& alg, const Functional& ell,
                                 std::uint64_t seed = 1);

enum class RepKind { CoherentState, NotCoherentState, Character };

struct ClassificationVerdict {
    RepKind kind = RepKind::Character;
    bool flat = false;
    int orbit_dim = 0;
    Rational d_pi; // meaningful only for CoherentState
    KernelAnalysis kernel;
    OrbitAnalysis orbit;
    std::string text; // human-readable verdict block
};

/// Combines flatness, projective kernel and formal dimension into the
/// verdict used by the density report. Only connected (Lie-algebra level)
/// kernel data is computed; the verdict text says so.
ClassificationVerdict classify_representation(const LieAlgebra& alg, const Functional& ell,
                                              std::uint64_t seed = 1);

} // namespace orbitlab

#endif
