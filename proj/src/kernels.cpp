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

#include "orbitlab/kernels.hpp"

#include <random>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

RatVec random_rational_combination(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long long> num(-3, 3);
    std::uniform_int_distribution<long long> den(1, 3);
    RatVec v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

std::string describe_point(const LieAlgebra& alg, const RatVec& log) {
    std::string s = "exp(";
    bool first = true;
    for (int i = 0; i < alg.dim(); ++i) {
        if (log[i].is_zero()) continue;
        if (!first) s += " + ";
        s += log[i].to_string() + "*" + alg.basis_names()[i];
        first = false;
    }
    if (first) s += "0";
    return s + ")";
}

} // namespace

KernelAnalysis projective_kernel(const LieAlgebra& alg, const Functional& ell,
                                 std::uint64_t seed) {
    alg.require_valid();
    const int n = alg.dim();
    if (static_cast<int>(ell.coords.size()) != n)
        throw InputError("functional dimension mismatch");

    std::mt19937_64 rng(seed);
    KernelAnalysis out;
    Subspace current = stabilizer(alg, ell);
    Subspace base = current;
    int samples = 0;

    auto intersect_at = [&](const RatVec& group_log) {
        Functional moved = alg.coadjoint_action(GroupElement{group_log}, ell);
        current = current.intersect(stabilizer(alg, moved));
        ++samples;
    };

    // Fixed first sweep: exp(t X_i) for t in {1, 1/2}, then seeded random
    // combinations; further sweeps of fresh random points until one leaves
    // the intersection untouched.
    for (int i = 0; i < n; ++i) {
        for (const Rational& t : {Rational(1), Rational(1, 2)}) {
            RatVec log = rat_zero_vec(n);
            log[i] = t;
            intersect_at(log);
        }
    }
    for (int k = 0; k < 40; ++k) intersect_at(random_rational_combination(rng, n));
    for (;;) {
        Subspace before = current;
        for (int k = 0; k < 40; ++k) intersect_at(random_rational_combination(rng, n));
        if (current == before) break;
    }

    // Verification sweep: ideal property plus 20 fresh orbit points.
    for (int i = 0; i < n; ++i) {
        RatVec e = rat_zero_vec(n);
        e[i] = Rational(1);
        for (const RatVec& b : current.basis())
            if (!current.contains(alg.bracket(e, b)))
                throw InternalError("projective kernel sampling insufficient: "
                                    "intersection is not an ideal");
    }
    for (int k = 0; k < 20; ++k) {
        RatVec log = random_rational_combination(rng, n);
        Functional moved = alg.coadjoint_action(GroupElement{log}, ell);
        if (!stabilizer(alg, moved).contains_subspace(current))
            throw InternalError("projective kernel sampling insufficient at orbit point " +
                                describe_point(alg, log));
    }

    out.pker = current;
    out.equals_stabilizer = current == base;
    out.samples_used = samples;
    out.verified = true;
    return out;
}

ClassificationVerdict classify_representation(const LieAlgebra& alg, const Functional& ell,
                                              std::uint64_t seed) {
    ClassificationVerdict v;
    v.orbit = analyze_orbit(alg, ell);
    v.kernel = projective_kernel(alg, ell, seed);
    v.flat = v.orbit.flat;
    v.orbit_dim = v.orbit.orbit_dim;
    if (v.orbit_dim == 0) {
        v.kind = RepKind::Character;
        v.text = "character: the coadjoint orbit is a point; no formal dimension";
    } else if (v.flat) {
        v.kind = RepKind::CoherentState;
        v.d_pi = v.orbit.formal_dimension;
        v.text = "coherent-state representation based on the coadjoint orbit; "
                 "H = pker(pi) with dim " + std::to_string(v.kernel.pker.dim()) +
                 " (connected Lie-algebra data only); d_pi = " + v.d_pi.to_string();
    } else {
        v.kind = RepKind::NotCoherentState;
        v.text = "no coherent-state system based on a G-space homeomorphic to the "
                 "coadjoint orbit: the orbit is not flat";
    }
    return v;
}

} // namespace orbitlab
