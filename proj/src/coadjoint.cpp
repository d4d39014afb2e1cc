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

#include "orbitlab/coadjoint.hpp"

#include <cmath>

#include "orbitlab/errors.hpp"

namespace orbitlab {

RatMat skew_form(const LieAlgebra& alg, const Functional& ell) {
    const int n = alg.dim();
    if (static_cast<int>(ell.coords.size()) != n)
        throw InputError("functional dimension mismatch");
    RatMat b(n, rat_zero_vec(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational v(0);
            for (int k = 0; k < n; ++k)
                if (!alg.c(i, j, k).is_zero() && !ell.coords[k].is_zero())
                    v += alg.c(i, j, k) * ell.coords[k];
            b[i][j] = v;
        }
    }
    return b;
}

Subspace stabilizer(const LieAlgebra& alg, const Functional& ell) {
    return Subspace::span(alg.dim(), kernel_basis(skew_form(alg, ell)));
}

namespace {

bool stabilizer_is_ideal(const LieAlgebra& alg, const Subspace& stab) {
    const int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        RatVec e = rat_zero_vec(n);
        e[i] = Rational(1);
        for (const RatVec& s : stab.basis())
            if (!stab.contains(alg.bracket(e, s))) return false;
    }
    return true;
}

bool affine_displacement_ok(const LieAlgebra& alg, const Functional& ell, const Subspace& stab) {
    const int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        RatVec e = rat_zero_vec(n);
        e[i] = Rational(1);
        Functional moved = alg.coadjoint_action(GroupElement{e}, ell);
        RatVec delta = vec_sub(moved.coords, ell.coords);
        for (const RatVec& s : stab.basis())
            if (dot(delta, s) != Rational(0)) return false;
    }
    return true;
}

} // namespace

bool is_flat(const LieAlgebra& alg, const Functional& ell) {
    Subspace stab = stabilizer(alg, ell);
    const bool ideal = stabilizer_is_ideal(alg, stab);
    const bool affine = affine_displacement_ok(alg, ell, stab);
    if (ideal != affine)
        throw InternalError("flatness tests disagree: ideal test says " +
                            std::string(ideal ? "flat" : "non-flat") +
                            " but the affine displacement test says the opposite");
    return ideal;
}

OrbitAnalysis analyze_orbit(const LieAlgebra& alg, const Functional& ell) {
    alg.require_valid();
    OrbitAnalysis out;
    out.skew = skew_form(alg, ell);
    out.stabilizer = Subspace::span(alg.dim(), kernel_basis(out.skew));
    out.orbit_dim = alg.dim() - out.stabilizer.dim();
    if (out.orbit_dim % 2 != 0)
        throw InternalError("odd rank of a skew form");
    out.flat = is_flat(alg, ell);
    out.complement = greedy_standard_complement(out.stabilizer);
    if (out.orbit_dim == 0) {
        out.status = "character";
    } else if (!out.flat) {
        out.status = "not square-integrable";
    } else {
        out.status = "square-integrable";
        const int m = out.orbit_dim;
        RatMat restricted(m, rat_zero_vec(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                restricted[a][b] = out.skew[out.complement[a]][out.complement[b]];
        out.pfaffian = pfaffian(restricted);
        out.formal_dimension = out.pfaffian.abs();
        if (out.formal_dimension.is_zero())
            throw InternalError("vanishing Pfaffian on the complement of the kernel");
    }
    return out;
}

FormalDimension formal_dimension(const LieAlgebra& alg, const Functional& ell) {
    OrbitAnalysis a = analyze_orbit(alg, ell);
    if (a.orbit_dim == 0)
        throw HypothesisError("character, no formal dimension");
    if (!a.flat)
        throw HypothesisError("representation not square-integrable mod pker");
    return FormalDimension{a.pfaffian, a.formal_dimension};
}

Rational formal_dimension_via_complement(const LieAlgebra& alg, const Functional& ell,
                                         const RatMat& complement_basis) {
    OrbitAnalysis a = analyze_orbit(alg, ell);
    if (!a.flat || a.orbit_dim == 0)
        throw HypothesisError("formal dimension undefined for this orbit");
    const int m = a.orbit_dim;
    if (static_cast<int>(complement_basis.size()) != m)
        throw InputError("complement basis must have dim(orbit) vectors");
    // Change of basis between the given complement and the canonical chart,
    // both read modulo the stabilizer.
    RatMat change(m, rat_zero_vec(m));
    for (int r = 0; r < m; ++r)
        change[r] = complement_coordinates(a.stabilizer, a.complement, complement_basis[r]);
    Rational det = determinant(change);
    if (det.is_zero())
        throw InputError("given vectors do not span a complement of the stabilizer");
    RatMat restricted(m, rat_zero_vec(m));
    for (int r = 0; r < m; ++r) {
        RatVec bw = vec_mat(complement_basis[r], a.skew); // row r of W B
        for (int s = 0; s < m; ++s) restricted[r][s] = dot(bw, complement_basis[s]);
    }
    return (pfaffian(restricted) / det).abs();
}

bool affine_membership(const Functional& ell0, const Subspace& k, const Functional& candidate) {
    RatVec delta = vec_sub(candidate.coords, ell0.coords);
    for (const RatVec& s : k.basis())
        if (dot(delta, s) != Rational(0)) return false;
    return true;
}

bool affine_membership_numeric(const Functional& ell0, const Subspace& k,
                               const std::vector<double>& candidate, double tol) {
    for (const RatVec& s : k.basis()) {
        double acc = 0.0;
        for (std::size_t i = 0; i < candidate.size(); ++i)
            acc += (candidate[i] - ell0.coords[i].to_double()) * s[i].to_double();
        if (std::abs(acc) > tol) return false;
    }
    return true;
}

} // namespace orbitlab
