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

#include "orbitlab/polarization.hpp"

#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"

namespace orbitlab {

std::vector<Subspace> ideal_flag(const LieAlgebra& alg) {
    const int n = alg.dim();
    std::vector<Subspace> lcs = alg.lower_central_series(); // g = C^1 > ... > 0
    std::vector<Subspace> flag;
    Subspace current = Subspace::span(n, {});
    flag.push_back(current);
    // Walk the series from the deepest nonzero term up to g. Any subspace
    // between C^{k+1} and C^k is an ideal, so each one-dimensional extension
    // below stays a flag of ideals.
    for (std::size_t t = lcs.size() - 1; t-- > 0;) {
        const Subspace& target = lcs[t];
        while (current.dim() < target.dim()) {
            bool extended = false;
            for (int i = n - 1; i >= 0 && !extended; --i) {
                RatVec e = rat_zero_vec(n);
                e[i] = Rational(1);
                if (target.contains(e) && !current.contains(e)) {
                    current = current.add(Subspace::span(n, {e}));
                    extended = true;
                }
            }
            if (!extended) {
                for (const RatVec& b : target.basis()) {
                    if (!current.contains(b)) {
                        current = current.add(Subspace::span(n, {b}));
                        extended = true;
                        break;
                    }
                }
            }
            if (!extended) throw InternalError("ideal_flag: cannot extend flag");
            flag.push_back(current);
        }
    }
    return flag;
}

PolarizationResult vergne_polarization(const LieAlgebra& alg, const Functional& ell) {
    alg.require_valid();
    const int n = alg.dim();
    if (static_cast<int>(ell.coords.size()) != n)
        throw InputError("functional dimension mismatch");

    std::vector<Subspace> flag = ideal_flag(alg);
    Subspace p = Subspace::span(n, {});
    for (const Subspace& fj : flag) {
        if (fj.dim() == 0) continue;
        // Stagewise stabilizer: x in F_j with ell([x, F_j]) = 0.
        const RatMat& basis = fj.basis();
        const int m = fj.dim();
        RatMat b(m, rat_zero_vec(m));
        for (int r = 0; r < m; ++r)
            for (int s = 0; s < m; ++s)
                b[r][s] = dot(ell.coords, alg.bracket(basis[r], basis[s]));
        RatMat ker = kernel_basis(b);
        RatMat vectors;
        for (const RatVec& coeff : ker) {
            RatVec v = rat_zero_vec(n);
            for (int r = 0; r < m; ++r)
                if (!coeff[r].is_zero()) v = vec_add(v, vec_scale(coeff[r], basis[r]));
            vectors.push_back(std::move(v));
        }
        p = p.add(Subspace::span(n, std::move(vectors)));
    }

    PolarizationResult out;
    out.subalgebra = p;
    out.ell = ell;

    out.subordinate_ok = true;
    out.closed_ok = true;
    for (const RatVec& a : p.basis()) {
        for (const RatVec& b : p.basis()) {
            RatVec br = alg.bracket(a, b);
            if (dot(ell.coords, br) != Rational(0)) out.subordinate_ok = false;
            if (!p.contains(br)) out.closed_ok = false;
        }
    }
    const int orbit_dim = n - stabilizer(alg, ell).dim();
    out.dimension_ok = p.dim() == n - orbit_dim / 2;

    if (!out.ok())
        throw InternalError("Vergne construction returned an invalid polarization (" +
                            std::string(!out.subordinate_ok ? "not subordinate"
                                        : !out.closed_ok    ? "not a subalgebra"
                                                            : "wrong dimension") +
                            ")");
    return out;
}

std::complex<double> character_eval(const LieAlgebra& alg, const PolarizationResult& pol,
                                    const RatVec& x) {
    if (static_cast<int>(x.size()) != alg.dim())
        throw InputError("character_eval: dimension mismatch");
    if (!pol.subalgebra.contains(x))
        throw InputError("character_eval: element is not in the polarization");
    const double phase = dot(pol.ell.coords, x).fractional_part().to_double();
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

} // namespace orbitlab
