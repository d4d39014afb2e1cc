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

#ifndef ORBITLAB_ALGEBRA_HPP
#define ORBITLAB_ALGEBRA_HPP

#include <array>
#include <string>
#include <vector>

#include "orbitlab/linalg.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

/// Element of the Lie algebra in the fixed structure basis.
struct AlgebraElement {
    RatVec coords;
};

/// Group element g = exp(X) in exponential coordinates of the first kind.
/// exp is a polynomial diffeomorphism for nilpotent groups, so storing logs
/// keeps every group computation rational.
struct GroupElement {
    RatVec log_coords;
};

/// Element of the dual space, value on each basis vector.
struct Functional {
    RatVec coords;
};

struct ValidationReport {
    bool antisymmetry_ok = true;
    bool jacobi_ok = true;
    bool nilpotent = true;
    int nilpotency_class = 0;
    std::vector<std::array<int, 3>> antisymmetry_violations; // 1-based (i,j,k)
    std::vector<std::array<int, 3>> jacobi_violations;       // 1-based (i,j,k)

    bool ok() const { return antisymmetry_ok && jacobi_ok && nilpotent; }
};

/// Nilpotent Lie algebra over the rationals given by structure constants
/// c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k. Immutable after
/// construction; all operations are pure functions, so concurrent read-only
/// use is safe.
class LieAlgebra {
public:
    LieAlgebra(std::vector<std::string> basis_names,
               std::vector<RatMat> structure /* structure[i][j][k] */);

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Rational& c(int i, int j, int k) const { return structure_[i][j][k]; }

    ValidationReport validate() const;
    /// Throws InputError unless validate().ok().
    void require_valid() const;

    RatVec bracket(const RatVec& x, const RatVec& y) const;
    AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Matrix of ad(x): column j holds [x, X_j].
    RatMat ad_matrix(const RatVec& x) const;
    /// Ad(exp x) = e^{ad x}; a finite sum by nilpotency, hence exact.
    RatMat ad_exp(const RatVec& x) const;

    /// Descending chain g = C^1 > C^2 > ... > 0 (the final zero subspace is
    /// included). Throws InputError when the series stabilizes above zero.
    std::vector<Subspace> lower_central_series() const;
    int nilpotency_class() const; // length of the lower central series
    Subspace center() const;
    Subspace derived_subalgebra() const;

    /// Ad*(g) ell = ell o Ad(g)^{-1}, exact.
    Functional coadjoint_action(const GroupElement& g, const Functional& ell) const;

    /// log(exp(x) exp(y)) through the degree-6 Baker-Campbell-Hausdorff
    /// series. Throws InputError for nilpotency class > 6.
    RatVec bch(const RatVec& x, const RatVec& y) const;
    AlgebraElement bch_product(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Same series evaluated in double precision (used by the Monte-Carlo
    /// covolume path, where group points are not rational).
    std::vector<double> bch_numeric(const std::vector<double>& x,
                                    const std::vector<double>& y) const;
    std::vector<double> bracket_numeric(const std::vector<double>& x,
                                        const std::vector<double>& y) const;

private:
    int dim_;
    std::vector<std::string> names_;
    std::vector<RatMat> structure_;
    int cached_class_ = -1; // -1: not nilpotent (or invalid structure)

    void check_element(const RatVec& v, const char* what) const;
};

/// Shipped example algebras; also exercised heavily by the test suite.
LieAlgebra make_heisenberg(int d = 1);               // h_d, dim 2d+1, [X_i, Y_i] = Z
LieAlgebra make_abelian(int n);
LieAlgebra make_engel();                             // [X1,X2]=X3, [X1,X3]=X4
LieAlgebra make_free_two_step(int generators);       // free 2-step on g generators
LieAlgebra make_filiform(int n);                     // [X1,Xi]=X_{i+1}, class n-1

} // namespace orbitlab

#endif
