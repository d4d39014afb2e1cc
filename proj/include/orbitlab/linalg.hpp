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

#ifndef ORBITLAB_LINALG_HPP
#define ORBITLAB_LINALG_HPP

#include <vector>

#include "orbitlab/rational.hpp"

namespace orbitlab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

RatMat rat_identity(int n);
RatVec rat_zero_vec(int n);
bool is_zero_vec(const RatVec& v);

RatVec mat_vec(const RatMat& m, const RatVec& v);   // m * v (column vector)
RatVec vec_mat(const RatVec& v, const RatMat& m);   // v^T * m (row vector)
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rational& c, const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);

/// In-place reduced row echelon form. Returns the rank; if `pivots` is given
/// it receives the pivot column of each nonzero row.
int rref_in_place(RatMat& m, std::vector<int>* pivots = nullptr);

/// Basis of { x : A x = 0 }, one vector per row of the result.
RatMat kernel_basis(const RatMat& a);

Rational determinant(RatMat a);

/// Pfaffian of a skew-symmetric matrix by exact elimination
/// (Parlett-Reid with first-nonzero pivoting, all congruences rational).
/// Returns 0 for odd dimension or singular input.
Rational pfaffian(RatMat a);

/// A linear subspace of Q^n held in canonical form: the basis rows are the
/// RREF of any spanning set, so two subspaces are equal iff their
/// representations compare equal element-wise.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}
    static Subspace span(int ambient, RatMat vectors);
    static Subspace full(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const RatMat& basis() const { return basis_; }

    bool contains(const RatVec& v) const;
    bool contains_subspace(const Subspace& other) const;
    bool operator==(const Subspace& other) const;
    bool operator!=(const Subspace& other) const { return !(*this == other); }

    Subspace intersect(const Subspace& other) const;
    Subspace add(const Subspace& other) const;
    /// Basis of the annihilator { f : f(v) = 0 for all v in the space }.
    RatMat annihilator() const;

private:
    int ambient_;
    RatMat basis_; // RREF rows
};

/// Indices of the first standard basis vectors that extend `s` to all of Q^n,
/// chosen greedily in index order.
std::vector<int> greedy_standard_complement(const Subspace& s);

/// Coordinates of v in the decomposition Q^n = s (+) span{e_i : i in
/// complement}; returns the complement coordinates (the s-component is
/// discarded). Throws InternalError if the decomposition is not direct.
RatVec complement_coordinates(const Subspace& s, const std::vector<int>& complement,
                              const RatVec& v);

} // namespace orbitlab

#endif
