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

#ifndef ORBITLAB_NUMERIC_HPP
#define ORBITLAB_NUMERIC_HPP

#include <complex>
#include <vector>

namespace orbitlab {

using cdouble = std::complex<double>;
using CVec = std::vector<cdouble>;
using CMat = std::vector<CVec>; // used both row-major and as column lists; see call sites

/// In-place radix-2 FFT; size must be a power of two. Forward transform is
/// unnormalized, the inverse divides by the size.
void fft_in_place(CVec& a, bool inverse);

/// Eigenvalues (ascending) of a Hermitian matrix by cyclic complex Jacobi
/// rotations. If `eigenvectors` is given, its columns receive the
/// corresponding eigenvectors.
std::vector<double> hermitian_eigenvalues(CMat a, CMat* eigenvectors = nullptr);

/// Gram matrix G[i][j] = <cols[j], cols[i]> = sum_r conj(cols[i][r]) cols[j][r].
CMat gram_matrix(const CMat& cols);

/// Singular values (descending) of the matrix whose columns are `cols`,
/// via the Gram matrix; adequate when thresholds stay above sqrt(machine eps).
std::vector<double> singular_values_gram(const CMat& cols);

/// Numerical rank via Householder QR with column pivoting: counts diagonal
/// entries |R_kk| >= rel_tol * |R_00|. Columns are consumed by value.
/// Safe for thresholds far below sqrt(machine eps), unlike the Gram route.
int qr_rank(CMat cols, double rel_tol);

} // namespace orbitlab

#endif
