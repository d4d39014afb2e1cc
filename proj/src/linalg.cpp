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

#include "orbitlab/linalg.hpp"

#include <algorithm>

#include "orbitlab/errors.hpp"

namespace orbitlab {

RatMat rat_identity(int n) {
    RatMat m(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

RatVec rat_zero_vec(int n) { return RatVec(static_cast<std::size_t>(n), Rational(0)); }

bool is_zero_vec(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

RatVec vec_mat(const RatVec& v, const RatMat& m) {
    if (m.empty()) return {};
    RatVec out(m[0].size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (!m[i][j].is_zero()) out[j] += v[i] * m[i][j];
        }
    }
    return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    RatMat out(a.size(), RatVec(b.empty() ? 0 : b[0].size(), Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < out[i].size(); ++j) {
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scale(const Rational& c, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

int rref_in_place(RatMat& m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Rational inv = m[rank][col].reciprocal();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        if (pivots) pivots->push_back(static_cast<int>(col));
        ++rank;
    }
    m.resize(rank);
    return static_cast<int>(rank);
}

RatMat kernel_basis(const RatMat& a) {
    if (a.empty()) return {};
    const int n = static_cast<int>(a[0].size());
    RatMat m = a;
    std::vector<int> pivots;
    rref_in_place(m, &pivots);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    RatMat out;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVec x = rat_zero_vec(n);
        x[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
        out.push_back(std::move(x));
    }
    return out;
}

Rational determinant(RatMat a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].reciprocal();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

Rational pfaffian(RatMat a) {
    const std::size_t n = a.size();
    if (n == 0) return Rational(1);
    if (n % 2 == 1) return Rational(0);
    Rational result(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        while (piv < n && a[k][piv].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k + 1) {
            // Congruence swap of rows and columns k+1 <-> piv flips the sign.
            std::swap(a[k + 1], a[piv]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k + 1], a[i][piv]);
            result = -result;
        }
        Rational element = a[k][k + 1];
        result *= element;
        Rational inv = element.reciprocal();
        for (std::size_t i = k + 2; i < n; ++i) {
            Rational tau = a[k][i] * inv;
            if (tau.is_zero()) continue;
            // Row/column update i -= tau * (row/column k+1), a congruence with
            // unit determinant, leaving the Pfaffian unchanged.
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= tau * a[k + 1][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= tau * a[j][k + 1];
        }
    }
    return result;
}

Subspace Subspace::span(int ambient, RatMat vectors) {
    Subspace s(ambient);
    rref_in_place(vectors);
    s.basis_ = std::move(vectors);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s(ambient);
    s.basis_ = rat_identity(ambient);
    return s;
}

bool Subspace::contains(const RatVec& v) const {
    RatVec r = v;
    for (const RatVec& b : basis_) {
        int p = 0;
        while (b[p].is_zero()) ++p; // RREF rows are nonzero with leading 1
        if (!r[p].is_zero()) {
            Rational f = r[p];
            for (int j = 0; j < ambient_; ++j) r[j] -= f * b[j];
        }
    }
    return is_zero_vec(r);
}

bool Subspace::contains_subspace(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const RatVec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

RatMat Subspace::annihilator() const {
    if (basis_.empty()) return rat_identity(ambient_);
    return kernel_basis(basis_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    RatMat constraints = annihilator();
    RatMat more = other.annihilator();
    constraints.insert(constraints.end(), more.begin(), more.end());
    if (constraints.empty()) return Subspace::full(ambient_);
    return Subspace::span(ambient_, kernel_basis(constraints));
}

Subspace Subspace::add(const Subspace& other) const {
    RatMat all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return Subspace::span(ambient_, std::move(all));
}

std::vector<int> greedy_standard_complement(const Subspace& s) {
    const int n = s.ambient();
    std::vector<int> out;
    RatMat work = s.basis();
    int rank = static_cast<int>(work.size());
    for (int i = 0; i < n && rank < n; ++i) {
        RatMat trial = work;
        RatVec e = rat_zero_vec(n);
        e[i] = Rational(1);
        trial.push_back(std::move(e));
        if (rref_in_place(trial) > rank) {
            out.push_back(i);
            work = std::move(trial);
            ++rank;
        }
    }
    return out;
}

RatVec complement_coordinates(const Subspace& s, const std::vector<int>& complement,
                              const RatVec& v) {
    const int n = s.ambient();
    // Solve v = s-part + sum_a t_a e_{complement[a]} by elimination on the
    // stacked system [basis^T | e_I^T] t = v.
    RatMat sys(n, RatVec());
    const int m = s.dim();
    const int k = static_cast<int>(complement.size());
    for (int r = 0; r < n; ++r) {
        RatVec row(static_cast<std::size_t>(m + k) + 1, Rational(0));
        for (int c = 0; c < m; ++c) row[c] = s.basis()[c][r];
        for (int c = 0; c < k; ++c)
            if (complement[c] == r) row[m + c] = Rational(1);
        row[m + k] = v[r];
        sys[r] = std::move(row);
    }
    std::vector<int> pivots;
    int rank = rref_in_place(sys, &pivots);
    RatVec coeff(static_cast<std::size_t>(m + k), Rational(0));
    for (int r = 0; r < rank; ++r) {
        if (pivots[r] == m + k)
            throw InternalError("complement_coordinates: vector outside the direct sum");
        coeff[pivots[r]] = sys[r][m + k];
    }
    return RatVec(coeff.begin() + m, coeff.end());
}

} // namespace orbitlab
