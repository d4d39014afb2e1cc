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

#include "orbitlab/algebra.hpp"

#include <utility>

#include "orbitlab/errors.hpp"

namespace orbitlab {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, std::vector<RatMat> structure)
    : dim_(static_cast<int>(basis_names.size())),
      names_(std::move(basis_names)),
      structure_(std::move(structure)) {
    if (dim_ <= 0) throw InputError("algebra dimension must be positive");
    if (static_cast<int>(structure_.size()) != dim_)
        throw InputError("structure tensor must have shape n x n x n");
    for (const RatMat& plane : structure_) {
        if (static_cast<int>(plane.size()) != dim_)
            throw InputError("structure tensor must have shape n x n x n");
        for (const RatVec& row : plane)
            if (static_cast<int>(row.size()) != dim_)
                throw InputError("structure tensor must have shape n x n x n");
    }
    try {
        cached_class_ = static_cast<int>(lower_central_series().size()) - 1;
    } catch (const InputError&) {
        cached_class_ = -1;
    }
}

void LieAlgebra::check_element(const RatVec& v, const char* what) const {
    if (static_cast<int>(v.size()) != dim_)
        throw InputError(std::string(what) + ": dimension mismatch (expected " +
                         std::to_string(dim_) + ", got " + std::to_string(v.size()) + ")");
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
    check_element(x, "bracket");
    check_element(y, "bracket");
    RatVec out = rat_zero_vec(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Rational f = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                if (!structure_[i][j][k].is_zero()) out[k] += f * structure_[i][j][k];
            }
        }
    }
    return out;
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    return AlgebraElement{bracket(x.coords, y.coords)};
}

RatMat LieAlgebra::ad_matrix(const RatVec& x) const {
    check_element(x, "ad_matrix");
    RatMat m(dim_, rat_zero_vec(dim_));
    for (int j = 0; j < dim_; ++j) {
        RatVec e = rat_zero_vec(dim_);
        e[j] = Rational(1);
        RatVec col = bracket(x, e);
        for (int k = 0; k < dim_; ++k) m[k][j] = col[k];
    }
    return m;
}

RatMat LieAlgebra::ad_exp(const RatVec& x) const {
    RatMat ad = ad_matrix(x);
    RatMat result = rat_identity(dim_);
    RatMat power = rat_identity(dim_);
    Rational factorial(1);
    for (int m = 1; m <= dim_; ++m) {
        power = mat_mul(ad, power);
        bool zero = true;
        for (const RatVec& row : power)
            if (!is_zero_vec(row)) { zero = false; break; }
        if (zero) break;
        factorial *= Rational(m);
        Rational inv = factorial.reciprocal();
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (!power[i][j].is_zero()) result[i][j] += inv * power[i][j];
    }
    return result;
}

ValidationReport LieAlgebra::validate() const {
    ValidationReport rep;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                if (structure_[i][j][k] != -structure_[j][i][k]) {
                    rep.antisymmetry_ok = false;
                    rep.antisymmetry_violations.push_back({i + 1, j + 1, k + 1});
                }
            }
        }
    }
    // Jacobi: [X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] = 0.
    auto basis_vec = [this](int i) {
        RatVec e = rat_zero_vec(dim_);
        e[i] = Rational(1);
        return e;
    };
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            for (int k = j + 1; k < dim_; ++k) {
                RatVec sum = bracket(basis_vec(i), bracket(basis_vec(j), basis_vec(k)));
                sum = vec_add(sum, bracket(basis_vec(j), bracket(basis_vec(k), basis_vec(i))));
                sum = vec_add(sum, bracket(basis_vec(k), bracket(basis_vec(i), basis_vec(j))));
                if (!is_zero_vec(sum)) {
                    rep.jacobi_ok = false;
                    rep.jacobi_violations.push_back({i + 1, j + 1, k + 1});
                }
            }
        }
    }
    if (rep.antisymmetry_ok && rep.jacobi_ok) {
        Subspace current = Subspace::full(dim_);
        int steps = 0;
        while (current.dim() > 0 && steps <= dim_) {
            RatMat next_gens;
            for (int i = 0; i < dim_; ++i) {
                for (const RatVec& b : current.basis()) {
                    RatVec e = rat_zero_vec(dim_);
                    e[i] = Rational(1);
                    next_gens.push_back(bracket(e, b));
                }
            }
            Subspace next = Subspace::span(dim_, std::move(next_gens));
            if (next.dim() == current.dim()) break; // stabilized above zero
            current = next;
            ++steps;
        }
        rep.nilpotent = current.dim() == 0;
        rep.nilpotency_class = rep.nilpotent ? steps : 0;
    } else {
        rep.nilpotent = false;
    }
    return rep;
}

void LieAlgebra::require_valid() const {
    ValidationReport rep = validate();
    if (!rep.ok())
        throw InputError(std::string("algebra failed validation: ") +
                         (!rep.antisymmetry_ok  ? "antisymmetry violated"
                          : !rep.jacobi_ok      ? "Jacobi identity violated"
                                                : "not nilpotent"));
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
    std::vector<Subspace> chain;
    chain.push_back(Subspace::full(dim_));
    while (chain.back().dim() > 0) {
        RatMat gens;
        for (int i = 0; i < dim_; ++i) {
            RatVec e = rat_zero_vec(dim_);
            e[i] = Rational(1);
            for (const RatVec& b : chain.back().basis()) gens.push_back(bracket(e, b));
        }
        Subspace next = Subspace::span(dim_, std::move(gens));
        if (next.dim() == chain.back().dim())
            throw InputError("lower central series stabilizes above zero: algebra is not nilpotent");
        chain.push_back(next);
    }
    return chain;
}

int LieAlgebra::nilpotency_class() const {
    if (cached_class_ < 0)
        throw InputError("nilpotency class undefined: algebra is not nilpotent");
    return cached_class_;
}

Subspace LieAlgebra::center() const {
    // x is central iff ad(X_i) x = 0 for every i: stack the ad matrices.
    RatMat stacked;
    for (int i = 0; i < dim_; ++i) {
        RatVec e = rat_zero_vec(dim_);
        e[i] = Rational(1);
        RatMat ad = ad_matrix(e);
        stacked.insert(stacked.end(), ad.begin(), ad.end());
    }
    return Subspace::span(dim_, kernel_basis(stacked));
}

Subspace LieAlgebra::derived_subalgebra() const {
    RatMat gens;
    for (int i = 0; i < dim_; ++i) {
        for (int j = i + 1; j < dim_; ++j) {
            RatVec ei = rat_zero_vec(dim_), ej = rat_zero_vec(dim_);
            ei[i] = Rational(1);
            ej[j] = Rational(1);
            gens.push_back(bracket(ei, ej));
        }
    }
    return Subspace::span(dim_, std::move(gens));
}

Functional LieAlgebra::coadjoint_action(const GroupElement& g, const Functional& ell) const {
    check_element(g.log_coords, "coadjoint_action");
    check_element(ell.coords, "coadjoint_action");
    // (Ad*(exp x) ell)(v) = ell(e^{-ad x} v): a row-vector times matrix product.
    RatVec neg(dim_);
    for (int i = 0; i < dim_; ++i) neg[i] = -g.log_coords[i];
    return Functional{vec_mat(ell.coords, ad_exp(neg))};
}

AlgebraElement LieAlgebra::bch_product(const AlgebraElement& x, const AlgebraElement& y) const {
    return AlgebraElement{bch(x.coords, y.coords)};
}

// ---------------------------------------------------------------------------
// Shipped algebras.

namespace {

std::vector<RatMat> empty_structure(int n) {
    return std::vector<RatMat>(n, RatMat(n, RatVec(n, Rational(0))));
}

void set_bracket(std::vector<RatMat>& c, int i, int j, int k, Rational v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
}

} // namespace

LieAlgebra make_heisenberg(int d) {
    const int n = 2 * d + 1;
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back(d == 1 ? "X" : "X" + std::to_string(i));
    for (int i = 1; i <= d; ++i) names.push_back(d == 1 ? "Y" : "Y" + std::to_string(i));
    names.push_back("Z");
    auto c = empty_structure(n);
    for (int i = 0; i < d; ++i) set_bracket(c, i, d + i, n - 1, Rational(1));
    return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra make_abelian(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("A" + std::to_string(i));
    return LieAlgebra(std::move(names), empty_structure(n));
}

LieAlgebra make_engel() {
    auto c = empty_structure(4);
    set_bracket(c, 0, 1, 2, Rational(1));
    set_bracket(c, 0, 2, 3, Rational(1));
    return LieAlgebra({"X1", "X2", "X3", "X4"}, std::move(c));
}

LieAlgebra make_free_two_step(int generators) {
    const int g = generators;
    const int n = g + g * (g - 1) / 2;
    std::vector<std::string> names;
    for (int i = 1; i <= g; ++i) names.push_back("X" + std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            pairs.emplace_back(i, j);
            names.push_back("Z" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    auto c = empty_structure(n);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        set_bracket(c, pairs[p].first, pairs[p].second, g + static_cast<int>(p), Rational(1));
    return LieAlgebra(std::move(names), std::move(c));
}

LieAlgebra make_filiform(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    auto c = empty_structure(n);
    for (int i = 1; i + 1 < n; ++i) set_bracket(c, 0, i, i + 1, Rational(1));
    return LieAlgebra(std::move(names), std::move(c));
}

} // namespace orbitlab
