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

#include "orbitlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"

namespace orbitlab {

void fft_in_place(CVec& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw InputError("FFT size must be a power of two, got " + std::to_string(n));
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1 : -1);
        const cdouble wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cdouble w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cdouble u = a[i + j];
                cdouble v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (cdouble& x : a) x /= static_cast<double>(n);
    }
}

std::vector<double> hermitian_eigenvalues(CMat a, CMat* eigenvectors) {
    const std::size_t n = a.size();
    CMat v;
    if (eigenvectors) {
        v.assign(n, CVec(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a[i][j]));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p][q]);
        if (std::sqrt(off) < 1e-14 * scale * static_cast<double>(n)) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a[p][q];
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;
                const cdouble u = apq / mag; // phase
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * mag);
                double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // unitary J: rows/cols p,q of [[c, s*u],[-s*conj(u), c]]
                for (std::size_t k = 0; k < n; ++k) { // A <- J^H A
                    const cdouble akp = a[p][k];
                    const cdouble akq = a[q][k];
                    a[p][k] = c * akp - s * u * akq;
                    a[q][k] = s * std::conj(u) * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) { // A <- A J
                    const cdouble akp = a[k][p];
                    const cdouble akq = a[k][q];
                    a[k][p] = c * akp - s * std::conj(u) * akq;
                    a[k][q] = s * u * akp + c * akq;
                }
                if (eigenvectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cdouble vkp = v[k][p];
                        const cdouble vkq = v[k][q];
                        v[k][p] = c * vkp - s * std::conj(u) * vkq;
                        v[k][q] = s * u * vkp + c * vkq;
                    }
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a[i][i].real() < a[j][j].real(); });
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[order[i]][order[i]].real();
    if (eigenvectors) {
        eigenvectors->assign(n, CVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) (*eigenvectors)[k][i] = v[k][order[i]];
    }
    return eig;
}

CMat gram_matrix(const CMat& cols) {
    const std::size_t k = cols.size();
    CMat g(k, CVec(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            cdouble s = 0.0;
            for (std::size_t r = 0; r < cols[i].size(); ++r)
                s += std::conj(cols[i][r]) * cols[j][r];
            g[i][j] = s;
            g[j][i] = std::conj(s);
        }
    }
    return g;
}

std::vector<double> singular_values_gram(const CMat& cols) {
    std::vector<double> eig = hermitian_eigenvalues(gram_matrix(cols));
    std::vector<double> sv;
    for (auto it = eig.rbegin(); it != eig.rend(); ++it) sv.push_back(std::sqrt(std::max(*it, 0.0)));
    return sv;
}

int qr_rank(CMat cols, double rel_tol) {
    const std::size_t ncols = cols.size();
    if (ncols == 0) return 0;
    const std::size_t m = cols[0].size();
    std::vector<double> norms(ncols);
    auto tail_norm2 = [&](std::size_t j, std::size_t from) {
        double s = 0.0;
        for (std::size_t r = from; r < m; ++r) s += std::norm(cols[j][r]);
        return s;
    };
    double first_pivot = 0.0;
    const std::size_t steps = std::min(m, ncols);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t best = k;
        double best_norm = tail_norm2(k, k);
        for (std::size_t j = k + 1; j < ncols; ++j) {
            double nj = tail_norm2(j, k);
            if (nj > best_norm) {
                best_norm = nj;
                best = j;
            }
        }
        if (best != k) std::swap(cols[k], cols[best]);
        const double alpha = std::sqrt(best_norm);
        if (k == 0) {
            first_pivot = alpha;
            if (first_pivot == 0.0) return 0;
        }
        if (alpha < rel_tol * first_pivot) return static_cast<int>(k);
        // Householder vector zeroing col k below row k.
        CVec v(m - k);
        for (std::size_t r = k; r < m; ++r) v[r - k] = cols[k][r];
        const double x0mag = std::abs(v[0]);
        const cdouble phase = x0mag > 0 ? v[0] / x0mag : cdouble(1.0, 0.0);
        v[0] += phase * alpha;
        double vnorm2 = 0.0;
        for (const cdouble& x : v) vnorm2 += std::norm(x);
        if (vnorm2 == 0.0) continue;
        for (std::size_t j = k; j < ncols; ++j) {
            cdouble dotvx = 0.0;
            for (std::size_t r = k; r < m; ++r) dotvx += std::conj(v[r - k]) * cols[j][r];
            const cdouble f = 2.0 * dotvx / vnorm2;
            for (std::size_t r = k; r < m; ++r) cols[j][r] -= f * v[r - k];
        }
    }
    return static_cast<int>(steps);
}

} // namespace orbitlab
