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

#include "orbitlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "orbitlab/errors.hpp"

namespace orbitlab {

void GridSpec::validate() const {
    if (samples < 64 || (samples & (samples - 1)) != 0)
        throw InputError("grid samples must be a power of two >= 64");
    if (half_width < 4.0) throw InputError("grid half-width must be >= 4");
}

StateVector::StateVector(GridSpec grid, CVec samples)
    : grid_(grid), samples_(std::move(samples)) {
    grid_.validate();
    if (static_cast<int>(samples_.size()) != grid_.samples)
        throw InputError("state vector length does not match the grid");
    double s = 0.0;
    for (const cdouble& v : samples_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw InputError("state vector has non-finite entries");
        s += std::norm(v);
    }
    norm_ = std::sqrt(s * grid_.step());
}

StateVector StateVector::normalized() const {
    if (norm_ == 0.0) throw InputError("cannot normalize the zero state");
    CVec scaled = samples_;
    for (cdouble& v : scaled) v /= norm_;
    return StateVector(grid_, std::move(scaled));
}

cdouble inner(const StateVector& f, const StateVector& g) {
    if (!(f.grid() == g.grid())) throw InputError("inner product across different grids");
    cdouble s = 0.0;
    for (std::size_t j = 0; j < f.samples().size(); ++j)
        s += f.samples()[j] * std::conj(g.samples()[j]);
    return s * f.grid().step();
}

StateVector gaussian_state(const GridSpec& grid) {
    CVec v(grid.samples);
    const double c = std::pow(2.0, 0.25);
    for (int j = 0; j < grid.samples; ++j) {
        const double x = grid.x(j);
        v[j] = c * std::exp(-std::numbers::pi * x * x);
    }
    return StateVector(grid, std::move(v));
}

StateVector hermite_state(const GridSpec& grid, int k) {
    if (k < 0) throw InputError("hermite order must be nonnegative");
    // normalized recurrence on phi_k(u) = H_k(u) e^{-u^2/2} / sqrt(2^k k! sqrt(pi)),
    // evaluated at u = sqrt(2 pi) x and rescaled to unit L2 norm on the line.
    CVec v(grid.samples);
    const double scale = std::pow(2.0 * std::numbers::pi, 0.25);
    for (int j = 0; j < grid.samples; ++j) {
        const double u = std::sqrt(2.0 * std::numbers::pi) * grid.x(j);
        double prev = 0.0;
        double cur = std::exp(-0.5 * u * u) / std::pow(std::numbers::pi, 0.25);
        for (int m = 0; m < k; ++m) {
            double next = std::sqrt(2.0 / (m + 1)) * u * cur -
                          std::sqrt(static_cast<double>(m) / (m + 1)) * prev;
            prev = cur;
            cur = next;
        }
        v[j] = scale * cur;
    }
    return StateVector(grid, std::move(v));
}

StateVector random_smooth_state(const GridSpec& grid, int max_order, std::uint64_t seed) {
    if (max_order <= 0) throw InputError("need at least one Hermite component");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVec acc(grid.samples, 0.0);
    for (int k = 0; k < max_order; ++k) {
        const cdouble c(gauss(rng), gauss(rng));
        StateVector hk = hermite_state(grid, k);
        for (int j = 0; j < grid.samples; ++j) acc[j] += c * hk.samples()[j];
    }
    return StateVector(grid, std::move(acc)).normalized();
}

StateVector random_rough_state(const GridSpec& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVec v(grid.samples);
    for (cdouble& x : v) x = cdouble(gauss(rng), gauss(rng));
    return StateVector(grid, std::move(v)).normalized();
}

double spectral_tail_fraction(const StateVector& f) {
    CVec hat = f.samples();
    fft_in_place(hat, false);
    double total = 0.0, tail = 0.0;
    const int n = f.grid().samples;
    for (int k = 0; k < n; ++k) {
        const double m = std::norm(hat[k]);
        total += m;
        const int dist = std::min(k, n - k); // distance from DC in wrap order
        if (dist > n / 4) tail += m;
    }
    return total > 0 ? tail / total : 0.0;
}

} // namespace orbitlab
