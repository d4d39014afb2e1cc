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

#ifndef ORBITLAB_GRID_HPP
#define ORBITLAB_GRID_HPP

#include <cstdint>

#include "orbitlab/numeric.hpp"

namespace orbitlab {

/// Sampling grid on [-R, R) with N points, N a power of two.
struct GridSpec {
    double half_width = 12.0; // R
    int samples = 4096;       // N

    double step() const { return 2.0 * half_width / samples; }
    double x(int j) const { return -half_width + j * step(); }
    /// FFT bin frequency in cycles per unit (standard wrap-around order).
    double freq(int k) const {
        return (k < samples / 2 ? k : k - samples) / (2.0 * half_width);
    }
    double nyquist() const { return samples / (4.0 * half_width); }
    void validate() const; // N >= 64 even power of two, R >= 4

    bool operator==(const GridSpec&) const = default;
};

/// Complex-valued function sampled on a grid. Values are immutable after
/// construction; the norm is computed once.
class StateVector {
public:
    StateVector(GridSpec grid, CVec samples);

    const GridSpec& grid() const { return grid_; }
    const CVec& samples() const { return samples_; }
    double norm() const { return norm_; } // L2 norm with the h weight
    StateVector normalized() const;

private:
    GridSpec grid_;
    CVec samples_;
    double norm_;
};

/// <f, g> = integral f conj(g) ~ h * sum f_j conj(g_j).
cdouble inner(const StateVector& f, const StateVector& g);

StateVector gaussian_state(const GridSpec& grid);        // 2^{1/4} e^{-pi x^2}, unit norm
StateVector hermite_state(const GridSpec& grid, int k);  // L2-normalized Hermite function
/// Seeded random combination of the first `max_order` Hermite functions
/// (a generic smooth, rapidly decaying vector), unit norm.
StateVector random_smooth_state(const GridSpec& grid, int max_order, std::uint64_t seed);
/// Seeded white-noise samples: not smooth, heavy spectral tails.
StateVector random_rough_state(const GridSpec& grid, std::uint64_t seed);

/// Fraction of spectral mass in the top quarter of frequencies; the
/// smoothness heuristic used before spectral differentiation.
double spectral_tail_fraction(const StateVector& f);

} // namespace orbitlab

#endif
