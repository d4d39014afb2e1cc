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

#include "orbitlab/schrodinger.hpp"

#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"
#include "orbitlab/kernels.hpp"

namespace orbitlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_nonzero(const Rational& lambda) {
    if (lambda.is_zero()) throw InputError("lambda must be nonzero");
}

CVec spectral_derivative(const StateVector& f) {
    CVec hat = f.samples();
    fft_in_place(hat, false);
    const int n = f.grid().samples;
    for (int k = 0; k < n; ++k) hat[k] *= cdouble(0.0, kTwoPi * f.grid().freq(k));
    fft_in_place(hat, true);
    return hat;
}

// dpi columns: [dpi(X) eta, dpi(Y) eta, dpi(Z) eta]
CMat derived_rep_columns(double lambda, const StateVector& eta) {
    const int n = eta.grid().samples;
    CMat cols(3, CVec(n));
    cols[0] = spectral_derivative(eta);
    for (int j = 0; j < n; ++j) {
        cols[1][j] = cdouble(0.0, kTwoPi * lambda * eta.grid().x(j)) * eta.samples()[j];
        cols[2][j] = cdouble(0.0, kTwoPi * lambda) * eta.samples()[j];
    }
    return cols;
}

Functional lambda_zstar(const Rational& lambda) {
    return Functional{{Rational(0), Rational(0), lambda}};
}

} // namespace

HeisenbergPoint heisenberg_mul(const HeisenbergPoint& a, const HeisenbergPoint& b) {
    return {a.p + b.p, a.q + b.q, a.t + b.t - a.q * b.p};
}

std::array<double, 3> to_first_kind_log(const HeisenbergPoint& g) {
    return {g.p, g.q, g.t + 0.5 * g.p * g.q};
}

HeisenbergPoint from_first_kind_log(const std::array<double, 3>& log) {
    return {log[0], log[1], log[2] - 0.5 * log[0] * log[1]};
}

StateVector apply_pi(const Rational& lambda, const HeisenbergPoint& g, const StateVector& f) {
    require_nonzero(lambda);
    const GridSpec& grid = f.grid();
    const double lam = lambda.to_double();
    if (std::abs(g.p) > grid.half_width / 2.0 + 1e-12)
        throw InputError("translation outside the safe window |p| <= R/2");
    if (std::abs(lam * g.q) > 0.95 * grid.nyquist())
        throw InputError("modulation frequency exceeds the grid Nyquist limit");

    // translation f(x + p) by Fourier shift
    CVec hat = f.samples();
    fft_in_place(hat, false);
    const int n = grid.samples;
    for (int k = 0; k < n; ++k) hat[k] *= std::polar(1.0, kTwoPi * grid.freq(k) * g.p);
    fft_in_place(hat, true);

    // modulation and the central + section phase: the composite operator is
    // e^{2 pi i lambda t} T_p M_q, whose kernel is
    // e^{2 pi i lambda (t + q p)} e^{2 pi i lambda q x} f(x + p).
    const double phase0 = kTwoPi * lam * (g.t + g.q * g.p);
    for (int j = 0; j < n; ++j)
        hat[j] *= std::polar(1.0, phase0 + kTwoPi * lam * g.q * grid.x(j));
    return StateVector(grid, std::move(hat));
}

MomentMapResult moment_map(const Rational& lambda, const StateVector& eta) {
    require_nonzero(lambda);
    if (eta.norm() == 0.0) throw InputError("moment map of the zero vector");
    MomentMapResult out;
    out.tail_warning = spectral_tail_fraction(eta) > 1e-8;
    const double lam = lambda.to_double();
    CMat cols = derived_rep_columns(lam, eta);
    const double n2 = eta.norm() * eta.norm();
    for (int a = 0; a < 3; ++a) {
        // <dpi(A) eta, eta> is purely imaginary for skew-adjoint dpi(A);
        // (1/i) z has real part imag(z).
        cdouble pairing = 0.0;
        for (std::size_t j = 0; j < cols[a].size(); ++j)
            pairing += cols[a][j] * std::conj(eta.samples()[j]);
        pairing *= eta.grid().step();
        out.raw[a] = pairing.imag() / n2;
        out.normalized[a] = out.raw[a] / kTwoPi;
    }
    return out;
}

SymplecticOrbitReport symplectic_orbit_test(const Rational& lambda, const StateVector& eta) {
    require_nonzero(lambda);
    SymplecticOrbitReport out;
    out.moment = moment_map(lambda, eta);

    LieAlgebra h1 = make_heisenberg(1);
    Functional ell = lambda_zstar(lambda);
    Subspace pker = projective_kernel(h1, ell).pker;
    out.pker_dim = pker.dim();

    std::vector<double> jt(out.moment.normalized.begin(), out.moment.normalized.end());
    out.membership_pass = affine_membership_numeric(ell, pker, jt, 1e-6);

    // numeric stabilizer of J~: kernel of B_ij = sum_k c_ijk J~_k
    CMat cols(3, CVec(3, 0.0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double v = 0.0;
            for (int k = 0; k < 3; ++k)
                if (!h1.c(i, j, k).is_zero()) v += h1.c(i, j, k).to_double() * jt[k];
            cols[j][i] = v; // column j of B
        }
    std::vector<double> sv = singular_values_gram(cols);
    const double scale = std::max(sv.empty() ? 0.0 : sv[0], std::abs(lambda.to_double()));
    int rank = 0;
    for (double s : sv)
        if (s > 1e-8 * scale) ++rank;
    out.numeric_stabilizer_dim = 3 - rank;
    out.stabilizer_pass = out.numeric_stabilizer_dim == out.pker_dim;
    return out;
}

ComplexOrbitReport complex_orbit_test(const Rational& lambda, const StateVector& eta) {
    require_nonzero(lambda);
    if (eta.norm() == 0.0) throw InputError("complex orbit test of the zero vector");
    ComplexOrbitReport out;
    const double lam = lambda.to_double();
    CMat cols = derived_rep_columns(lam, eta);

    const std::vector<double> sv_full = singular_values_gram(cols);
    const double scale = sv_full.empty() ? 1.0 : sv_full[0];

    // project out the eta component of each column
    const double n2 = eta.norm() * eta.norm();
    CMat perp = cols;
    for (int a = 0; a < 3; ++a) {
        cdouble coef = 0.0;
        for (std::size_t j = 0; j < perp[a].size(); ++j)
            coef += perp[a][j] * std::conj(eta.samples()[j]);
        coef *= eta.grid().step() / n2;
        for (std::size_t j = 0; j < perp[a].size(); ++j)
            perp[a][j] -= coef * eta.samples()[j];
    }

    CMat vecs;
    std::vector<double> eig = hermitian_eigenvalues(gram_matrix(perp), &vecs);
    const double tol = 1e-6 * scale;
    CMat kernel_dirs; // coefficient vectors in C^3
    for (std::size_t i = 0; i < eig.size(); ++i) {
        const double sigma = std::sqrt(std::max(eig[i], 0.0));
        out.residuals.push_back(sigma);
        if (sigma < tol) {
            CVec dir(3);
            for (int r = 0; r < 3; ++r) dir[r] = vecs[r][i];
            kernel_dirs.push_back(std::move(dir));
        }
    }
    out.dim_s = static_cast<int>(kernel_dirs.size());

    CMat spanned = kernel_dirs;
    for (const CVec& v : kernel_dirs) {
        CVec c(3);
        for (int r = 0; r < 3; ++r) c[r] = std::conj(v[r]);
        spanned.push_back(std::move(c));
    }
    out.dim_s_plus_conj = spanned.empty() ? 0 : qr_rank(spanned, 1e-6);
    out.complex_orbit = out.dim_s_plus_conj == 3;
    return out;
}

double admissibility_constant(const Rational& lambda, const StateVector& eta) {
    require_nonzero(lambda);
    if (std::abs(eta.norm() - 1.0) > 1e-9)
        throw InputError("admissibility quadrature requires a unit-normalized vector");
    const GridSpec& grid = eta.grid();
    const double lam = std::abs(lambda.to_double());
    if (lam * grid.half_width / 2.0 > 0.95 * grid.nyquist())
        throw InputError("modulation range exceeds the grid Nyquist limit; refine the grid");

    const int n = grid.samples;
    const int max_shift = n / 4; // p = s*h in [-R/2, R/2]
    const double h = grid.step();
    const double dxi = 1.0 / (2.0 * grid.half_width);
    const double q_limit = grid.half_width / 2.0;

    double total = 0.0;
    double outer_band = 0.0;
    const double band_start = 0.9 * (grid.half_width / 2.0);
    CVec g(n);
    for (int s = -max_shift; s <= max_shift; ++s) {
        for (int j = 0; j < n; ++j) {
            int shifted = j + s;
            shifted = ((shifted % n) + n) % n;
            g[j] = eta.samples()[j] * std::conj(eta.samples()[shifted]);
        }
        fft_in_place(g, false);
        // |A(p, q)| = h |FFT(g)_m| at q = xi_m / lambda
        double row = 0.0;
        for (int m = 0; m < n; ++m) {
            const double q = grid.freq(m) / lam;
            if (std::abs(q) > q_limit) continue;
            row += std::norm(g[m]);
        }
        row *= h * h;                 // |A|^2 with the quadrature weight of x
        const double p = std::abs(s) * h;
        const double w = row * h * (dxi / lam); // dp dq cell
        total += w;
        if (p > band_start) outer_band += w;
    }
    if (total <= 0.0) throw InputError("matrix coefficient quadrature vanished");
    if (outer_band / total > 1e-6)
        throw InputError("matrix coefficient does not decay within the quadrature window");
    return 1.0 / total;
}

SubsystemReport subsystem_completeness(const Rational& lambda, double alpha, double beta,
                                       const StateVector& eta, int probe_count,
                                       Section section) {
    require_nonzero(lambda);
    if (alpha <= 0 || beta <= 0) throw InputError("lattice parameters must be positive");
    SubsystemReport out;
    if (probe_count == 0) {
        out.note = "empty probe set";
        return out;
    }
    if (probe_count < 0) throw InputError("probe count must be nonnegative");

    const GridSpec& grid = eta.grid();
    const double window = grid.half_width / 2.0;
    const double lam = std::abs(lambda.to_double());
    const int qmax = static_cast<int>(std::floor(window / beta));
    if (lam * beta * qmax > 0.9 * grid.nyquist())
        throw InputError("grid too coarse for the requested beta: modulation aliasing");

    StateVector window_state = eta.normalized();
    const int pmax = static_cast<int>(std::floor(window / alpha));
    std::vector<StateVector> states;
    for (int jp = -pmax; jp <= pmax; ++jp) {
        for (int jq = -qmax; jq <= qmax; ++jq) {
            const double p = alpha * jp;
            const double q = beta * jq;
            HeisenbergPoint point{p, q, section == Section::PQ ? 0.0 : -p * q};
            states.push_back(apply_pi(lambda, point, window_state));
        }
    }
    out.lattice_points = static_cast<int>(states.size());
    if (out.lattice_points < probe_count) {
        out.note = "fewer lattice points than probes; window too small";
        out.signal = SubsystemSignal::Inconclusive;
        return out;
    }

    // Analysis matrix: rows indexed by lattice points, columns by probes.
    CMat probe_cols(probe_count, CVec(states.size()));
    for (int i = 0; i < probe_count; ++i) {
        StateVector probe = hermite_state(grid, i);
        for (std::size_t r = 0; r < states.size(); ++r)
            probe_cols[i][r] = inner(probe, states[r]);
    }
    CMat gram = gram_matrix(probe_cols);
    for (int m = 1; m <= probe_count; ++m) {
        CMat leading(m, CVec(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) leading[i][j] = gram[i][j];
        std::vector<double> eig = hermitian_eigenvalues(leading);
        out.probe_counts.push_back(m);
        out.sigma_min.push_back(std::sqrt(std::max(eig.front(), 0.0)));
    }

    // A shallow probe set cannot see a deficiency subspace at all (every
    // observed collapse for the shipped densities starts around the tenth
    // Hermite probe), so completeness is never declared below this depth.
    constexpr int kMinProbesForCompleteness = 12;
    const double last = out.sigma_min.back();
    const double threshold = 1e-4;
    if (last < threshold) {
        out.signal = SubsystemSignal::Incompleteness;
        out.note = "smallest singular value decays to " + std::to_string(last) +
                   " across probe truncations";
    } else {
        const std::size_t sz = out.sigma_min.size();
        const double anchor = sz >= 3 ? out.sigma_min[sz - 3] : out.sigma_min.front();
        if (probe_count < kMinProbesForCompleteness) {
            out.signal = SubsystemSignal::Inconclusive;
            out.note = "probe set too shallow to certify a completeness signal; "
                       "increase the probe count";
        } else if (last >= 0.5 * anchor) {
            out.signal = SubsystemSignal::Completeness;
            out.note = "smallest singular value stabilizes above the 1e-4 threshold";
        } else {
            out.signal = SubsystemSignal::Inconclusive;
            out.note = "singular values above threshold but still decaying";
        }
    }
    return out;
}

} // namespace orbitlab
