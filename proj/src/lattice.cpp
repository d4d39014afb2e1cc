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

#include "orbitlab/lattice.hpp"

#include <cmath>
#include <random>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

RatMat generator_log_matrix(const LieAlgebra& alg, const LatticeSpec& lattice) {
    const int n = alg.dim();
    if (static_cast<int>(lattice.generators.size()) != n)
        throw InputError("lattice must have exactly dim(g) generators, got " +
                         std::to_string(lattice.generators.size()));
    RatMat logs(n, rat_zero_vec(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lattice.generators[i].log_coords.size()) != n)
            throw InputError("lattice generator dimension mismatch");
        logs[i] = lattice.generators[i].log_coords;
    }
    return logs;
}

// Solve x = sum_k beta_k logs_k exactly.
RatVec solve_in_log_basis(const RatMat& logs, const RatVec& x) {
    const int n = static_cast<int>(logs.size());
    RatMat sys(n, RatVec(static_cast<std::size_t>(n) + 1, Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) sys[r][c] = logs[c][r];
        sys[r][n] = x[r];
    }
    std::vector<int> pivots;
    int rank = rref_in_place(sys, &pivots);
    if (rank < n) throw InputError("lattice generator log matrix is singular");
    RatVec beta(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < rank; ++r) beta[pivots[r]] = sys[r][n];
    return beta;
}

} // namespace

RatVec malcev_coordinates(const LieAlgebra& alg, const LatticeSpec& lattice, const RatVec& x) {
    const int n = alg.dim();
    RatMat logs = generator_log_matrix(alg, lattice);
    RatVec remaining = x;
    RatVec t(static_cast<std::size_t>(n), Rational(0));
    for (int k = 0; k < n; ++k) {
        RatVec beta = solve_in_log_basis(logs, remaining);
        for (int j = 0; j < k; ++j)
            if (!beta[j].is_zero())
                throw InputError(
                    "generators are not adapted to the lower central series "
                    "(Malcev peeling failed at generator " + std::to_string(k + 1) + ")");
        t[k] = beta[k];
        if (!t[k].is_zero())
            remaining = alg.bch(vec_scale(-t[k], logs[k]), remaining);
    }
    if (!is_zero_vec(remaining))
        throw InternalError("Malcev peeling left a nonzero remainder");
    return t;
}

void validate_lattice(const LieAlgebra& alg, const LatticeSpec& lattice) {
    RatMat logs = generator_log_matrix(alg, lattice);
    if (determinant(logs).is_zero())
        throw InputError("lattice generator log matrix is singular");
    auto expect_integer_word = [&](const RatVec& x, const std::string& what) {
        RatVec t = malcev_coordinates(alg, lattice, x);
        for (const Rational& c : t)
            if (!c.is_integer())
                throw InputError("lattice is not closed: " + what +
                                 " has non-integer Malcev coordinate " + c.to_string());
    };
    const int n = alg.dim();
    for (int i = 0; i < n; ++i) {
        expect_integer_word(vec_scale(Rational(-1), logs[i]),
                            "inverse of generator " + std::to_string(i + 1));
        for (int j = 0; j < n; ++j)
            expect_integer_word(alg.bch(logs[i], logs[j]),
                                "product of generators " + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1));
    }
}

double covolume_monte_carlo(const LieAlgebra& alg, const LatticeSpec& lattice, int samples,
                            std::uint64_t seed, double* std_error) {
    const int n = alg.dim();
    RatMat logs = generator_log_matrix(alg, lattice);
    std::vector<std::vector<double>> logs_d(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) logs_d[i][j] = logs[i][j].to_double();

    // phi(t) = log(g_1^{t_1} ... g_n^{t_n}); the covolume is the volume of
    // phi([0,1)^n) in first-kind coordinates, estimated as E |det Dphi|.
    auto phi = [&](const std::vector<double>& t) {
        std::vector<double> acc(n, 0.0);
        for (int k = 0; k < n; ++k) {
            std::vector<double> step(n);
            for (int j = 0; j < n; ++j) step[j] = t[k] * logs_d[k][j];
            acc = alg.bch_numeric(acc, step);
        }
        return acc;
    };
    auto det_double = [n](std::vector<std::vector<double>> m) {
        double det = 1.0;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
            if (m[piv][c] == 0.0) return 0.0;
            if (piv != c) {
                std::swap(m[piv], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (int r = c + 1; r < n; ++r) {
                double f = m[r][c] / m[c][c];
                for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            }
        }
        return det;
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double h = 1e-5;
    double sum = 0.0, sumsq = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::vector<double> t(n);
        for (double& x : t) x = unif(rng);
        std::vector<std::vector<double>> jac(n, std::vector<double>(n));
        for (int k = 0; k < n; ++k) {
            std::vector<double> tp = t, tm = t;
            tp[k] += h;
            tm[k] -= h;
            std::vector<double> fp = phi(tp), fm = phi(tm);
            for (int r = 0; r < n; ++r) jac[r][k] = (fp[r] - fm[r]) / (2 * h);
        }
        double v = std::abs(det_double(jac));
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / samples;
    if (std_error) {
        double var = sumsq / samples - mean * mean;
        *std_error = std::sqrt(std::max(var, 0.0) / samples);
    }
    return mean;
}

CovolumeResult covolume(const LieAlgebra& alg, const LatticeSpec& lattice, int mc_samples,
                        std::uint64_t seed) {
    alg.require_valid();
    if (!lattice.declared_malcev)
        throw InputError("covolume requires generators declared as a strong Malcev basis");
    validate_lattice(alg, lattice);
    CovolumeResult out;
    out.chart_determinant = determinant(generator_log_matrix(alg, lattice)).abs();
    if (alg.nilpotency_class() <= 2) {
        out.exact = true;
        out.estimate = out.chart_determinant.to_double();
        out.note = "exact (class <= 2)";
    } else {
        out.exact = false;
        out.samples = mc_samples;
        out.estimate = covolume_monte_carlo(alg, lattice, mc_samples, seed, &out.std_error);
        out.note = "Monte-Carlo estimate (class >= 3: chart determinant not certified exact)";
    }
    return out;
}

QuotientLattice project_lattice(const LieAlgebra& alg, const LatticeSpec& lattice,
                                const Subspace& pker) {
    const int n = alg.dim();
    RatMat logs = generator_log_matrix(alg, lattice);

    // The kernel must be an ideal for G/pker to be a group.
    for (int i = 0; i < n; ++i) {
        RatVec e = rat_zero_vec(n);
        e[i] = Rational(1);
        for (const RatVec& b : pker.basis())
            if (!pker.contains(alg.bracket(e, b)))
                throw InputError("projective kernel subspace is not an ideal");
    }

    std::vector<int> inside, outside;
    for (int i = 0; i < n; ++i)
        (pker.contains(logs[i]) ? inside : outside).push_back(i);
    if (static_cast<int>(inside.size()) != pker.dim())
        throw InputError("provide a basis adapted to the projective kernel: " +
                         std::to_string(inside.size()) + " generators lie in the kernel but its dimension is " +
                         std::to_string(pker.dim()));
    RatMat kernel_logs;
    for (int i : inside) kernel_logs.push_back(logs[i]);
    if (Subspace::span(n, kernel_logs) != pker)
        throw InputError("provide a basis adapted to the projective kernel: "
                         "in-kernel generators do not span it");

    const std::vector<int> complement = greedy_standard_complement(pker);
    const int m = static_cast<int>(complement.size());

    // Quotient structure constants in complement coordinates. exp commutes
    // with the quotient map, so chart coordinates of projected points are the
    // linear complement coordinates of their logs.
    std::vector<RatMat> qc(m, RatMat(m, rat_zero_vec(m)));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            RatVec ea = rat_zero_vec(n), eb = rat_zero_vec(n);
            ea[complement[a]] = Rational(1);
            eb[complement[b]] = Rational(1);
            qc[a][b] = complement_coordinates(pker, complement, alg.bracket(ea, eb));
        }
    }
    std::vector<std::string> names;
    for (int i : complement) names.push_back(alg.basis_names()[i]);
    LieAlgebra quotient(std::move(names), std::move(qc));
    quotient.require_valid();

    LatticeSpec image;
    image.declared_malcev = lattice.declared_malcev;
    RatMat image_logs;
    for (int i : outside) {
        RatVec coords = complement_coordinates(pker, complement, logs[i]);
        image.generators.push_back(GroupElement{coords});
        image_logs.push_back(std::move(coords));
    }
    validate_lattice(quotient, image);

    QuotientLattice out{std::move(quotient), complement, std::move(image), Rational(0)};
    if (out.quotient.nilpotency_class() > 2)
        throw HypothesisError("exact quotient covolume unsupported: G/pker has nilpotency "
                              "class above 2");
    out.covol_quotient = determinant(image_logs).abs();
    return out;
}

DensityReport density_report(const LieAlgebra& alg, const Functional& ell,
                             const LatticeSpec& lattice, const Rational& measure_scale,
                             std::uint64_t seed) {
    if (measure_scale.sign() <= 0) throw InputError("measure scale must be positive");
    OrbitAnalysis orbit = analyze_orbit(alg, ell);
    if (orbit.orbit_dim == 0)
        throw HypothesisError("density criterion undefined for characters "
                              "(zero-dimensional orbit)");
    if (!orbit.flat)
        throw HypothesisError("orbit is not flat: the density criterion requires a "
                              "representation square-integrable modulo its projective kernel");

    KernelAnalysis kernel = projective_kernel(alg, ell, seed);
    CovolumeResult cv = covolume(alg, lattice);
    QuotientLattice q = project_lattice(alg, lattice, kernel.pker);

    DensityReport out;
    out.covol_G = cv.chart_determinant;
    out.covol_G_exact = cv.exact;
    out.covol_quotient = q.covol_quotient * measure_scale;
    out.d_pi = orbit.formal_dimension / measure_scale;
    out.product = out.covol_quotient * out.d_pi;
    out.verdict = out.product > Rational(1) ? DensityVerdict::IncompleteByTheorem
                                            : DensityVerdict::NotExcluded;
    return out;
}

} // namespace orbitlab
