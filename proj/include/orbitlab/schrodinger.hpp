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

#ifndef ORBITLAB_SCHRODINGER_HPP
#define ORBITLAB_SCHRODINGER_HPP

#include <array>
#include <string>
#include <vector>

#include "orbitlab/grid.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

/// Group point g = exp(pX) exp(qY) exp(tZ) of the 3-dimensional Heisenberg
/// group (coordinates of the second kind).
struct HeisenbergPoint {
    double p = 0.0;
    double q = 0.0;
    double t = 0.0;
};

/// Group law in (p, q, t) coordinates: (p,q,t)*(p',q',t') =
/// (p+p', q+q', t+t'-q p').
HeisenbergPoint heisenberg_mul(const HeisenbergPoint& a, const HeisenbergPoint& b);
/// Conversions to/from exponential coordinates of the first kind
/// (log = (a, b, c) meaning exp(aX + bY + cZ)).
std::array<double, 3> to_first_kind_log(const HeisenbergPoint& g);
HeisenbergPoint from_first_kind_log(const std::array<double, 3>& log);

/// pi_lambda(p,q,t) f = e^{2 pi i lambda t} T_p M_q f with (T_p f)(x) = f(x+p)
/// and (M_q f)(x) = e^{2 pi i lambda q x} f(x); the composite picks up the
/// phase e^{2 pi i lambda q p}, which makes pi a genuine homomorphism for the
/// declared coordinates. Translation by Fourier shift (periodic).
/// Requires |p| <= R/2 and modulation below the grid Nyquist frequency.
StateVector apply_pi(const Rational& lambda, const HeisenbergPoint& g, const StateVector& f);

struct MomentMapResult {
    std::array<double, 3> normalized; // J~ = J / (2 pi), values on (X, Y, Z)
    std::array<double, 3> raw;        // J as defined by the 1/i pairing
    bool tail_warning = false;        // heavy spectral tails detected
};

/// Moment map of pi_lambda at eta: J(A) = (1/i) <dpi(A) eta, eta> / <eta,eta>
/// with dpi(X) = d/dx (spectral), dpi(Y) = 2 pi i lambda x, dpi(Z) = 2 pi i
/// lambda. Reported in the normalized form J~ = J/(2 pi), which lands on the
/// coadjoint orbit of lambda Z*.
MomentMapResult moment_map(const Rational& lambda, const StateVector& eta);

struct SymplecticOrbitReport {
    MomentMapResult moment;
    bool membership_pass = false; // J~ in lambda Z* + k^perp within 1e-6
    int numeric_stabilizer_dim = 0;
    int pker_dim = 0;
    bool stabilizer_pass = false;
    bool pass() const { return membership_pass && stabilizer_pass; }
};

/// Computable surrogate of the symplectic-orbit criterion for smooth vectors
/// of the discretized representation.
SymplecticOrbitReport symplectic_orbit_test(const Rational& lambda, const StateVector& eta);

struct ComplexOrbitReport {
    int dim_s = 0;           // dim of s_[eta] inside the complexified algebra
    int dim_s_plus_conj = 0; // dim of s_[eta] + conj(s_[eta])
    bool complex_orbit = false;
    std::vector<double> residuals; // singular values behind the kernel decision
};

/// Finds the complex directions (a,b,c) with a dpi(X)eta + b dpi(Y)eta +
/// c dpi(Z)eta in C*eta via least squares (relative residual < 1e-6);
/// verdict "complex orbit" iff the conjugate-closed span is everything.
ComplexOrbitReport complex_orbit_test(const Rational& lambda, const StateVector& eta);

/// Reciprocal of the quadrature of |<eta, pi(p,q,0) eta>|^2 over the
/// complement chart |p|, |q| <= R/2 (trapezoid; unit-normalized eta
/// required). Matches the exact Pfaffian value |lambda| within 1e-3 relative
/// for Schwartz-class windows. Throws InputError when the matrix coefficient
/// has not decayed inside the window.
double admissibility_constant(const Rational& lambda, const StateVector& eta);

/// Cross-section of G -> G/Z used to index coherent subsystems.
enum class Section {
    PQ, // sigma(p,q) = exp(pX) exp(qY)
    QP, // sigma(p,q) = exp(qY) exp(pX): differs by a central phase only
};

enum class SubsystemSignal { Completeness, Incompleteness, Inconclusive };

struct SubsystemReport {
    std::vector<int> probe_counts;  // m = 1..probe_count
    std::vector<double> sigma_min;  // smallest singular value per truncation
    SubsystemSignal signal = SubsystemSignal::Inconclusive;
    int lattice_points = 0;
    std::string note;
};

/// Completeness indicator for the coherent subsystem over alpha Z x beta Z
/// (truncated to the grid window): the analysis map f -> (<f, pi(sigma(gamma))
/// eta>)_gamma restricted to the span of the first m Hermite probes, reported
/// through its smallest singular value for m = 1..probe_count. Decay to zero
/// across the probe truncations signals incompleteness; stabilization above
/// 1e-4 signals completeness. Finite grids cannot certify completeness in
/// L2(R); this is an indicator, the exact finite-dimensional statement lives
/// in the finite Weyl-Heisenberg module.
SubsystemReport subsystem_completeness(const Rational& lambda, double alpha, double beta,
                                       const StateVector& eta, int probe_count,
                                       Section section = Section::PQ);

} // namespace orbitlab

#endif
