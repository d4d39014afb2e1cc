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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orbitlab/coadjoint.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/schrodinger.hpp"

using namespace orbitlab;

namespace {

const GridSpec kGrid{12.0, 4096};
const GridSpec kSmallGrid{12.0, 2048};

double dist(const StateVector& a, const StateVector& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.samples().size(); ++j)
        s += std::norm(a.samples()[j] - b.samples()[j]);
    return std::sqrt(s * a.grid().step());
}

HeisenbergPoint rational_point(const Rational& p, const Rational& q, const Rational& t) {
    return HeisenbergPoint{p.to_double(), q.to_double(), t.to_double()};
}

// exact Ad*(g) on h1 evaluated in doubles, for the equivariance checks
std::array<double, 3> coadjoint_numeric(const LieAlgebra& h1, const Rational& p,
                                        const Rational& q, const Rational& t,
                                        const std::array<double, 3>& ell) {
    // first-kind log of exp(pX) exp(qY) exp(tZ)
    RatVec log = {p, q, t + p * q * Rational(1, 2)};
    RatVec neg = vec_scale(Rational(-1), log);
    RatMat m = h1.ad_exp(neg);
    std::array<double, 3> out{};
    for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) acc += ell[i] * m[i][j].to_double();
        out[j] = acc;
    }
    return out;
}

} // namespace

TEST_CASE("identity acts trivially") {
    StateVector eta = gaussian_state(kGrid);
    StateVector out = apply_pi(Rational(1), {0, 0, 0}, eta);
    CHECK(dist(out, eta) < 1e-12);
}

TEST_CASE("central character: t = 1/2 at lambda = 1 flips the sign") {
    StateVector eta = gaussian_state(kGrid);
    StateVector out = apply_pi(Rational(1), {0, 0, 0.5}, eta);
    for (int j = 0; j < kGrid.samples; j += 97)
        CHECK(std::abs(out.samples()[j] + eta.samples()[j]) < 1e-12);
}

TEST_CASE("unitarity within 1e-10 on the safe window") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> up(-5.5, 5.5), uq(-3.0, 3.0), ut(-1.0, 1.0);
    for (const Rational& lambda : {Rational(1), Rational(3, 2)}) {
        StateVector eta = random_smooth_state(kGrid, 8, 72);
        for (int iter = 0; iter < 15; ++iter) {
            HeisenbergPoint g{up(rng), uq(rng), ut(rng)};
            StateVector out = apply_pi(lambda, g, eta);
            CHECK(std::abs(out.norm() - eta.norm()) < 1e-10 * eta.norm());
        }
    }
}

TEST_CASE("group law: pi(g) pi(g') = pi(g g') within 1e-8") {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> up(-2.0, 2.0), ut(-1.0, 1.0);
    StateVector eta = random_smooth_state(kGrid, 6, 74);
    for (const Rational& lambda : {Rational(1), Rational(2)}) {
        for (int iter = 0; iter < 12; ++iter) {
            HeisenbergPoint g{up(rng), up(rng), ut(rng)};
            HeisenbergPoint h{up(rng), up(rng), ut(rng)};
            StateVector lhs = apply_pi(lambda, g, apply_pi(lambda, h, eta));
            StateVector rhs = apply_pi(lambda, heisenberg_mul(g, h), eta);
            CHECK(dist(lhs, rhs) < 1e-8);
        }
    }
}

TEST_CASE("group law through the exact BCH product") {
    // multiply two points via first-kind logs and the h1 BCH series; the
    // operators must agree with direct composition
    LieAlgebra h1 = make_heisenberg(1);
    StateVector eta = gaussian_state(kGrid);
    HeisenbergPoint g{1.25, -0.5, 0.3};
    HeisenbergPoint h{-0.75, 1.5, -0.2};
    auto glog = to_first_kind_log(g);
    auto hlog = to_first_kind_log(h);
    std::vector<double> bch = h1.bch_numeric({glog[0], glog[1], glog[2]},
                                             {hlog[0], hlog[1], hlog[2]});
    HeisenbergPoint gh = from_first_kind_log({bch[0], bch[1], bch[2]});
    StateVector lhs = apply_pi(Rational(1), g, apply_pi(Rational(1), h, eta));
    StateVector rhs = apply_pi(Rational(1), gh, eta);
    CHECK(dist(lhs, rhs) < 1e-8);
}

TEST_CASE("commutator phase: pi(X) pi(Y) pi(X)^-1 pi(Y)^-1 = e^{2 pi i lambda}") {
    for (const Rational& lambda : {Rational(1, 3), Rational(3, 2)}) {
        StateVector eta = random_smooth_state(kGrid, 5, 75);
        // rightmost operator acts first
        StateVector got = apply_pi(lambda, {1, 0, 0},
                                   apply_pi(lambda, {0, 1, 0},
                                            apply_pi(lambda, {-1, 0, 0},
                                                     apply_pi(lambda, {0, -1, 0}, eta))));
        const cdouble phase = std::polar(1.0, 2.0 * std::acos(-1.0) * lambda.to_double());
        CVec scaled = eta.samples();
        for (cdouble& v : scaled) v *= phase;
        StateVector target(kGrid, std::move(scaled));
        CHECK(dist(got, target) < 1e-8);
    }
}

TEST_CASE("translations outside the window and aliasing modulations error out") {
    StateVector eta = gaussian_state(kGrid);
    CHECK_THROWS_AS(apply_pi(Rational(1), {7.0, 0, 0}, eta), InputError);
    CHECK_THROWS_AS(apply_pi(Rational(60), {0.0, 2.0, 0}, eta), InputError);
    CHECK_THROWS_AS(apply_pi(Rational(0), {0.0, 0.0, 0}, eta), InputError);
}

TEST_CASE("moment map of the Gaussian is (0, 0, lambda)") {
    StateVector eta = gaussian_state(kGrid);
    for (const Rational& lambda : {Rational(1), Rational(3, 2)}) {
        MomentMapResult j = moment_map(lambda, eta);
        CHECK(std::abs(j.normalized[0]) < 1e-8);
        CHECK(std::abs(j.normalized[1]) < 1e-8);
        CHECK(std::abs(j.normalized[2] - lambda.to_double()) < 1e-10);
        CHECK(!j.tail_warning);
    }
}

TEST_CASE("moment map of a translated Gaussian: J~(Y) = lambda a") {
    const double a = 1.75;
    for (const Rational& lambda : {Rational(1), Rational(2)}) {
        // eta(x - a) = (pi(exp(-a X)) eta)(x)
        StateVector eta = gaussian_state(kGrid);
        StateVector moved = apply_pi(lambda, {-a, 0, 0}, eta);
        MomentMapResult j = moment_map(lambda, moved);
        CHECK(std::abs(j.normalized[1] - lambda.to_double() * a) < 1e-6);
        CHECK(std::abs(j.normalized[0]) < 1e-6);
    }
}

TEST_CASE("heavy spectral tails raise the warning flag") {
    MomentMapResult j = moment_map(Rational(1), random_rough_state(kGrid, 83));
    CHECK(j.tail_warning);
}

TEST_CASE("J~(Z) = lambda for any vector") {
    std::mt19937_64 rng(76);
    for (int iter = 0; iter < 10; ++iter) {
        StateVector eta = random_smooth_state(kGrid, 10, rng());
        MomentMapResult j = moment_map(Rational(5, 4), eta);
        CHECK(std::abs(j.normalized[2] - 1.25) < 1e-10);
    }
}

TEST_CASE("moment map equivariance against the exact coadjoint action") {
    LieAlgebra h1 = make_heisenberg(1);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(2, 4);
    const Rational lambda(1);
    int done = 0;
    while (done < 50) {
        Rational p(num(rng), den(rng)), q(num(rng), den(rng)), t(num(rng), den(rng));
        StateVector eta = random_smooth_state(kGrid, 8, 1000 + done);
        StateVector moved = apply_pi(lambda, rational_point(p, q, t), eta);
        MomentMapResult lhs = moment_map(lambda, moved);
        MomentMapResult base = moment_map(lambda, eta);
        std::array<double, 3> rhs = coadjoint_numeric(h1, p, q, t, base.normalized);
        for (int i = 0; i < 3; ++i) CHECK(std::abs(lhs.normalized[i] - rhs[i]) < 1e-6);
        ++done;
    }
}

TEST_CASE("moment image lies on the flat orbit lambda Z* + k^perp") {
    LieAlgebra h1 = make_heisenberg(1);
    const Rational lambda(1);
    Functional ell{{Rational(0), Rational(0), lambda}};
    Subspace k = stabilizer(h1, ell);
    for (int iter = 0; iter < 50; ++iter) {
        StateVector eta = random_smooth_state(kGrid, 9, 2000 + iter);
        MomentMapResult j = moment_map(lambda, eta);
        std::vector<double> jt(j.normalized.begin(), j.normalized.end());
        CHECK(affine_membership_numeric(ell, k, jt, 1e-6));
    }
}

TEST_CASE("symplectic orbit test passes for smooth vectors") {
    CHECK(symplectic_orbit_test(Rational(1), gaussian_state(kGrid)).pass());
    CHECK(symplectic_orbit_test(Rational(1), hermite_state(kGrid, 3)).pass());
    SymplecticOrbitReport r =
        symplectic_orbit_test(Rational(2), random_smooth_state(kGrid, 7, 81));
    CHECK(r.pass());
    CHECK(r.moment.normalized[2] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(r.pker_dim == 1);
}

TEST_CASE("complex orbit dichotomy") {
    ComplexOrbitReport gauss = complex_orbit_test(Rational(1), gaussian_state(kGrid));
    CHECK(gauss.dim_s == 2);
    CHECK(gauss.dim_s_plus_conj == 3);
    CHECK(gauss.complex_orbit);

    ComplexOrbitReport h1 = complex_orbit_test(Rational(1), hermite_state(kGrid, 1));
    CHECK(h1.dim_s == 1);
    CHECK(h1.dim_s_plus_conj == 1);
    CHECK(!h1.complex_orbit);

    ComplexOrbitReport rough = complex_orbit_test(Rational(1), random_rough_state(kGrid, 82));
    CHECK(rough.dim_s == 1);
    CHECK(rough.dim_s_plus_conj == 1);
    CHECK(!rough.complex_orbit);

    // lambda != 1 keeps the Gaussian verdict
    ComplexOrbitReport g32 = complex_orbit_test(Rational(3, 2), gaussian_state(kGrid));
    CHECK(g32.complex_orbit);
}

TEST_CASE("admissibility constant matches the exact formal dimension") {
    StateVector gauss = gaussian_state(kGrid).normalized();
    StateVector h2 = hermite_state(kGrid, 2).normalized();
    for (const Rational& lambda : {Rational(1), Rational(3, 2), Rational(3)}) {
        const double expected = lambda.to_double();
        CHECK(std::abs(admissibility_constant(lambda, gauss) - expected) < 1e-3 * expected);
        CHECK(std::abs(admissibility_constant(lambda, h2) - expected) < 1e-3 * expected);
    }
}

TEST_CASE("admissibility is covariant: eta and pi(g) eta agree within 1e-4") {
    StateVector gauss = gaussian_state(kGrid).normalized();
    StateVector moved = apply_pi(Rational(1), {0.8, -0.6, 0.4}, gauss).normalized();
    const double a = admissibility_constant(Rational(1), gauss);
    const double b = admissibility_constant(Rational(1), moved);
    CHECK(std::abs(a - b) < 1e-4 * a);
}

TEST_CASE("non-decaying windows are rejected") {
    CVec slow(kGrid.samples);
    for (int j = 0; j < kGrid.samples; ++j) slow[j] = 1.0 / (1.0 + std::abs(kGrid.x(j)));
    StateVector eta = StateVector(kGrid, std::move(slow)).normalized();
    CHECK_THROWS_WITH_AS(admissibility_constant(Rational(1), eta),
                         doctest::Contains("decay"), InputError);
}

TEST_CASE("admissibility requires unit normalization") {
    StateVector eta = gaussian_state(kGrid);
    CVec doubled = eta.samples();
    for (cdouble& v : doubled) v *= 2.0;
    CHECK_THROWS_AS(admissibility_constant(Rational(1), StateVector(kGrid, doubled)), InputError);
}

TEST_CASE("subsystem signals at densities 1/2 and 2") {
    StateVector eta = gaussian_state(kSmallGrid);
    const double a = 1.0 / std::sqrt(2.0);
    SubsystemReport below = subsystem_completeness(Rational(1), a, a, eta, 24);
    CHECK(below.signal == SubsystemSignal::Completeness);
    CHECK(below.sigma_min.back() > 1e-4);

    const double b = std::sqrt(2.0);
    SubsystemReport above = subsystem_completeness(Rational(1), b, b, eta, 24);
    CHECK(above.signal == SubsystemSignal::Incompleteness);
    CHECK(above.sigma_min.back() < 1e-4);

    // singular values are non-increasing across probe truncations
    for (std::size_t i = 1; i < above.sigma_min.size(); ++i)
        CHECK(above.sigma_min[i] <= above.sigma_min[i - 1] + 1e-12);
}

TEST_CASE("subsystem verdict is section-independent") {
    StateVector eta = gaussian_state(kSmallGrid);
    for (double d : {0.7071067811865476, 1.4142135623730951}) {
        SubsystemReport pq = subsystem_completeness(Rational(1), d, d, eta, 8, Section::PQ);
        SubsystemReport qp = subsystem_completeness(Rational(1), d, d, eta, 8, Section::QP);
        CHECK(pq.signal == qp.signal);
        for (std::size_t i = 0; i < pq.sigma_min.size(); ++i)
            CHECK(pq.sigma_min[i] == doctest::Approx(qp.sigma_min[i]).epsilon(1e-8));
    }
}

TEST_CASE("empty probe set gives an empty report") {
    StateVector eta = gaussian_state(kSmallGrid);
    SubsystemReport r = subsystem_completeness(Rational(1), 1.0, 1.0, eta, 0);
    CHECK(r.sigma_min.empty());
    CHECK(r.signal == SubsystemSignal::Inconclusive);
}

TEST_CASE("coarse grids reject aliased modulations") {
    GridSpec coarse{4.0, 64};
    StateVector eta = gaussian_state(coarse);
    CHECK_THROWS_WITH_AS(subsystem_completeness(Rational(3), 1.0, 1.9, eta, 4),
                         doctest::Contains("too coarse"), InputError);
}
