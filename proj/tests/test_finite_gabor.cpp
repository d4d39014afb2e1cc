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
#include <numbers>
#include <random>

#include "orbitlab/errors.hpp"
#include "orbitlab/finite_gabor.hpp"

using namespace orbitlab;

namespace {

CVec random_vector(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(n);
    for (cdouble& x : v) x = cdouble(g(rng), g(rng));
    return v;
}

double vec_dist(const CVec& a, const CVec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

int dft_support(const CVec& eta) {
    const int n = static_cast<int>(eta.size());
    int count = 0;
    double top = 0.0;
    std::vector<double> mags(n);
    for (int k = 0; k < n; ++k) {
        cdouble s = 0.0;
        for (int j = 0; j < n; ++j)
            s += eta[j] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
        mags[k] = std::abs(s);
        top = std::max(top, mags[k]);
    }
    for (double m : mags)
        if (m > 1e-9 * top) ++count;
    return count;
}

} // namespace

TEST_CASE("commutation M T = e^{2 pi i/n} T M and unitarity") {
    for (int n : {2, 5, 8}) {
        FiniteWH wh(n);
        CVec f = random_vector(n, 100 + n);
        CVec mt = wh.modulate(wh.shift(f));
        CVec tm = wh.shift(wh.modulate(f));
        const cdouble omega = std::polar(1.0, 2.0 * std::numbers::pi / n);
        for (cdouble& v : tm) v *= omega;
        CHECK(vec_dist(mt, tm) < 1e-12);

        // T^n = M^n = I
        CVec t = f, m = f;
        for (int i = 0; i < n; ++i) {
            t = wh.shift(t);
            m = wh.modulate(m);
        }
        CHECK(vec_dist(t, f) < 1e-12);
        CHECK(vec_dist(m, f) < 1e-12);
    }
}

TEST_CASE("subgroup enumeration counts match the divisor-sum formula") {
    CHECK(subgroup_count_formula(2) == 5);
    CHECK(subgroup_count_formula(3) == 6);
    for (int n = 2; n <= 12; ++n) {
        auto subs = enumerate_subgroups(n);
        CHECK(static_cast<long long>(subs.size()) == subgroup_count_formula(n));
        // trivial and full are always present
        CHECK(subs.front().order() == 1);
        CHECK(subs.back().order() == n * n);
        // closure spot-check
        for (const SubgroupSpec& s : subs) {
            for (const auto& [a1, b1] : s.elements) {
                const auto probe = std::make_pair((a1 + s.elements.back().first) % n,
                                                  (b1 + s.elements.back().second) % n);
                CHECK(std::binary_search(s.elements.begin(), s.elements.end(), probe));
            }
        }
    }
    CHECK_THROWS_AS(enumerate_subgroups(13), InputError);
}

TEST_CASE("orders of the five subgroups of Z_2 x Z_2") {
    auto subs = enumerate_subgroups(2);
    std::vector<int> orders;
    for (const auto& s : subs) orders.push_back(s.order());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 4});
}

TEST_CASE("orthogonality relation to 1e-10") {
    for (int n : {3, 4, 7, 8}) {
        FiniteWH wh(n);
        for (int iter = 0; iter < 5; ++iter) {
            CVec f = random_vector(n, 300 + iter);
            CVec eta = random_vector(n, 400 + iter);
            double f2 = 0.0, e2 = 0.0;
            for (const cdouble& v : f) f2 += std::norm(v);
            for (const cdouble& v : eta) e2 += std::norm(v);
            CHECK(orthogonality_defect(wh, f, eta) < 1e-10 * n * f2 * e2);
        }
    }
}

TEST_CASE("full group is complete for random windows") {
    for (int n : {4, 6}) {
        FiniteWH wh(n);
        SubgroupSpec full = subgroup_from_generators(n, {{1, 0}, {0, 1}});
        CHECK(full.order() == n * n);
        CHECK(system_rank(wh, full, random_vector(n, 55)) == n);
    }
}

TEST_CASE("translation-only orbits span the DFT support") {
    FiniteWH wh(4);
    SubgroupSpec translations = subgroup_from_generators(4, {{1, 0}});
    CHECK(translations.order() == 4);

    CVec ones(4, cdouble(1.0, 0.0));
    CHECK(system_rank(wh, translations, ones) == 1); // DFT support {0}

    CVec e0 = {1.0, 0.0, 0.0, 0.0};
    CHECK(system_rank(wh, translations, e0) == 4); // flat DFT

    std::mt19937_64 rng(66);
    for (int iter = 0; iter < 10; ++iter) {
        for (int n : {4, 6, 8}) {
            FiniteWH whn(n);
            SubgroupSpec tr = subgroup_from_generators(n, {{1, 0}});
            CVec eta = random_vector(n, rng());
            // sparsify the spectrum sometimes by adding DFT atoms
            CHECK(system_rank(whn, tr, eta) == dft_support(eta));
        }
    }
}

TEST_CASE("order-2 subgroups are always incomplete") {
    FiniteWH wh(4);
    for (const SubgroupSpec& s : enumerate_subgroups(4)) {
        if (s.order() != 2) continue;
        CHECK(system_rank(wh, s, random_vector(4, 77)) <= 2);
    }
}

TEST_CASE("necessity holds at order n: completeness needs |subgroup| >= n") {
    // |Lambda| = n is not sufficient: the translation subgroup of order 4
    // with the all-ones window is incomplete
    FiniteWH wh(4);
    SubgroupSpec tr = subgroup_from_generators(4, {{1, 0}});
    CVec ones(4, cdouble(1.0, 0.0));
    CHECK(system_rank(wh, tr, ones) == 1);

    // while a generically-complete critical subgroup exists: <(1,1)> at n=6
    FiniteWH wh6(6);
    SubgroupSpec diag = subgroup_from_generators(6, {{1, 1}});
    CHECK(diag.order() == 6);
    int complete = 0;
    for (int iter = 0; iter < 10; ++iter)
        if (system_rank(wh6, diag, random_vector(6, 900 + iter)) == 6) ++complete;
    CHECK(complete == 10); // generic windows are cyclic here
}

TEST_CASE("scan up to n = 6 has zero necessity violations") {
    ScanReport report = density_scan(6, 12, 3);
    CHECK(report.necessity_violations == 0);
    CHECK(report.counterexample.empty());
    long long expected_rows = 0;
    for (int n = 2; n <= 6; ++n) expected_rows += subgroup_count_formula(n);
    CHECK(static_cast<long long>(report.rows.size()) == expected_rows);
    for (const ScanRow& row : report.rows) {
        CHECK(row.covol_times_d == Rational(row.n, row.subgroup.order()));
        if (row.complete_any) CHECK(row.covol_times_d <= Rational(1));
        // the full group is always complete
        if (row.subgroup.order() == row.n * row.n) CHECK(row.complete_any);
    }
}

TEST_CASE("covol * d is invariant under rescaling the counting measure") {
    // weight c on the counting measure multiplies covol(Lambda) = c n^2/|L|
    // and divides d = 1/(c n); the product n/|L| survives exactly.
    for (int n : {4, 6, 8}) {
        for (const SubgroupSpec& s : enumerate_subgroups(n)) {
            const Rational reference(n, s.order());
            for (const Rational& c : {Rational(1, 7), Rational(1), Rational(13)}) {
                Rational covol = c * Rational(n * n, s.order());
                Rational d = Rational(1) / (c * Rational(n));
                CHECK(covol * d == reference);
            }
        }
    }
}

TEST_CASE("zero vectors are rejected") {
    FiniteWH wh(4);
    SubgroupSpec full = subgroup_from_generators(4, {{1, 0}, {0, 1}});
    CHECK_THROWS_AS(system_rank(wh, full, CVec(4, 0.0)), InputError);
}
