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

#ifndef ORBITLAB_FINITE_GABOR_HPP
#define ORBITLAB_FINITE_GABOR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/numeric.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

/// Finite Weyl-Heisenberg system on C^n: cyclic shift T (delay by one) and
/// modulation M = diag(e^{2 pi i k / n}), satisfying M T = e^{2 pi i/n} T M
/// and T^n = M^n = I.
struct FiniteWH {
    int n;
    explicit FiniteWH(int n);

    CVec shift(const CVec& f) const;      // T f
    CVec modulate(const CVec& f) const;   // M f
    CVec apply(int a, int b, const CVec& f) const; // M^b T^a f
};

struct SubgroupSpec {
    std::vector<std::pair<int, int>> generators;
    std::vector<std::pair<int, int>> elements; // sorted, duplicate-free, has (0,0)
    int order() const { return static_cast<int>(elements.size()); }
};

SubgroupSpec subgroup_from_generators(int n, std::vector<std::pair<int, int>> generators);

/// All subgroups of Z_n x Z_n (every subgroup has at most two generators).
/// Exhaustive mode is capped at n <= 12.
std::vector<SubgroupSpec> enumerate_subgroups(int n);

/// Independent divisor-sum count of subgroups of Z_n x Z_n, via Hermite
/// normal forms of sublattices between nZ^2 and Z^2.
long long subgroup_count_formula(int n);

/// Rank of span{ M^b T^a eta : (a,b) in the subgroup }, by pivoted QR with
/// relative threshold 1e-9. Complete iff the rank equals n.
int system_rank(const FiniteWH& wh, const SubgroupSpec& subgroup, const CVec& eta);

/// | sum_{(a,b)} |<f, M^b T^a eta>|^2 - n |f|^2 |eta|^2 | over the full group:
/// the exact finite orthogonality relation (fixes d = 1/n under counting
/// measure).
double orthogonality_defect(const FiniteWH& wh, const CVec& f, const CVec& eta);

/// Window panel: all-ones, the standard basis vectors, the finite Gaussian
/// e^{-pi (k - n/2)^2 / n}, plus seeded complex Gaussian vectors.
std::vector<CVec> eta_panel(int n, int random_count, std::uint64_t seed);

struct ScanRow {
    int n = 0;
    SubgroupSpec subgroup;
    Rational covol_times_d; // n / |subgroup|
    bool complete_any = false;
    int complete_count = 0;
    int panel_size = 0;
};

struct ScanReport {
    int n_max = 0;
    std::vector<ScanRow> rows;
    int necessity_violations = 0;   // (complete => |subgroup| >= n) failures
    std::string counterexample;     // description of the first violation
};

/// Exhaustive scan over n <= n_max, every subgroup, and the full eta panel.
/// Asserts the necessity direction (completeness forces n/|subgroup| <= 1)
/// and records empirical sufficiency data for the over-critical subgroups.
ScanReport density_scan(int n_max, int random_panel = 20, std::uint64_t seed = 1);

} // namespace orbitlab

#endif
