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

#include "orbitlab/finite_gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "orbitlab/errors.hpp"

namespace orbitlab {

FiniteWH::FiniteWH(int n_) : n(n_) {
    if (n < 2) throw InputError("finite Weyl-Heisenberg dimension must be >= 2");
}

CVec FiniteWH::shift(const CVec& f) const {
    CVec out(n);
    for (int j = 0; j < n; ++j) out[j] = f[((j - 1) % n + n) % n];
    return out;
}

CVec FiniteWH::modulate(const CVec& f) const {
    CVec out(n);
    for (int j = 0; j < n; ++j)
        out[j] = f[j] * std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    return out;
}

CVec FiniteWH::apply(int a, int b, const CVec& f) const {
    if (static_cast<int>(f.size()) != n) throw InputError("vector length mismatch");
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    CVec out(n);
    for (int j = 0; j < n; ++j) {
        const int src = ((j - a) % n + n) % n;
        out[j] = f[src] * std::polar(1.0, 2.0 * std::numbers::pi * b * j / n);
    }
    return out;
}

SubgroupSpec subgroup_from_generators(int n, std::vector<std::pair<int, int>> generators) {
    std::set<std::pair<int, int>> elems{{0, 0}};
    for (auto& g : generators) {
        g.first = ((g.first % n) + n) % n;
        g.second = ((g.second % n) + n) % n;
    }
    // close under addition; the group is abelian and finite, so iterate to a
    // fixed point
    for (;;) {
        std::set<std::pair<int, int>> next = elems;
        for (const auto& e : elems)
            for (const auto& g : generators)
                next.insert({(e.first + g.first) % n, (e.second + g.second) % n});
        if (next.size() == elems.size()) break;
        elems.swap(next);
    }
    SubgroupSpec out;
    out.generators = std::move(generators);
    out.elements.assign(elems.begin(), elems.end());
    return out;
}

std::vector<SubgroupSpec> enumerate_subgroups(int n) {
    if (n < 2) throw InputError("n must be >= 2");
    if (n > 12) throw InputError("exhaustive subgroup enumeration capped at n = 12");
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<SubgroupSpec> out;
    for (int a1 = 0; a1 < n; ++a1) {
        for (int b1 = 0; b1 < n; ++b1) {
            for (int a2 = 0; a2 < n; ++a2) {
                for (int b2 = 0; b2 < n; ++b2) {
                    // elements {i (a1,b1) + j (a2,b2)}: every subgroup of
                    // Z_n x Z_n has at most two generators
                    std::set<std::pair<int, int>> elems;
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            elems.insert({(i * a1 + j * a2) % n, (i * b1 + j * b2) % n});
                    std::vector<std::pair<int, int>> key(elems.begin(), elems.end());
                    if (seen.insert(key).second) {
                        SubgroupSpec s;
                        s.generators = {{a1, b1}, {a2, b2}};
                        s.elements = std::move(key);
                        out.push_back(std::move(s));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SubgroupSpec& x, const SubgroupSpec& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements < y.elements;
    });
    return out;
}

long long subgroup_count_formula(int n) {
    // Subgroups correspond to lattices between nZ^2 and Z^2; counting Hermite
    // normal forms gives sum over divisor pairs of gcd(a, n/d).
    long long count = 0;
    for (int a = 1; a <= n; ++a) {
        if (n % a != 0) continue;
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            count += std::gcd(a, n / d);
        }
    }
    return count;
}

int system_rank(const FiniteWH& wh, const SubgroupSpec& subgroup, const CVec& eta) {
    if (static_cast<int>(eta.size()) != wh.n) throw InputError("vector length mismatch");
    double norm2 = 0.0;
    for (const cdouble& v : eta) norm2 += std::norm(v);
    if (norm2 == 0.0) throw InputError("system rank of the zero vector");
    CMat cols;
    cols.reserve(subgroup.elements.size());
    for (const auto& [a, b] : subgroup.elements) cols.push_back(wh.apply(a, b, eta));
    return qr_rank(std::move(cols), 1e-9);
}

double orthogonality_defect(const FiniteWH& wh, const CVec& f, const CVec& eta) {
    double sum = 0.0;
    for (int a = 0; a < wh.n; ++a) {
        for (int b = 0; b < wh.n; ++b) {
            CVec w = wh.apply(a, b, eta);
            cdouble ip = 0.0;
            for (int j = 0; j < wh.n; ++j) ip += f[j] * std::conj(w[j]);
            sum += std::norm(ip);
        }
    }
    double f2 = 0.0, e2 = 0.0;
    for (const cdouble& v : f) f2 += std::norm(v);
    for (const cdouble& v : eta) e2 += std::norm(v);
    return std::abs(sum - wh.n * f2 * e2);
}

std::vector<CVec> eta_panel(int n, int random_count, std::uint64_t seed) {
    std::vector<CVec> panel;
    panel.emplace_back(n, cdouble(1.0, 0.0)); // all ones
    for (int i = 0; i < n; ++i) {
        CVec e(n, 0.0);
        e[i] = 1.0;
        panel.push_back(std::move(e));
    }
    CVec gauss(n);
    for (int k = 0; k < n; ++k) {
        const double d = k - n / 2.0;
        gauss[k] = std::exp(-std::numbers::pi * d * d / n);
    }
    panel.push_back(std::move(gauss));
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int r = 0; r < random_count; ++r) {
        CVec v(n);
        for (cdouble& x : v) x = cdouble(g(rng), g(rng));
        panel.push_back(std::move(v));
    }
    return panel;
}

ScanReport density_scan(int n_max, int random_panel, std::uint64_t seed) {
    ScanReport report;
    report.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        FiniteWH wh(n);
        std::vector<CVec> panel = eta_panel(n, random_panel, seed + n);
        for (const SubgroupSpec& sub : enumerate_subgroups(n)) {
            ScanRow row;
            row.n = n;
            row.subgroup = sub;
            row.covol_times_d = Rational(n, sub.order());
            row.panel_size = static_cast<int>(panel.size());
            for (std::size_t i = 0; i < panel.size(); ++i) {
                const bool complete = system_rank(wh, sub, panel[i]) == n;
                if (complete) {
                    ++row.complete_count;
                    row.complete_any = true;
                    if (sub.order() < n) {
                        ++report.necessity_violations;
                        if (report.counterexample.empty())
                            report.counterexample =
                                "n=" + std::to_string(n) + " subgroup order " +
                                std::to_string(sub.order()) + " panel vector " +
                                std::to_string(i) + " reported complete";
                    }
                }
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace orbitlab
