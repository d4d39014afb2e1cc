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

#include <cstdint>
#include <map>
#include <vector>

#include "orbitlab/algebra.hpp"
#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

constexpr int kMaxDegree = 6;

// One monomial of the series: a word w over the letters {0 -> x, 1 -> y}
// standing for the right-nested bracket [w_0, [w_1, [..., w_{m-1}]...]].
struct BchTerm {
    std::vector<std::uint8_t> word;
    Rational coeff;
};

// Dynkin's expansion of log(exp x exp y): sum over block sequences
// (r_1,s_1)...(r_n,s_n), r_i + s_i >= 1, of
//   (-1)^(n-1)/n * [x^{r_1} y^{s_1} ... x^{r_n} y^{s_n}] / (m * prod r_i! s_i!)
// with m the total degree. Collecting coefficients per flattened word gives a
// fixed table through degree 6; words deeper than the nilpotency class
// evaluate to zero and are skipped at evaluation time.
std::vector<BchTerm> build_table() {
    std::map<std::vector<std::uint8_t>, Rational> acc;
    std::vector<long long> factorial(kMaxDegree + 1, 1);
    for (int i = 1; i <= kMaxDegree; ++i) factorial[i] = factorial[i - 1] * i;

    struct Frame {
        std::vector<std::uint8_t> word;
        long long fact_product;
        int blocks;
    };
    std::vector<Frame> stack;
    stack.push_back({{}, 1, 0});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.blocks > 0) {
            const int m = static_cast<int>(f.word.size());
            Rational coeff(1, static_cast<long long>(f.blocks) * m * f.fact_product);
            if (f.blocks % 2 == 0) coeff = -coeff;
            auto it = acc.find(f.word);
            if (it == acc.end())
                acc.emplace(f.word, coeff);
            else
                it->second += coeff;
        }
        const int room = kMaxDegree - static_cast<int>(f.word.size());
        for (int r = 0; r <= room; ++r) {
            for (int s = 0; s <= room - r; ++s) {
                if (r + s == 0) continue;
                Frame next = f;
                next.word.insert(next.word.end(), static_cast<std::size_t>(r), 0);
                next.word.insert(next.word.end(), static_cast<std::size_t>(s), 1);
                next.fact_product = f.fact_product * factorial[r] * factorial[s];
                next.blocks = f.blocks + 1;
                stack.push_back(std::move(next));
            }
        }
    }

    std::vector<BchTerm> table;
    for (auto& [word, coeff] : acc)
        if (!coeff.is_zero()) table.push_back({word, coeff});
    return table;
}

const std::vector<BchTerm>& bch_table() {
    static const std::vector<BchTerm> table = build_table();
    return table;
}

template <typename Vec, typename Scalar, typename BracketFn, typename AxpyFn>
Vec evaluate_series(const Vec& x, const Vec& y, int max_word_length, Vec out,
                    BracketFn&& bracket, AxpyFn&& axpy) {
    for (const BchTerm& term : bch_table()) {
        const int m = static_cast<int>(term.word.size());
        if (m > max_word_length) continue;
        Vec v = term.word[m - 1] ? y : x;
        for (int i = m - 2; i >= 0; --i) v = bracket(term.word[i] ? y : x, v);
        axpy(out, term.coeff, v);
    }
    return out;
}

} // namespace

RatVec LieAlgebra::bch(const RatVec& x, const RatVec& y) const {
    check_element(x, "bch");
    check_element(y, "bch");
    const int cls = nilpotency_class();
    if (cls > kMaxDegree)
        throw InputError("BCH degree unsupported: nilpotency class " + std::to_string(cls) +
                         " exceeds the shipped degree-" + std::to_string(kMaxDegree) + " series");
    return evaluate_series<RatVec, Rational>(
        x, y, cls, rat_zero_vec(dim_),
        [this](const RatVec& a, const RatVec& b) { return bracket(a, b); },
        [](RatVec& out, const Rational& c, const RatVec& v) {
            for (std::size_t i = 0; i < out.size(); ++i)
                if (!v[i].is_zero()) out[i] += c * v[i];
        });
}

std::vector<double> LieAlgebra::bracket_numeric(const std::vector<double>& x,
                                                const std::vector<double>& y) const {
    std::vector<double> out(static_cast<std::size_t>(dim_), 0.0);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0.0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0.0) continue;
            const double f = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                const Rational& s = structure_[i][j][k];
                if (!s.is_zero()) out[k] += f * s.to_double();
            }
        }
    }
    return out;
}

std::vector<double> LieAlgebra::bch_numeric(const std::vector<double>& x,
                                            const std::vector<double>& y) const {
    const int cls = nilpotency_class();
    if (cls > kMaxDegree) throw InputError("BCH degree unsupported beyond class 6");
    return evaluate_series<std::vector<double>, double>(
        x, y, cls, std::vector<double>(static_cast<std::size_t>(dim_), 0.0),
        [this](const std::vector<double>& a, const std::vector<double>& b) {
            return bracket_numeric(a, b);
        },
        [](std::vector<double>& out, const Rational& c, const std::vector<double>& v) {
            const double cd = c.to_double();
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += cd * v[i];
        });
}

} // namespace orbitlab
