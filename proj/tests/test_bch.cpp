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

#include <random>

#include "orbitlab/algebra.hpp"
#include "orbitlab/errors.hpp"

using namespace orbitlab;

namespace {

RatVec rv(std::initializer_list<long long> xs) {
    RatVec v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

RatVec random_element(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long long> num(-4, 4);
    std::uniform_int_distribution<long long> den(1, 3);
    RatVec v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

// Independent oracle for h1: the faithful 3x3 strictly-upper-triangular model
// aX + bY + cZ -> [[0,a,c],[0,0,b],[0,0,0]]. exp and log are exact two-term
// series there, so log(exp(u) exp(v)) can be computed without any BCH input.
RatVec h1_matrix_oracle(const RatVec& u, const RatVec& v) {
    auto to_mat = [](const RatVec& w) {
        RatMat m(3, rat_zero_vec(3));
        m[0][1] = w[0];
        m[1][2] = w[1];
        m[0][2] = w[2];
        return m;
    };
    auto exp3 = [](const RatMat& m) {
        RatMat r = rat_identity(3);
        RatMat m2 = mat_mul(m, m);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] += m[i][j] + Rational(1, 2) * m2[i][j];
        return r;
    };
    RatMat prod = mat_mul(exp3(to_mat(u)), exp3(to_mat(v)));
    // log(I + N) = N - N^2/2 for N strictly upper with N^3 = 0
    RatMat n = prod;
    for (int i = 0; i < 3; ++i) n[i][i] -= Rational(1);
    RatMat n2 = mat_mul(n, n);
    RatMat lg(3, rat_zero_vec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lg[i][j] = n[i][j] - Rational(1, 2) * n2[i][j];
    return {lg[0][1], lg[1][2], lg[0][2]};
}

} // namespace

TEST_CASE("class-2 closed form: bch(x,y) = x + y + [x,y]/2") {
    std::mt19937_64 rng(1);
    for (const LieAlgebra& alg : {make_heisenberg(1), make_heisenberg(2), make_free_two_step(3)}) {
        for (int iter = 0; iter < 50; ++iter) {
            RatVec x = random_element(rng, alg.dim());
            RatVec y = random_element(rng, alg.dim());
            RatVec expected = vec_add(vec_add(x, y), vec_scale(Rational(1, 2), alg.bracket(x, y)));
            CHECK(alg.bch(x, y) == expected);
        }
    }
}

TEST_CASE("h1 against the faithful matrix model") {
    LieAlgebra h1 = make_heisenberg(1);
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 100; ++iter) {
        RatVec x = random_element(rng, 3);
        RatVec y = random_element(rng, 3);
        CHECK(h1.bch(x, y) == h1_matrix_oracle(x, y));
    }
}

TEST_CASE("bch(X,Y) - bch(Y,X) = Z on h1") {
    LieAlgebra h1 = make_heisenberg(1);
    RatVec d = vec_sub(h1.bch(rv({1, 0, 0}), rv({0, 1, 0})), h1.bch(rv({0, 1, 0}), rv({1, 0, 0})));
    CHECK(d == rv({0, 0, 1}));
}

TEST_CASE("engel degree-3 expansion") {
    LieAlgebra engel = make_engel();
    // bch(X1, X2) = X1 + X2 + X3/2 + [X1,[X1,X2]]/12 = X1 + X2 + X3/2 + X4/12
    RatVec z = engel.bch(rv({1, 0, 0, 0}), rv({0, 1, 0, 0}));
    CHECK(z == RatVec{Rational(1), Rational(1), Rational(1, 2), Rational(1, 12)});
}

TEST_CASE("bch inverse: bch(x, -x) = 0") {
    std::mt19937_64 rng(3);
    for (const LieAlgebra& alg : {make_engel(), make_filiform(6)}) {
        for (int iter = 0; iter < 30; ++iter) {
            RatVec x = random_element(rng, alg.dim());
            RatVec nx = vec_scale(Rational(-1), x);
            CHECK(is_zero_vec(alg.bch(x, nx)));
        }
    }
}

TEST_CASE("bch identity element") {
    LieAlgebra engel = make_engel();
    std::mt19937_64 rng(4);
    RatVec zero = rat_zero_vec(4);
    for (int iter = 0; iter < 10; ++iter) {
        RatVec x = random_element(rng, 4);
        CHECK(engel.bch(x, zero) == x);
        CHECK(engel.bch(zero, x) == x);
    }
}

TEST_CASE("associativity, exact, through class 6") {
    std::mt19937_64 rng(5);
    for (const LieAlgebra& alg :
         {make_heisenberg(1), make_engel(), make_filiform(5), make_filiform(7)}) {
        const int reps = alg.dim() >= 7 ? 8 : 25;
        for (int iter = 0; iter < reps; ++iter) {
            RatVec x = random_element(rng, alg.dim());
            RatVec y = random_element(rng, alg.dim());
            RatVec z = random_element(rng, alg.dim());
            CHECK(alg.bch(alg.bch(x, y), z) == alg.bch(x, alg.bch(y, z)));
        }
    }
}

TEST_CASE("class above 6 is rejected") {
    LieAlgebra f8 = make_filiform(8); // class 7
    CHECK(f8.validate().nilpotency_class == 7);
    CHECK_THROWS_WITH_AS(f8.bch(rat_zero_vec(8), rat_zero_vec(8)),
                         doctest::Contains("BCH degree unsupported"), InputError);
}

TEST_CASE("numeric bch tracks the exact series") {
    LieAlgebra engel = make_engel();
    std::mt19937_64 rng(6);
    for (int iter = 0; iter < 20; ++iter) {
        RatVec x = random_element(rng, 4);
        RatVec y = random_element(rng, 4);
        RatVec exact = engel.bch(x, y);
        std::vector<double> xd, yd;
        for (auto& c : x) xd.push_back(c.to_double());
        for (auto& c : y) yd.push_back(c.to_double());
        std::vector<double> approx = engel.bch_numeric(xd, yd);
        for (int i = 0; i < 4; ++i)
            CHECK(approx[i] == doctest::Approx(exact[i].to_double()).epsilon(1e-12));
    }
}
