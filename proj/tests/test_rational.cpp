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

#include "orbitlab/errors.hpp"
#include "orbitlab/rational.hpp"

using orbitlab::BigInt;
using orbitlab::Rational;

TEST_CASE("bigint small arithmetic matches built-in integers") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000ll, 1000000000ll);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint multi-limb divmod identity") {
    std::mt19937_64 rng(99);
    auto random_big = [&rng](int limbs) {
        BigInt v(0);
        std::uniform_int_distribution<long long> d(0, (1ll << 31) - 1);
        for (int i = 0; i < limbs; ++i) v = v * BigInt(1ll << 31) + BigInt(d(rng));
        return rng() % 2 ? v : -v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q = a / b;
        BigInt r = a % b;
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // truncation toward zero: remainder carries the dividend's sign
        CHECK((r.is_zero() || r.is_negative() == a.is_negative()));
    }
}

TEST_CASE("bigint string round trip") {
    const char* cases[] = {"0", "1", "-1", "4294967296", "-4294967296",
                           "123456789012345678901234567890",
                           "-999999999999999999999999999999999999"};
    for (const char* s : cases) CHECK(BigInt::from_string(s).to_string() == s);
    CHECK(BigInt::from_string("+17").to_string() == "17");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK_THROWS_AS(BigInt::from_string("12x"), orbitlab::InputError);
    CHECK_THROWS_AS(BigInt::from_string(""), orbitlab::InputError);
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(7)) == BigInt(7));
    BigInt a = BigInt::from_string("123456789123456789123456789");
    BigInt g = BigInt::gcd(a * BigInt(35), a * BigInt(21));
    CHECK(g == a * BigInt(7));
}

TEST_CASE("rationals reduce and stay reduced") {
    Rational r(6, -8);
    CHECK(r.to_string() == "-3/4");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(10, 5).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), orbitlab::InputError);
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 23);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int iter = 0; iter < 500; ++iter) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
        CHECK(a - a == Rational(0));
    }
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("3/-2") == Rational(-3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), orbitlab::InputError);
    CHECK_THROWS_AS(Rational::parse("a/b"), orbitlab::InputError);
}

TEST_CASE("fractional part") {
    CHECK(Rational(3, 2).fractional_part() == Rational(1, 2));
    CHECK(Rational(-3, 2).fractional_part() == Rational(1, 2));
    CHECK(Rational(2).fractional_part() == Rational(0));
    CHECK(Rational(-7, 3).fractional_part() == Rational(2, 3));
}

TEST_CASE("to_double") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(-22, 7).to_double() == doctest::Approx(-3.142857142857));
    BigInt big = BigInt::from_string("12345678901234567890");
    CHECK(big.to_double() == doctest::Approx(1.2345678901234567e19));
}
