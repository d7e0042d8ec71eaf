/*
 * Copyright 2026 The fillmore authors
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

#include <doctest.h>

#include "fillmore/generate.hpp"
#include "fillmore/scalar.hpp"

using namespace fillmore;

TEST_CASE("rational normalization is canonical") {
    CHECK(normalize(Int(4), Int(-2)) == Rat(-2));
    CHECK(normalize(Int(0), Int(7)) == Rat(0));
    CHECK(normalize(Int(-6), Int(-10)) == Rat(3, 5));
    CHECK(normalize(Int(3), Int(5)).get_den() == 5);
    CHECK_THROWS_AS(normalize(Int(1), Int(0)), PreconditionError);
}

TEST_CASE("gcd is positive and rejects (0,0)") {
    CHECK(gcd_positive(Int(5), Int(3)) == 1);
    CHECK(gcd_positive(Int(12), Int(-18)) == 6);
    CHECK(gcd_positive(Int(0), Int(-7)) == 7);
    CHECK_THROWS_AS(gcd_positive(Int(0), Int(0)), PreconditionError);
}

TEST_CASE("extended gcd produces the canonical cofactor pair") {
    BezoutTriple t = extended_gcd(Int(5), Int(3));
    CHECK(t.m == 1);
    CHECK(t.p == 5);
    CHECK(t.q == 3);
    CHECK(t.s == 2);
    CHECK(t.r == 3);

    t = extended_gcd(Int(4), Int(2));
    CHECK(t.m == 2);
    CHECK(t.p == 2);
    CHECK(t.q == 1);
    CHECK(t.s == 1);
    CHECK(t.r == 1);

    t = extended_gcd(Int(1), Int(0));
    CHECK(t.m == 1);
    CHECK(t.p == 1);
    CHECK(t.q == 0);
    CHECK(t.s == 1);
    CHECK(t.r == 0);

    CHECK_THROWS_AS(extended_gcd(Int(0), Int(0)), PreconditionError);
}

TEST_CASE("extended gcd identity and bounds over random 64-bit inputs") {
    SplitMix64 rng(20260810);
    for (int i = 0; i < 2000; ++i) {
        Int a(static_cast<long>(rng.next()));
        Int b(static_cast<long>(rng.next()));
        if (i % 7 == 0) b = 0;
        if (i % 11 == 0) a = 0;
        if (sgn(a) == 0 && sgn(b) == 0) continue;
        BezoutTriple t = extended_gcd(a, b);
        CHECK(t.m > 0);
        CHECK(t.m * t.p == a);
        CHECK(t.m * t.q == b);
        CHECK(t.p * t.s - t.q * t.r == 1);
        Int max_s = abs(t.q) > 1 ? abs(t.q) : Int(1);
        Int max_r = abs(t.p) > 1 ? abs(t.p) : Int(1);
        CHECK(abs(t.s) <= max_s);
        CHECK(abs(t.r) <= max_r);
    }
}

TEST_CASE("field inversion") {
    const RingSpec q = RingSpec::rationals();
    Scalar x = Scalar::parse(q, "3/5");
    CHECK(x.inverse().str() == "5/3");
    CHECK((x * x.inverse()).is_one());

    const RingSpec gf7 = RingSpec::gf(7);
    Scalar y = Scalar::from_int(gf7, 3);
    CHECK(y.inverse().str() == "5");
    CHECK((y * y.inverse()).is_one());

    CHECK_THROWS_AS(Scalar::zero(q).inverse(), PreconditionError);
    CHECK_THROWS_AS(Scalar::zero(gf7).inverse(), PreconditionError);

    const RingSpec z = RingSpec::integers();
    CHECK(Scalar::from_int(z, -1).inverse() == Scalar::from_int(z, -1));
    CHECK_THROWS_AS(Scalar::from_int(z, 2).inverse(), PreconditionError);
}

TEST_CASE("rational arithmetic is exact and round-trips through strings") {
    const RingSpec q = RingSpec::rationals();
    SplitMix64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Scalar x = draw_scalar(q, 50, rng);
        Scalar y = draw_scalar(q, 50, rng);
        Scalar z = draw_scalar(q, 50, rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(Scalar::parse(q, x.str()) == x);
    }
}

TEST_CASE("small prime fields are fields") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        const RingSpec gf = RingSpec::gf(p);
        for (std::uint64_t v = 0; v < p; ++v) {
            Scalar x = Scalar::from_int(gf, static_cast<long>(v));
            if (!x.is_zero()) {
                CHECK((x * x.inverse()).is_one());
            }
            // Fermat: x^p = x.
            Scalar power = Scalar::one(gf);
            for (std::uint64_t e = 0; e < p; ++e) power = power * x;
            CHECK(power == x);
        }
    }
}

TEST_CASE("primality gate for GF moduli") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(0));
    CHECK(!is_prime(1));
    CHECK(!is_prime(6));
    CHECK(!is_prime(91)); // 7 * 13
    CHECK_THROWS_AS(RingSpec::gf(6), PreconditionError);
    CHECK_NOTHROW(RingSpec::gf(101));
}

TEST_CASE("canonical text forms") {
    const RingSpec q = RingSpec::rationals();
    CHECK(Scalar::parse(q, "14/21").str() == "2/3");
    CHECK(Scalar::parse(q, "-10/5").str() == "-2"); // integer-valued: no /den
    CHECK(Scalar::parse(q, "0/9").str() == "0");

    const RingSpec gf7 = RingSpec::gf(7);
    CHECK(Scalar::parse(gf7, "-3").str() == "4"); // least nonnegative residue
    CHECK(Scalar::parse(gf7, "10").str() == "3");

    const RingSpec z = RingSpec::integers();
    CHECK(Scalar::parse(z, "-3").str() == "-3");
    CHECK_THROWS_AS(Scalar::parse(z, "1/2"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);
    CHECK_THROWS_AS(Scalar::parse(q, "3/0"), Error);
}

TEST_CASE("ring mismatches are loud") {
    Scalar a = Scalar::from_int(RingSpec::integers(), 1);
    Scalar b = Scalar::from_int(RingSpec::gf(5), 1);
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
}
