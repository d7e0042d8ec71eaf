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

#pragma once

/**
 * @file scalar.hpp
 * @brief Exact scalar arithmetic over Z, Q and GF(p) behind one value type.
 *
 * Every value is exact: integers and rationals are GMP-backed with
 * arbitrary precision, rationals are kept canonical (positive denominator,
 * lowest terms, zero is 0/1), and prime-field elements are least
 * nonnegative residues modulo a trial-division-checked prime.
 *
 * Canonical text forms: integers as optional-sign decimal ("-3"),
 * rationals as "num/den" with the "/den" suffix dropped when den = 1,
 * GF(p) elements as the least nonnegative residue.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "fillmore/error.hpp"

namespace fillmore {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic primality test by trial division up to sqrt(p).
bool is_prime(std::uint64_t p);

enum class RingKind { Integer, Rational, PrimeField };

/// Which ring a computation runs in: Z, Q, or GF(p) for a prime p.
class RingSpec {
public:
    static RingSpec integers() { return RingSpec(RingKind::Integer, 0); }
    static RingSpec rationals() { return RingSpec(RingKind::Rational, 0); }
    /// Throws PreconditionError unless p is prime.
    static RingSpec gf(std::uint64_t p);

    RingKind kind() const { return kind_; }
    /// The prime modulus; only meaningful for PrimeField.
    std::uint64_t modulus() const { return modulus_; }
    bool is_field() const { return kind_ != RingKind::Integer; }

    /// "Z", "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_;
    std::uint64_t modulus_;
};

/**
 * An exact ring element tagged with its ring.
 *
 * Arithmetic between elements of different rings throws RingMismatchError.
 * Values are immutable; all operators return fresh values.
 */
class Scalar {
public:
    /// Integer zero; exists so containers can default-construct.
    Scalar() : ring_(RingSpec::integers()), value_(0) {}

    static Scalar zero(const RingSpec& ring) { return from_int(ring, Int(0)); }
    static Scalar one(const RingSpec& ring) { return from_int(ring, Int(1)); }

    /// An element of `ring` equal to v (reduced mod p for GF(p)).
    static Scalar from_int(const RingSpec& ring, const Int& v);
    static Scalar from_int(const RingSpec& ring, long v) { return from_int(ring, Int(v)); }

    /// A rational-ring element; q is canonicalized.
    static Scalar from_rat(const Rat& q);

    /// Parses the canonical text form for `ring`. Accepts an optional
    /// leading '-' everywhere and "num/den" in Q only.
    static Scalar parse(const RingSpec& ring, std::string_view text);

    const RingSpec& ring() const { return ring_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    /// Underlying canonical rational value (denominator 1 for Z and GF(p)).
    const Rat& value() const { return value_; }
    /// Numerator of the canonical value.
    Int numerator() const { return value_.get_num(); }
    /// Denominator of the canonical value (always positive).
    Int denominator() const { return value_.get_den(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;

    /// Multiplicative inverse. Zero has none; in Z only +1/-1 are units.
    Scalar inverse() const;

    /// The same value retagged into Q; only Z and Q values can be lifted.
    Scalar lifted_to_rationals() const;

    /// Canonical text form.
    std::string str() const;

    /// Same ring and same value.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    Scalar(const RingSpec& ring, Rat value) : ring_(ring), value_(std::move(value)) {}

    void require_same_ring(const Scalar& o) const;
    static Rat reduce(const RingSpec& ring, const Int& v);

    RingSpec ring_;
    Rat value_;
};

/// Canonical rational num/den. Throws PreconditionError when den = 0.
Rat normalize(const Int& num, const Int& den);

/// Positive gcd; gcd(0, b) = |b|. Throws PreconditionError on gcd(0, 0).
Int gcd_positive(const Int& a, const Int& b);

/**
 * Bezout data for a pair (a, b), not both zero:
 * m = gcd(a,b) > 0, p = a/m, q = b/m, and cofactors with p*s - q*r = 1.
 */
struct BezoutTriple {
    Int m;
    Int p;
    Int q;
    Int r;
    Int s;
};

/**
 * Extended gcd with deterministic cofactors.
 *
 * The returned pair (s, r) is canonical: s is the least positive solution
 * of p*s = 1 (mod |q|) when both quotients are nonzero (s = sgn(p) when
 * |q| <= 1 keeps the bounds tight for negative p), giving
 * |s| <= max(1, |q|) and |r| <= max(1, |p|).
 */
BezoutTriple extended_gcd(const Int& a, const Int& b);

} // namespace fillmore
