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

#include "fillmore/scalar.hpp"

#include <cctype>

namespace fillmore {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d <= p / d; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

RingSpec RingSpec::gf(std::uint64_t p) {
    if (!is_prime(p)) {
        throw PreconditionError("GF modulus " + std::to_string(p) + " is not prime");
    }
    return RingSpec(RingKind::PrimeField, p);
}

std::string RingSpec::name() const {
    switch (kind_) {
    case RingKind::Integer: return "Z";
    case RingKind::Rational: return "Q";
    case RingKind::PrimeField: return "GF(" + std::to_string(modulus_) + ")";
    }
    return "?";
}

Rat Scalar::reduce(const RingSpec& ring, const Int& v) {
    if (ring.kind() == RingKind::PrimeField) {
        Int p(static_cast<unsigned long>(ring.modulus()));
        Int residue;
        mpz_mod(residue.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return Rat(residue);
    }
    return Rat(v);
}

Scalar Scalar::from_int(const RingSpec& ring, const Int& v) {
    return Scalar(ring, reduce(ring, v));
}

Scalar Scalar::from_rat(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return Scalar(RingSpec::rationals(), c);
}

void Scalar::require_same_ring(const Scalar& o) const {
    if (ring_ != o.ring_) {
        throw RingMismatchError("scalar rings differ: " + ring_.name() + " vs " + o.ring_.name());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_ring(o);
    if (ring_.kind() == RingKind::PrimeField) {
        Int sum = numerator() + o.numerator();
        return Scalar(ring_, reduce(ring_, sum));
    }
    return Scalar(ring_, Rat(value_ + o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_ring(o);
    if (ring_.kind() == RingKind::PrimeField) {
        Int diff = numerator() - o.numerator();
        return Scalar(ring_, reduce(ring_, diff));
    }
    return Scalar(ring_, Rat(value_ - o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_ring(o);
    if (ring_.kind() == RingKind::PrimeField) {
        Int prod = numerator() * o.numerator();
        return Scalar(ring_, reduce(ring_, prod));
    }
    return Scalar(ring_, Rat(value_ * o.value_));
}

Scalar Scalar::operator-() const {
    if (ring_.kind() == RingKind::PrimeField) {
        Int neg = -numerator();
        return Scalar(ring_, reduce(ring_, neg));
    }
    return Scalar(ring_, Rat(-value_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw PreconditionError("zero has no multiplicative inverse in " + ring_.name());
    }
    switch (ring_.kind()) {
    case RingKind::Integer: {
        Int n = numerator();
        if (n != 1 && n != -1) {
            throw PreconditionError(n.get_str() + " is not a unit in Z");
        }
        return *this;
    }
    case RingKind::Rational: {
        Rat inv = 1 / value_;
        return Scalar(ring_, inv);
    }
    case RingKind::PrimeField: {
        Int p(static_cast<unsigned long>(ring_.modulus()));
        Int n = numerator();
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()) == 0) {
            throw PreconditionError(n.get_str() + " has no inverse mod " +
                                    std::to_string(ring_.modulus()));
        }
        return Scalar(ring_, Rat(inv));
    }
    }
    throw InternalError("unreachable ring kind");
}

Scalar Scalar::lifted_to_rationals() const {
    switch (ring_.kind()) {
    case RingKind::Rational: return *this;
    case RingKind::Integer: return Scalar(RingSpec::rationals(), value_);
    case RingKind::PrimeField:
        throw RingMismatchError("cannot lift a GF element into Q");
    }
    throw InternalError("unreachable ring kind");
}

std::string Scalar::str() const {
    if (ring_.kind() == RingKind::Rational) return value_.get_str();
    return numerator().get_str();
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_ring(o);
    return value_ == o.value_;
}

namespace {

// Digits with an optional leading '-'; no whitespace, no empty magnitude.
bool scan_integer_token(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = text.front() == '-' ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

} // namespace

Scalar Scalar::parse(const RingSpec& ring, std::string_view text) {
    std::string s(text);
    auto bad = [&]() -> ParseError {
        return ParseError("invalid scalar '" + s + "' for ring " + ring.name());
    };
    if (ring.kind() == RingKind::Rational) {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!scan_integer_token(s)) throw bad();
            return Scalar(ring, Rat(Int(s)));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!scan_integer_token(num) || !scan_integer_token(den)) throw bad();
        return Scalar(ring, normalize(Int(num), Int(den)));
    }
    if (!scan_integer_token(s)) throw bad();
    return from_int(ring, Int(s));
}

Rat normalize(const Int& num, const Int& den) {
    if (sgn(den) == 0) {
        throw PreconditionError("rational with zero denominator: " + num.get_str() + "/0");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int gcd_positive(const Int& a, const Int& b) {
    if (sgn(a) == 0 && sgn(b) == 0) {
        throw PreconditionError("gcd(0, 0) is undefined");
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BezoutTriple extended_gcd(const Int& a, const Int& b) {
    BezoutTriple t;
    t.m = gcd_positive(a, b);
    t.p = a / t.m;
    t.q = b / t.m;

    if (sgn(t.q) == 0) {
        // a = +-m: p*s = 1 forces s = p.
        t.s = t.p;
        t.r = 0;
        return t;
    }
    if (sgn(t.p) == 0) {
        // b = +-m: -q*r = 1 forces r = -q.
        t.s = 0;
        t.r = -t.q;
        return t;
    }

    Int abs_q = abs(t.q);
    if (abs_q == 1) {
        // Any s solves p*s = 1 (mod 1); sgn(p) keeps |r| = |p| - 1.
        t.s = sgn(t.p) > 0 ? 1 : -1;
    } else {
        Int p_mod;
        mpz_mod(p_mod.get_mpz_t(), t.p.get_mpz_t(), abs_q.get_mpz_t());
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), p_mod.get_mpz_t(), abs_q.get_mpz_t()) == 0) {
            throw InternalError("p and q not coprime in extended_gcd");
        }
        t.s = inv; // least positive representative in [1, |q|-1]
    }
    Int numer = t.p * t.s - 1;
    t.r = numer / t.q;

    if (t.p * t.s - t.q * t.r != 1) {
        throw InternalError("extended_gcd identity violated");
    }
    return t;
}

} // namespace fillmore
