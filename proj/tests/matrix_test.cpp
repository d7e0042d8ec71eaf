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
#include "fillmore/matrix.hpp"
#include "support/oracles.hpp"
#include "support/worked_examples.hpp"

using namespace fillmore;

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kQ = RingSpec::rationals();

Matrix random_invertible(const RingSpec& ring, int n, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        GenSpec spec{ring, n, 9, seed + 1000 * attempt, MatrixShape::Dense};
        Matrix m = gen_matrix(spec);
        if (!determinant(m).is_zero()) return m;
    }
}

} // namespace

TEST_CASE("multiplication basics") {
    Matrix a = testdata::input_matrix(kQ);
    Matrix id = Matrix::identity(5, kQ);
    CHECK(multiply(id, a) == a);

    Matrix e12(2, kQ), e21(2, kQ), e11(2, kQ);
    e12.set(0, 1, Scalar::one(kQ));
    e21.set(1, 0, Scalar::one(kQ));
    e11.set(0, 0, Scalar::one(kQ));
    CHECK(multiply(e12, e21) == e11);

    Matrix small(2, kQ);
    CHECK_THROWS_AS(multiply(a, small), PreconditionError);
    CHECK_THROWS_AS(multiply(a, testdata::input_matrix(kZ)), RingMismatchError);
}

TEST_CASE("conjugation by the first worked-example conjugator") {
    Matrix a = testdata::input_matrix(kQ);
    Matrix b1 = parse_matrix(kQ, testdata::kTwoStepConjugator1);
    Matrix expected = parse_matrix(kQ, testdata::kTwoStepIntermediate);

    // Independent route: multiply out B1 * A * B1^-1 by hand.
    Matrix by_hand = multiply(multiply(b1, a), invert(b1));
    CHECK(by_hand == expected);

    SimilarityWitness w = conjugate(a, b1);
    CHECK(w.result == expected);
    CHECK(trace(w.result) == trace(a));
    CHECK(multiply(w.conjugator, w.conjugator_inverse) == Matrix::identity(5, kQ));
}

TEST_CASE("inversion") {
    CHECK(invert(Matrix::identity(4, kQ)) == Matrix::identity(4, kQ));

    Matrix b2 = parse_matrix(kQ, testdata::kTwoStepConjugator2);
    Matrix expected = parse_matrix(kQ,
                                   " 1  0   2/5  0  0;"
                                   " 0  1  -4/5  0  0;"
                                   " 0  0     1  0  0;"
                                   " 0  0 -13/5  1  0;"
                                   " 0  0    -1  0  1");
    CHECK(invert(b2) == expected);

    Matrix zero(3, kQ);
    CHECK_THROWS_AS(invert(zero), SingularMatrixError);
    try {
        invert(zero);
    } catch (const SingularMatrixError& e) {
        CHECK(e.column() == 1);
    }

    // Z matrices are lifted to Q.
    Matrix zm = parse_matrix(kZ, "2 0; 0 1");
    Matrix zi = invert(zm);
    CHECK(zi.ring() == kQ);
    CHECK(zi.at(0, 0).str() == "1/2");
}

TEST_CASE("inverse round-trips on random invertible matrices") {
    for (const RingSpec& ring : {kQ, kZ, RingSpec::gf(5)}) {
        for (int i = 0; i < 500; ++i) {
            int n = 2 + static_cast<int>(i % 5);
            Matrix x = random_invertible(ring, n, 40000 + i);
            Matrix xi = invert(x);
            Matrix xf = lift_to_field(x);
            CHECK(multiply(xf, xi) == Matrix::identity(x.order(), xf.ring()));
            CHECK(multiply(xi, xf) == Matrix::identity(x.order(), xf.ring()));
        }
    }
}

TEST_CASE("conjugation round-trip over GF(5)") {
    const RingSpec gf5 = RingSpec::gf(5);
    for (int i = 0; i < 25; ++i) {
        Matrix a = gen_matrix(GenSpec{gf5, 3, 4, 500 + static_cast<std::uint64_t>(i),
                                      MatrixShape::Dense});
        Matrix p = random_invertible(gf5, 3, 900 + i);
        SimilarityWitness there = conjugate(a, p);
        SimilarityWitness back = conjugate(there.result, invert(p));
        CHECK(back.result == a);
    }
}

TEST_CASE("permutation similarity") {
    Matrix a = parse_matrix(kQ, "1 2; 3 4");
    CHECK(permutation_similarity(a, {0, 1}).result == a);
    CHECK(permutation_similarity(a, {1, 0}).result == parse_matrix(kQ, "4 3; 2 1"));
    CHECK_THROWS_AS(permutation_similarity(a, {0, 0}), PreconditionError);
    CHECK_THROWS_AS(permutation_similarity(a, {0}), PreconditionError);

    // Moving entry (4,2) of the worked example to (1,2).
    Matrix big = testdata::input_matrix(kQ);
    const std::vector<int> sigma{2, 1, 3, 0, 4}; // old row 4 -> 1, column 2 stays
    SimilarityWitness w = permutation_similarity(big, sigma);
    CHECK(w.result.at(0, 1).is_one());

    // Permutation conjugators are unimodular: integer entries, det = +-1.
    Scalar det = determinant(w.conjugator);
    CHECK(all_entries_integer(w.conjugator));
    CHECK((det.is_one() || (-det).is_one()));

    // Relabeling identity: result(sigma(i), sigma(j)) = A(i, j).
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(w.result.at(sigma[i], sigma[j]) == big.at(i, j));
}

TEST_CASE("trace and shape predicates") {
    Matrix a = testdata::input_matrix(kQ);
    CHECK(trace(a).str() == "11");
    CHECK(trace(Matrix::identity(4, kQ)).str() == "4");
    CHECK(trace(Matrix(3, kQ)).is_zero());

    Matrix scalar3(3, kQ);
    for (int i = 0; i < 3; ++i) scalar3.set(i, i, Scalar::from_int(kQ, 3));
    CHECK(is_scalar(scalar3));
    CHECK(is_diagonal(scalar3));

    Matrix diag12 = parse_matrix(kQ, "1 0; 0 2");
    CHECK(!is_scalar(diag12));
    CHECK(is_diagonal(diag12));

    CHECK(!is_scalar(a));
    CHECK(!is_diagonal(a));

    Matrix one(1, kQ);
    CHECK(is_scalar(one)); // every 1x1 matrix is scalar
}

TEST_CASE("characteristic polynomial closed forms") {
    CHECK(char_poly(Matrix::identity(2, kQ)).coeffs ==
          std::vector<Scalar>{Scalar::from_int(kQ, 1), Scalar::from_int(kQ, -2),
                              Scalar::from_int(kQ, 1)});
    CHECK(char_poly(parse_matrix(kQ, "0 1; 1 0")).coeffs ==
          std::vector<Scalar>{Scalar::from_int(kQ, -1), Scalar::from_int(kQ, 0),
                              Scalar::from_int(kQ, 1)});
}

TEST_CASE("characteristic polynomial matches the permutation-expansion oracle") {
    // The worked 5x5 example...
    Matrix a = testdata::input_matrix(kZ);
    CHECK(char_poly(a).coeffs == oracle::leibniz_char_poly(a));

    // ...and random draws over every ring at n <= 4.
    for (const RingSpec& ring : {kQ, kZ, RingSpec::gf(2), RingSpec::gf(7)}) {
        for (int i = 0; i < 200; ++i) {
            int n = 2 + static_cast<int>(i % 3);
            GenSpec spec{ring, n, 9, 7000 + static_cast<std::uint64_t>(i), MatrixShape::Dense};
            Matrix m = gen_matrix(spec);
            CharPoly cp = char_poly(m);
            CHECK(cp.coeffs == oracle::leibniz_char_poly(m));
            // monic, degree n, c_{n-1} = -tr
            CHECK(cp.coeffs.back().is_one());
            CHECK(cp.degree() == m.order());
            CHECK(cp.coeffs[m.order() - 1] == -trace(m));
        }
    }
}

TEST_CASE("similarity invariants under random conjugation") {
    for (const RingSpec& ring : {kQ, kZ, RingSpec::gf(3)}) {
        for (int i = 0; i < 60; ++i) {
            int n = 2 + static_cast<int>(i % 5);
            Matrix a = gen_matrix(GenSpec{ring, n, 9, 11000 + static_cast<std::uint64_t>(i),
                                          MatrixShape::Dense});
            Matrix p = random_invertible(ring, n, 12000 + i);
            SimilarityWitness w = conjugate(a, p);
            CHECK(values_equal(trace(w.result), trace(a)));
            CHECK(char_poly(lift_to_field(w.result)) == char_poly(lift_to_field(a)));
        }
    }
}

TEST_CASE("integer narrowing") {
    Matrix q = parse_matrix(kQ, "1 2; 3 4");
    Matrix z = narrow_to_integer(q);
    CHECK(z.ring() == kZ);
    CHECK(values_equal(q, z));
    CHECK_THROWS_AS(narrow_to_integer(parse_matrix(kQ, "1/2 0; 0 1")), PreconditionError);
}

TEST_CASE("matrix text parsing rejects bad input") {
    CHECK_THROWS_AS(parse_matrix(kQ, "1 2; 3"), PreconditionError);
    CHECK_THROWS_AS(parse_matrix(kQ, ""), ParseError);
}
