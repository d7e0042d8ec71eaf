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
#include "fillmore/inductive.hpp"
#include "fillmore/two_step.hpp"
#include "fillmore/verify.hpp"
#include "support/worked_examples.hpp"

using namespace fillmore;

namespace {

const RingSpec kQ = RingSpec::rationals();

std::vector<Scalar> unit_vector(const RingSpec& ring, int n, int j) {
    std::vector<Scalar> e(n, Scalar::zero(ring));
    e[j] = Scalar::one(ring);
    return e;
}

} // namespace

TEST_CASE("independent vector choice") {
    Matrix a = testdata::input_matrix(kQ);
    CHECK(find_independent_vector(a) == unit_vector(kQ, 5, 0)); // column 1 has off-diagonal 2

    Matrix d = parse_matrix(kQ, "2 0 0; 0 2 0; 0 0 3");
    std::vector<Scalar> x = find_independent_vector(d);
    std::vector<Scalar> expected = unit_vector(kQ, 3, 0);
    expected[2] = Scalar::one(kQ); // e_1 + e_3: first differing diagonal pair is (1,3)
    CHECK(x == expected);

    Matrix scalar5(2, kQ);
    for (int i = 0; i < 2; ++i) scalar5.set(i, i, Scalar::from_int(kQ, 5));
    CHECK_THROWS_AS(find_independent_vector(scalar5), PreconditionError);
}

TEST_CASE("basis change puts gamma at (1,1) with a unit below it") {
    SUBCASE("n=2: the basis is exactly {x, Ax - gamma x}") {
        Matrix a = parse_matrix(kQ, "0 1; 1 0");
        std::vector<Scalar> x = unit_vector(kQ, 2, 0);
        BasisChange bc = build_basis_change(a, x, Scalar::zero(kQ));
        CHECK(bc.basis_matrix == Matrix::identity(2, kQ)); // Ax - 0x = e_2
        Matrix m = multiply(multiply(invert(bc.basis_matrix), a), bc.basis_matrix);
        CHECK(m == a);
        CHECK(m.at(0, 0).is_zero());
        CHECK(m.at(1, 0).is_one());
    }
    SUBCASE("n=2 diagonal form (gamma, tr - gamma)") {
        Matrix a = parse_matrix(kQ, "1 2; 3 4");
        Scalar gamma = Scalar::from_int(kQ, -7);
        BasisChange bc = build_basis_change(a, find_independent_vector(a), gamma);
        Matrix m = multiply(multiply(invert(bc.basis_matrix), a), bc.basis_matrix);
        CHECK(m.at(0, 0) == gamma);
        CHECK(m.at(1, 1) == trace(a) - gamma);
    }
    SUBCASE("worked example first column") {
        Matrix a = testdata::input_matrix(kQ);
        BasisChange bc = build_basis_change(a, unit_vector(kQ, 5, 0), Scalar::from_int(kQ, 3));
        Matrix m = multiply(multiply(invert(bc.basis_matrix), a), bc.basis_matrix);
        CHECK(m.at(0, 0) == Scalar::from_int(kQ, 3));
        CHECK(m.at(1, 0).is_one());
        for (int i = 2; i < 5; ++i) CHECK(m.at(i, 0).is_zero());
    }
    SUBCASE("dependent x and Ax is rejected") {
        Matrix a = parse_matrix(kQ, "1 0; 0 2");
        CHECK_THROWS_AS(build_basis_change(a, unit_vector(kQ, 2, 0), Scalar::zero(kQ)),
                        PreconditionError);
    }
}

TEST_CASE("deflation postconditions on random instances") {
    for (const RingSpec& ring : {kQ, RingSpec::gf(2), RingSpec::gf(5)}) {
        for (int i = 0; i < 40; ++i) {
            int n = 3 + i % 4;
            Matrix a = gen_matrix(GenSpec{ring, n, 9, 81000 + static_cast<std::uint64_t>(i),
                                          MatrixShape::Dense});
            SplitMix64 rng(82000 + i);
            Scalar gamma1 = draw_scalar(ring, 9, rng);
            DeflationStage stage = deflate(a, gamma1);
            CHECK(stage.witness.result.at(0, 0) == gamma1);
            CHECK(stage.witness.result.at(1, 2).is_one());
            CHECK(!is_scalar(trailing_block(stage.witness.result, 1)));
            CHECK(multiply(multiply(stage.witness.conjugator, a),
                           stage.witness.conjugator_inverse) == stage.witness.result);
        }
    }
    CHECK_THROWS_AS(deflate(parse_matrix(kQ, "0 1; 1 0"), Scalar::zero(kQ)), PreconditionError);
}

TEST_CASE("the (1,3) fix-up uses alpha_23 - 1, not 1 - alpha_23") {
    // A basis-changed matrix where the two candidate fix-ups differ: the
    // cyclic shift is already in basis form with alpha_23 = 0, alpha_21 = 1.
    Matrix m = parse_matrix(kQ, "0 0 1; 1 0 0; 0 1 0");
    REQUIRE(m.at(1, 0).is_one());
    REQUIRE(m.at(1, 2).is_zero());

    // Fix-up as implemented: (1,3) entry alpha_23 - 1 = -1.
    Matrix good = Matrix::identity(3, kQ);
    good.set(0, 2, m.at(1, 2) - Scalar::one(kQ));
    CHECK(conjugate(m, good).result.at(1, 2).is_one());

    // The sign-flipped variant 1 - alpha_23 = +1 fails the postcondition.
    Matrix flipped = Matrix::identity(3, kQ);
    flipped.set(0, 2, Scalar::one(kQ) - m.at(1, 2));
    CHECK(conjugate(m, flipped).result.at(1, 2) == Scalar::from_int(kQ, -1));

    // deflate() itself is wired to the working fix-up.
    DeflationStage stage = deflate(m, Scalar::zero(kQ));
    CHECK(stage.witness.result.at(1, 2).is_one());
}

TEST_CASE("inductive solve handles the worked example") {
    Matrix a = testdata::input_matrix(kQ);
    DiagonalSpec gamma = testdata::target_diagonal(kQ);
    SolveOutcome solved = solve_inductive(a, gamma);
    CHECK(solved.witness.result.diagonal() == gamma.targets);
    CHECK(verify(a, gamma, solved.witness).pass());
    CHECK(verify_trace(a, solved.trace, &solved.witness).pass());
    CHECK(solved.conjugation_count() == 4); // n - 1 stages
    CHECK(solved.trace.steps.front().kind == StepKind::Deflate);
    CHECK(solved.trace.steps.back().kind == StepKind::BaseCase);
    for (const TraceStep& step : solved.trace.steps) CHECK(step.basis.has_value());

    // Same diagonal and same similarity class as the two-step result; the
    // matrices themselves are allowed to differ.
    SolveOutcome two_step = solve_two_step(a, gamma, PivotChoice{3, 4});
    CHECK(char_poly(two_step.witness.result) == char_poly(solved.witness.result));
    CHECK(two_step.witness.result.diagonal() == solved.witness.result.diagonal());
}

TEST_CASE("inductive base case at n=2") {
    Matrix a = parse_matrix(kQ, "0 1; 1 0");
    DiagonalSpec gamma = parse_diagonal(kQ, "4 -4");
    SolveOutcome solved = solve_inductive(a, gamma);
    CHECK(solved.witness.result.diagonal() == gamma.targets);
    CHECK(verify(a, gamma, solved.witness).pass());
    CHECK(solved.conjugation_count() == 1);
}

TEST_CASE("inductive solve on a diagonal input") {
    Matrix a = parse_matrix(kQ, "1 0 0; 0 2 0; 0 0 3");
    DiagonalSpec gamma = parse_diagonal(kQ, "6 0 0");
    SolveOutcome solved = solve_inductive(a, gamma);
    CHECK(solved.witness.result.diagonal() == gamma.targets);
    CHECK(verify(a, gamma, solved.witness).pass());
}

TEST_CASE("inductive randomized theorem check") {
    for (const RingSpec& ring : {kQ, RingSpec::gf(2), RingSpec::gf(3), RingSpec::gf(7)}) {
        for (int i = 0; i < 40; ++i) {
            int n = 2 + i % 6;
            MatrixShape shape = i % 6 == 0 ? MatrixShape::Diagonal : MatrixShape::Dense;
            Matrix a = gen_matrix(GenSpec{ring, n, 9, 91000 + static_cast<std::uint64_t>(i),
                                          shape});
            DiagonalSpec gamma = gen_diagonal_spec(a, 92000 + i);
            SolveOutcome solved = solve_inductive(a, gamma);
            CHECK(solved.witness.result.diagonal() == gamma.targets);
            CHECK(solved.conjugation_count() == n - 1);
            CHECK(multiply(multiply(solved.witness.conjugator, a),
                           solved.witness.conjugator_inverse) == solved.witness.result);
        }
    }
}

TEST_CASE("inductive solve rejects bad inputs") {
    Matrix scalar2(2, kQ);
    for (int i = 0; i < 2; ++i) scalar2.set(i, i, Scalar::from_int(kQ, 2));
    CHECK_THROWS_AS(solve_inductive(scalar2, parse_diagonal(kQ, "0 4")), PreconditionError);
    CHECK_THROWS_AS(solve_inductive(parse_matrix(kQ, "1 2; 3 4"), parse_diagonal(kQ, "9 9")),
                    PreconditionError);
}
