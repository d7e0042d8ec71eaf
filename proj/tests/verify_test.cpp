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
#include "fillmore/integer_solve.hpp"
#include "fillmore/two_step.hpp"
#include "fillmore/verify.hpp"
#include "support/mutants.hpp"
#include "support/worked_examples.hpp"

using namespace fillmore;

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kQ = RingSpec::rationals();

} // namespace

TEST_CASE("worked example witnesses verify on every flag") {
    SUBCASE("two-step composition") {
        Matrix a = testdata::input_matrix(kQ);
        Matrix b1 = parse_matrix(kQ, testdata::kTwoStepConjugator1);
        Matrix b2 = parse_matrix(kQ, testdata::kTwoStepConjugator2);
        Matrix p = multiply(b2, b1);
        SimilarityWitness w{p, invert(p), parse_matrix(kQ, testdata::kTwoStepFinal)};
        VerificationReport report = verify(a, testdata::target_diagonal(kQ), w);
        CHECK(report.pass());
        CHECK(report.witness_ok.value_or(false));
        CHECK(report.diagonal_ok.value_or(false));
        CHECK(report.trace_ok.value_or(false));
        CHECK(report.charpoly_ok.value_or(false));
        CHECK(!report.integrality_ok.has_value()); // not an integer run
    }
    SUBCASE("integer pipeline includes integrality") {
        Matrix a = testdata::input_matrix(kZ);
        SolveOutcome solved = solve_integer(a, testdata::target_diagonal(kZ));
        VerificationReport report = verify(a, testdata::target_diagonal(kZ), solved.witness);
        CHECK(report.pass());
        CHECK(report.integrality_ok.value_or(false));
    }
}

TEST_CASE("a tampered result is flagged with a location") {
    Matrix a = testdata::input_matrix(kQ);
    SolveOutcome solved = solve_two_step(a, testdata::target_diagonal(kQ), PivotChoice{3, 4});
    Matrix tampered = solved.witness.result;
    tampered.set(0, 1, tampered.at(0, 1) + Scalar::one(kQ));
    SimilarityWitness w{solved.witness.conjugator, solved.witness.conjugator_inverse, tampered};
    VerificationReport report = verify(a, testdata::target_diagonal(kQ), w);
    CHECK(!report.pass());
    CHECK(!report.witness_ok.value_or(true));
    CHECK(report.first_failure.value_or("").find("(1,2)") != std::string::npos);
}

TEST_CASE("verify rejects order mismatches") {
    Matrix a = testdata::input_matrix(kQ);
    Matrix small = parse_matrix(kQ, "1 0; 0 2");
    SimilarityWitness w{small, small, small};
    CHECK_THROWS_AS(verify(a, testdata::target_diagonal(kQ), w), PreconditionError);
}

TEST_CASE("trace replay accepts honest runs and catches edits") {
    Matrix a = testdata::input_matrix(kZ);
    SolveOutcome solved = solve_integer(a, testdata::target_diagonal(kZ));

    SUBCASE("honest trace passes") {
        CHECK(verify_trace(a, solved.trace, &solved.witness).pass());
    }
    SUBCASE("reordered steps fail at the first mismatch") {
        ReductionTrace reordered = solved.trace;
        std::swap(reordered.steps[0], reordered.steps[1]);
        VerificationReport report = verify_trace(a, reordered, &solved.witness);
        CHECK(!report.replay_ok.value_or(true));
        CHECK(report.first_failure.value_or("").find("step 1") != std::string::npos);
    }
    SUBCASE("a mislabeled conjugator ring fails the label check") {
        // Claim the rational bump of a diagonal instance is unimodular.
        Matrix d = parse_matrix(kZ, "3 0; 0 7");
        SolveOutcome run = solve_integer(d, parse_diagonal(kZ, "1 9"));
        REQUIRE(run.trace.steps.front().kind == StepKind::Bump);
        REQUIRE(run.trace.steps.front().conjugator_ring == ConjugatorRing::Rational);
        ReductionTrace edited = run.trace;
        edited.steps.front().conjugator_ring = ConjugatorRing::IntegerUnimodular;
        VerificationReport report = verify_trace(d, edited, &run.witness);
        CHECK(!report.labels_ok.value_or(true));
        CHECK(report.first_failure.value_or("").find("label") != std::string::npos);
    }
    SUBCASE("a foreign witness fails the composition check") {
        SimilarityWitness other{Matrix::identity(5, kQ), Matrix::identity(5, kQ),
                                lift_to_field(a)};
        VerificationReport report = verify_trace(a, solved.trace, &other);
        CHECK(!report.replay_ok.value_or(true));
    }
}

TEST_CASE("mutation: sign-flipped unify_row is always caught") {
    // Over Q (the flip is invisible in characteristic 2).
    std::vector<Matrix> instances{testdata::input_matrix(kQ)};
    for (int i = 0; i < 20; ++i) {
        Matrix m = gen_matrix(GenSpec{kQ, 3 + i % 4, 9, 141000 + static_cast<std::uint64_t>(i),
                                      MatrixShape::Dense});
        if (!is_diagonal(m)) instances.push_back(m);
    }
    int detected = 0, total = 0;
    for (const Matrix& a : instances) {
        DiagonalSpec gamma = gen_diagonal_spec(a, 142000 + total);
        SimilarityWitness w = mutants::solve_with_flipped_unify_row(a, gamma);
        if (w.result.diagonal() == gamma.targets) continue; // mutation invisible here
        ++total;
        if (!verify(a, gamma, w).pass()) ++detected;
    }
    CHECK(total > 10);
    CHECK(detected == total); // 100% of visible mutations flagged
}

TEST_CASE("mutation: off-by-one set_diagonal column is always caught") {
    std::vector<Matrix> instances{testdata::input_matrix(kQ)};
    for (int i = 0; i < 20; ++i) {
        Matrix m = gen_matrix(GenSpec{kQ, 3 + i % 4, 9, 143000 + static_cast<std::uint64_t>(i),
                                      MatrixShape::Dense});
        if (!is_diagonal(m)) instances.push_back(m);
    }
    int detected = 0, total = 0;
    for (const Matrix& a : instances) {
        DiagonalSpec gamma = gen_diagonal_spec(a, 144000 + total);
        SimilarityWitness w = mutants::solve_with_shifted_set_diagonal(a, gamma);
        if (w.result.diagonal() == gamma.targets) continue;
        ++total;
        if (!verify(a, gamma, w).pass()) ++detected;
    }
    CHECK(total > 10);
    CHECK(detected == total);
}

TEST_CASE("mutation: dropped first-row scaling is always caught") {
    // Instances whose reduction genuinely needs the scaling step.
    std::vector<Matrix> instances;
    instances.push_back(parse_matrix(kZ, "0 6 10 0; 2 5 0 0; 0 3 3 0; 4 0 0 3"));
    instances.push_back(parse_matrix(kZ, "1 4 0; 3 0 2; 5 0 2"));
    instances.push_back(parse_matrix(kZ, "2 -6 0; 7 3 0; 0 5 4"));
    for (const Matrix& a : instances) {
        DiagonalSpec gamma = gen_diagonal_spec(a, 145000);
        auto [witness, trace] = mutants::solve_integer_without_scaling(a, gamma);
        bool flagged = !verify(a, gamma, witness).pass() ||
                       !verify_trace(a, trace, &witness).pass();
        CHECK(flagged);
    }
}
