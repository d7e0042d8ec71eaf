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
 * @file integer_solve.hpp
 * @brief Prescribed diagonals for integer matrices with integer results.
 *
 * The pipeline first makes some off-diagonal entry equal to 1 (Bezout
 * blocks are unimodular, so everything stays integer), then reuses the row
 * and column similarities of the two-step solver at that unit pivot, where
 * both conjugators are integer with determinant 1.
 *
 * Every intermediate matrix is integer. The overall conjugator can still
 * be rational: the bump and the final first-row scaling use rational
 * conjugators, and each trace step is labeled with the ring its conjugator
 * honestly lives in so callers can detect non-unimodular witnesses.
 */

#include "fillmore/matrix.hpp"
#include "fillmore/trace.hpp"
#include "fillmore/two_step.hpp"

namespace fillmore {

/// Result of making an off-diagonal entry 1: witness to an integer matrix
/// with result(position) = 1, plus the steps that got there.
struct UnitEntryOutcome {
    SimilarityWitness witness;
    PivotChoice position;
    ReductionTrace trace;
};

/**
 * Finds (or creates) an off-diagonal unit entry in a nonscalar integer
 * matrix.
 *
 * Branches: an existing off-diagonal 1 needs no work; a diagonal matrix is
 * bumped (rational conjugator, integer result); otherwise a permutation
 * moves the lexicographically smallest nonzero off-diagonal entry to
 * (1,2) and a loop of unimodular Bezout conjugations reduces the first
 * row to (a_11, gcd, 0, ..., 0), scaling the (1,1) entry at the end if the
 * gcd is not 1.
 */
UnitEntryOutcome find_unit_entry(const Matrix& a);

/**
 * Integer pipeline: find_unit_entry, then unify_row and set_diagonal at
 * the unit pivot. The result is an integer matrix with diagonal exactly
 * gamma; the witness verifies over Q.
 */
SolveOutcome solve_integer(const Matrix& a, const DiagonalSpec& gamma);

} // namespace fillmore
