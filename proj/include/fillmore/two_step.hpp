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
 * @file two_step.hpp
 * @brief Two-similarity construction of a prescribed diagonal.
 *
 * A nonscalar matrix A over a field with sum(gamma) = tr A is conjugated
 * into a matrix with diagonal exactly gamma using at most three elementary
 * similarities, each differing from the identity in one row or column:
 *
 *   1. (diagonal inputs only) a bump creating a unit off-diagonal entry,
 *   2. a row similarity making every off-diagonal entry of one row 1,
 *   3. a column similarity setting the whole diagonal.
 */

#include <optional>

#include "fillmore/matrix.hpp"
#include "fillmore/trace.hpp"

namespace fillmore {

/// Off-diagonal position (r, s), 1-based, r != s; the designated entry
/// a_rs must be nonzero when used as a pivot.
struct PivotChoice {
    int r;
    int s;

    friend bool operator==(const PivotChoice&, const PivotChoice&) = default;
};

/**
 * For diagonal nonscalar A with a_11 != a_ss: conjugates by the identity
 * plus entry (1,s) = 1/(a_ss - a_11), producing A with a 1 added at (1,s).
 *
 * Works over fields; a Z matrix is conjugated over Q (rational conjugator,
 * integer result).
 */
SimilarityWitness diagonal_bump(const Matrix& a, int s);

/**
 * Deterministic pivot rule for non-diagonal matrices: the lexicographically
 * smallest off-diagonal (r, s) whose entry equals 1, else the
 * lexicographically smallest nonzero off-diagonal entry.
 */
PivotChoice choose_pivot(const Matrix& a);

/**
 * Row similarity at a nonzero pivot a_rs: the conjugator is the identity
 * except row s, where (s,s) = a_rs and (s,k) = a_rk - 1 for k not in
 * {r, s}. Every off-diagonal entry of row r of the result equals 1.
 * The conjugator's determinant is a_rs.
 */
SimilarityWitness unify_row(const Matrix& a, const PivotChoice& pivot);

/**
 * Column similarity at a row r whose off-diagonal entries are all 1: the
 * conjugator is the identity except column r, where (k,r) = gamma_k - a_kk
 * for k != r. The result's diagonal is exactly gamma; the conjugator's
 * determinant is 1.
 */
SimilarityWitness set_diagonal(const Matrix& a, int r, const DiagonalSpec& gamma);

/**
 * Full pipeline over Q or GF(p): optional bump, then unify_row, then
 * set_diagonal. At most 3 conjugations (2 when A is not diagonal).
 *
 * `forced_pivot` overrides choose_pivot for non-diagonal inputs (it is an
 * error to force a pivot on a diagonal input).
 */
SolveOutcome solve_two_step(const Matrix& a, const DiagonalSpec& gamma,
                            std::optional<PivotChoice> forced_pivot = std::nullopt);

/// Shared precondition checks: nonscalar input and sum(gamma) = tr A.
void require_solvable(const Matrix& a, const DiagonalSpec& gamma);

} // namespace fillmore
