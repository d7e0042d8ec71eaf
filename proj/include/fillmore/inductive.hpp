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
 * @file inductive.hpp
 * @brief Deflation-based construction of a prescribed diagonal.
 *
 * One diagonal entry at a time: a basis change {x, Ax - gamma*x, e...}
 * puts gamma at (1,1) with first column (gamma, 1, 0, ..., 0), a further
 * one-entry conjugation plants a 1 at (2,3) so the trailing block stays
 * nonscalar, and the solver recurses on that block down to the 2x2 base
 * case. Slower than the two-step route (n - 1 stages) but an independent
 * construction, which makes it a good cross-check.
 */

#include "fillmore/matrix.hpp"
#include "fillmore/trace.hpp"

namespace fillmore {

/// Basis whose first two vectors are x and Ax - gamma*x; `basis_matrix`
/// has the vectors as columns and is nonsingular by construction.
struct BasisChange {
    std::vector<Scalar> x;
    std::vector<std::vector<Scalar>> basis;
    Matrix basis_matrix;
};

/**
 * A deterministic x with x, Ax linearly independent: the first standard
 * basis vector whose column has a nonzero off-diagonal entry, or
 * e_i + e_j for the lexicographically first pair of distinct diagonal
 * entries when A is diagonal. Scalar input is an error.
 */
std::vector<Scalar> find_independent_vector(const Matrix& a);

/**
 * Completes {x, Ax - gamma1*x} to a basis, greedily adding standard basis
 * vectors that pass an exact rank test. Representing A in this basis gives
 * first column (gamma1, 1, 0, ..., 0).
 */
BasisChange build_basis_change(const Matrix& a, const std::vector<Scalar>& x,
                               const Scalar& gamma1);

/// Witness plus the basis change that produced it.
struct DeflationStage {
    SimilarityWitness witness;
    BasisChange basis_change;
};

/**
 * One deflation (order >= 3): the result has gamma1 at (1,1), a 1 at
 * (2,3), and a nonscalar trailing (n-1)x(n-1) block.
 *
 * The entry-fixing conjugator is the identity except (1,3) = alpha_23 - 1,
 * where alpha_23 is the (2,3) entry after the basis change; this is the
 * value that makes the (2,3) entry of the conjugated matrix exactly 1.
 */
DeflationStage deflate(const Matrix& a, const Scalar& gamma1);

/**
 * Full solver over Q or GF(p): n - 2 deflations plus the 2x2 base case,
 * implemented iteratively. Stage conjugators are lifted to diag(I, Q), so
 * already-fixed diagonal entries never move.
 */
SolveOutcome solve_inductive(const Matrix& a, const DiagonalSpec& gamma);

} // namespace fillmore
