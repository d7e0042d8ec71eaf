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

#include "fillmore/inductive.hpp"

#include "fillmore/two_step.hpp"

namespace fillmore {

namespace {

std::vector<Scalar> scaled(const std::vector<Scalar>& v, const Scalar& c) {
    std::vector<Scalar> out = v;
    for (auto& e : out) e = e * c;
    return out;
}

std::vector<Scalar> minus(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - b[i];
    return out;
}

SimilarityWitness compose(const SimilarityWitness& first, const SimilarityWitness& second) {
    return SimilarityWitness{multiply(second.conjugator, first.conjugator),
                             multiply(first.conjugator_inverse, second.conjugator_inverse),
                             second.result};
}

/// Basis change + (2,3)-fixing conjugation for the base case and deflation.
SimilarityWitness represent_in_basis(const Matrix& a, const BasisChange& bc) {
    Matrix s_inv = invert(bc.basis_matrix);
    return conjugate_with_inverse(a, s_inv, bc.basis_matrix);
}

} // namespace

std::vector<Scalar> find_independent_vector(const Matrix& a) {
    if (is_scalar(a)) {
        throw PreconditionError("matrix is scalar; theorem hypothesis violated");
    }
    const int n = a.order();
    const RingSpec& ring = a.ring();
    std::vector<Scalar> x(n, Scalar::zero(ring));
    if (!is_diagonal(a)) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (i != j && !a.at(i, j).is_zero()) {
                    x[j] = Scalar::one(ring);
                    return x;
                }
            }
        }
        throw InternalError("non-diagonal matrix without off-diagonal entries");
    }
    // Diagonal nonscalar: first j with a_jj != a_11 gives the pair (1, j).
    for (int j = 1; j < n; ++j) {
        if (a.at(j, j) != a.at(0, 0)) {
            x[0] = Scalar::one(ring);
            x[j] = Scalar::one(ring);
            return x;
        }
    }
    throw InternalError("diagonal nonscalar matrix with constant diagonal");
}

BasisChange build_basis_change(const Matrix& a, const std::vector<Scalar>& x,
                               const Scalar& gamma1) {
    const Matrix af = lift_to_field(a);
    const RingSpec& ring = af.ring();
    const int n = af.order();
    if (static_cast<int>(x.size()) != n) {
        throw PreconditionError("basis start vector has wrong length");
    }

    std::vector<Scalar> second = minus(mat_vec(af, x), scaled(x, gamma1));
    std::vector<std::vector<Scalar>> basis{x, second};
    if (rank_of_vectors(ring, basis) != 2) {
        throw PreconditionError("x and Ax are linearly dependent");
    }
    for (int j = 0; j < n && static_cast<int>(basis.size()) < n; ++j) {
        std::vector<Scalar> e(n, Scalar::zero(ring));
        e[j] = Scalar::one(ring);
        basis.push_back(e);
        if (rank_of_vectors(ring, basis) != static_cast<int>(basis.size())) {
            basis.pop_back();
        }
    }
    if (static_cast<int>(basis.size()) != n) {
        throw InternalError("failed to complete a basis");
    }
    Matrix s(n, ring);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) s.set(i, j, basis[j][i]);
    return BasisChange{x, std::move(basis), std::move(s)};
}

DeflationStage deflate(const Matrix& a, const Scalar& gamma1) {
    if (a.order() < 3) {
        throw PreconditionError("deflation needs order >= 3, got " + std::to_string(a.order()));
    }
    const Matrix af = lift_to_field(a);
    Scalar gamma = gamma1.ring().kind() == RingKind::Integer && af.ring().kind() == RingKind::Rational
                       ? gamma1.lifted_to_rationals()
                       : gamma1;

    std::vector<Scalar> x = find_independent_vector(af);
    BasisChange bc = build_basis_change(af, x, gamma);
    SimilarityWitness in_basis = represent_in_basis(af, bc);

    const Matrix& m = in_basis.result;
    const Scalar one = Scalar::one(af.ring());
    Matrix fix = Matrix::identity(af.order(), af.ring());
    fix.set(0, 2, m.at(1, 2) - one);
    SimilarityWitness fixed = conjugate(m, fix);

    SimilarityWitness total = compose(in_basis, fixed);
    if (total.result.at(0, 0) != gamma || !total.result.at(1, 2).is_one() ||
        is_scalar(trailing_block(total.result, 1))) {
        throw InternalError("deflation postcondition violated");
    }
    return DeflationStage{std::move(total), std::move(bc)};
}

SolveOutcome solve_inductive(const Matrix& a, const DiagonalSpec& gamma_in) {
    if (!a.ring().is_field()) {
        throw PreconditionError("inductive solver runs over Q or GF(p); lift Z inputs first");
    }
    const DiagonalSpec targets = align_diagonal_ring(gamma_in, a.ring());
    require_solvable(a, targets);

    const int n = a.order();
    const RingSpec& ring = a.ring();
    SolveOutcome out{SimilarityWitness{Matrix::identity(n, ring), Matrix::identity(n, ring), a},
                     ReductionTrace{}, "inductive"};
    Matrix current = a;

    for (int stage = 0; stage + 2 <= n; ++stage) {
        const bool base_case = stage == n - 2;
        Matrix block = trailing_block(current, stage);
        const Scalar& target = targets.targets[stage];

        SimilarityWitness block_witness{block, block, block};
        std::optional<Matrix> basis;
        if (base_case) {
            std::vector<Scalar> x = find_independent_vector(block);
            BasisChange bc = build_basis_change(block, x, target);
            block_witness = represent_in_basis(block, bc);
            basis = bc.basis_matrix;
        } else {
            DeflationStage st = deflate(block, target);
            block_witness = st.witness;
            basis = st.basis_change.basis_matrix;
        }

        Matrix lifted = embed_block(block_witness.conjugator, n, stage, ring);
        Matrix lifted_inv = embed_block(block_witness.conjugator_inverse, n, stage, ring);
        SimilarityWitness step = conjugate_with_inverse(current, lifted, lifted_inv);
        out.witness = stage == 0 ? step : compose(out.witness, step);
        current = step.result;

        // The diag(1, Q) lift must keep every already-fixed entry in place.
        for (int i = 0; i <= stage; ++i) {
            if (!values_equal(current.at(i, i), targets.targets[i])) {
                throw InternalError("stage " + std::to_string(stage + 1) +
                                    " disturbed diagonal entry " + std::to_string(i + 1));
            }
        }
        if (!base_case && is_scalar(trailing_block(current, stage + 1))) {
            throw InternalError("trailing block became scalar after stage " +
                                std::to_string(stage + 1));
        }

        out.trace.steps.push_back(TraceStep{base_case ? StepKind::BaseCase : StepKind::Deflate,
                                            stage + 1, 0, 0, std::nullopt, step.conjugator,
                                            classify_conjugator(step.conjugator), current,
                                            std::move(basis)});
    }

    for (int i = 0; i < n; ++i) {
        if (!values_equal(current.at(i, i), targets.targets[i])) {
            throw InternalError("inductive solve missed diagonal entry " + std::to_string(i + 1));
        }
    }
    return out;
}

} // namespace fillmore
