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

#include "fillmore/two_step.hpp"

namespace fillmore {

namespace {

void check_index(const Matrix& a, int idx, const char* what) {
    if (idx < 1 || idx > a.order()) {
        throw PreconditionError(std::string(what) + " " + std::to_string(idx) +
                                " outside 1.." + std::to_string(a.order()));
    }
}

SimilarityWitness compose(const SimilarityWitness& first, const SimilarityWitness& second) {
    return SimilarityWitness{multiply(second.conjugator, first.conjugator),
                             multiply(first.conjugator_inverse, second.conjugator_inverse),
                             second.result};
}

} // namespace

void require_solvable(const Matrix& a, const DiagonalSpec& gamma) {
    if (is_scalar(a)) {
        throw PreconditionError("matrix is scalar; theorem hypothesis violated");
    }
    if (gamma.size() != a.order()) {
        throw PreconditionError("diagonal has " + std::to_string(gamma.size()) +
                                " targets for an order-" + std::to_string(a.order()) + " matrix");
    }
    Scalar want = gamma.sum();
    Scalar have = trace(a);
    if (!values_equal(want, have)) {
        throw PreconditionError("trace mismatch: sum(gamma) = " + want.str() + " but tr A = " +
                                have.str());
    }
}

SimilarityWitness diagonal_bump(const Matrix& a, int s) {
    check_index(a, s, "bump column");
    if (s == 1) throw PreconditionError("bump column must differ from row 1");
    if (!is_diagonal(a)) throw PreconditionError("diagonal_bump needs a diagonal matrix");
    if (is_scalar(a)) throw PreconditionError("matrix is scalar; theorem hypothesis violated");
    const int s0 = s - 1;
    Scalar diff = a.at(s0, s0) - a.at(0, 0);
    if (diff.is_zero()) {
        throw PreconditionError("bump needs a_11 != a_ss, both are " + a.at(0, 0).str());
    }
    Matrix af = lift_to_field(a);
    Matrix b = Matrix::identity(af.order(), af.ring());
    Scalar diff_f = a.ring().kind() == RingKind::Integer ? diff.lifted_to_rationals() : diff;
    b.set(0, s0, diff_f.inverse());
    return conjugate(a, b);
}

PivotChoice choose_pivot(const Matrix& a) {
    if (is_diagonal(a)) {
        throw PreconditionError("choose_pivot needs a non-diagonal matrix");
    }
    std::optional<PivotChoice> first_nonzero;
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            if (i == j) continue;
            const Scalar& v = a.at(i, j);
            if (v.is_zero()) continue;
            if (v.is_one()) return PivotChoice{i + 1, j + 1};
            if (!first_nonzero) first_nonzero = PivotChoice{i + 1, j + 1};
        }
    }
    return *first_nonzero;
}

SimilarityWitness unify_row(const Matrix& a, const PivotChoice& pivot) {
    check_index(a, pivot.r, "pivot row");
    check_index(a, pivot.s, "pivot column");
    if (pivot.r == pivot.s) throw PreconditionError("pivot needs r != s");
    const int r0 = pivot.r - 1;
    const int s0 = pivot.s - 1;
    if (a.at(r0, s0).is_zero()) {
        throw PreconditionError("zero pivot at (" + std::to_string(pivot.r) + "," +
                                std::to_string(pivot.s) + ")");
    }
    Matrix af = lift_to_field(a);
    Matrix b = Matrix::identity(af.order(), af.ring());
    const Scalar one = Scalar::one(af.ring());
    b.set(s0, s0, af.at(r0, s0));
    for (int k = 0; k < af.order(); ++k) {
        if (k == r0 || k == s0) continue;
        b.set(s0, k, af.at(r0, k) - one);
    }
    return conjugate(a, b);
}

SimilarityWitness set_diagonal(const Matrix& a, int r, const DiagonalSpec& gamma) {
    check_index(a, r, "row");
    const int r0 = r - 1;
    for (int k = 0; k < a.order(); ++k) {
        if (k != r0 && !a.at(r0, k).is_one()) {
            throw PreconditionError("row " + std::to_string(r) +
                                    " must have all off-diagonal entries 1, entry (" +
                                    std::to_string(r) + "," + std::to_string(k + 1) + ") is " +
                                    a.at(r0, k).str());
        }
    }
    require_solvable(a, gamma); // also rejects trace mismatches
    Matrix af = lift_to_field(a);
    Matrix b = Matrix::identity(af.order(), af.ring());
    const DiagonalSpec targets = align_diagonal_ring(gamma, af.ring());
    for (int k = 0; k < af.order(); ++k) {
        if (k == r0) continue;
        b.set(k, r0, targets.targets[k] - af.at(k, k));
    }
    return conjugate(a, b);
}

SolveOutcome solve_two_step(const Matrix& a, const DiagonalSpec& gamma,
                            std::optional<PivotChoice> forced_pivot) {
    if (!a.ring().is_field()) {
        throw PreconditionError("two-step solver runs over Q or GF(p); lift Z inputs first");
    }
    require_solvable(a, gamma);

    SolveOutcome out{SimilarityWitness{Matrix::identity(a.order(), a.ring()),
                                       Matrix::identity(a.order(), a.ring()), a},
                     ReductionTrace{}, "two-step"};
    Matrix current = a;
    PivotChoice pivot{0, 0};

    if (is_diagonal(current)) {
        if (forced_pivot) {
            throw PreconditionError("cannot force a pivot on a diagonal input");
        }
        int s = 0;
        for (int j = 1; j < current.order(); ++j) {
            if (current.at(j, j) != current.at(0, 0)) {
                s = j + 1;
                break;
            }
        }
        SimilarityWitness bump = diagonal_bump(current, s);
        out.witness = bump;
        current = bump.result;
        out.trace.steps.push_back(TraceStep{StepKind::Bump, 1, s, 0, std::nullopt,
                                            bump.conjugator, classify_conjugator(bump.conjugator),
                                            current, std::nullopt});
        pivot = PivotChoice{1, s}; // the freshly created unit entry
    } else {
        pivot = forced_pivot ? *forced_pivot : choose_pivot(current);
    }

    SimilarityWitness w1 = unify_row(current, pivot);
    out.witness = out.trace.steps.empty() ? w1 : compose(out.witness, w1);
    current = w1.result;
    out.trace.steps.push_back(TraceStep{StepKind::UnifyRow, pivot.r, pivot.s, 0, std::nullopt,
                                        w1.conjugator, classify_conjugator(w1.conjugator), current,
                                        std::nullopt});

    SimilarityWitness w2 = set_diagonal(current, pivot.r, gamma);
    out.witness = compose(out.witness, w2);
    current = w2.result;
    out.trace.steps.push_back(TraceStep{StepKind::SetDiagonal, pivot.r, 0, 0, std::nullopt,
                                        w2.conjugator, classify_conjugator(w2.conjugator), current,
                                        std::nullopt});
    return out;
}

} // namespace fillmore
