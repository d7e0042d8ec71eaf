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

#include "fillmore/integer_solve.hpp"

#include <numeric>

namespace fillmore {

namespace {

SimilarityWitness compose(const SimilarityWitness& first, const SimilarityWitness& second) {
    return SimilarityWitness{multiply(second.conjugator, first.conjugator),
                             multiply(first.conjugator_inverse, second.conjugator_inverse),
                             second.result};
}

void require_integer_ring(const Matrix& a, const char* who) {
    if (a.ring().kind() != RingKind::Integer) {
        throw PreconditionError(std::string(who) + " needs a Z matrix, got " + a.ring().name());
    }
}

Matrix require_integer_result(const Matrix& m, const char* when) {
    if (m.ring().kind() == RingKind::Integer) return m;
    if (!all_entries_integer(m)) {
        throw InternalError(std::string("non-integer matrix after ") + when);
    }
    return narrow_to_integer(m);
}

std::optional<PivotChoice> existing_unit_entry(const Matrix& a) {
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (i != j && a.at(i, j).is_one()) return PivotChoice{i + 1, j + 1};
    return std::nullopt;
}

int count_nonzero_tail(const Matrix& m) {
    int count = 0;
    for (int j = 2; j < m.order(); ++j)
        if (!m.at(0, j).is_zero()) ++count;
    return count;
}

} // namespace

UnitEntryOutcome find_unit_entry(const Matrix& a) {
    require_integer_ring(a, "find_unit_entry");
    if (is_scalar(a)) {
        throw PreconditionError("matrix is scalar; theorem hypothesis violated");
    }
    const int n = a.order();
    const RingSpec z = RingSpec::integers();

    if (auto unit = existing_unit_entry(a)) {
        // Nothing to do; the identity witness already certifies A ~ A.
        Matrix id = Matrix::identity(n, RingSpec::rationals());
        return UnitEntryOutcome{SimilarityWitness{id, id, a}, *unit, ReductionTrace{}};
    }

    UnitEntryOutcome out{SimilarityWitness{Matrix::identity(n, RingSpec::rationals()),
                                           Matrix::identity(n, RingSpec::rationals()), a},
                         PivotChoice{0, 0}, ReductionTrace{}};

    if (is_diagonal(a)) {
        int s = 0;
        for (int j = 1; j < n; ++j) {
            if (a.at(j, j) != a.at(0, 0)) {
                s = j + 1;
                break;
            }
        }
        SimilarityWitness bump = diagonal_bump(a, s);
        bump.result = require_integer_result(bump.result, "diagonal bump");
        out.witness = bump;
        out.position = PivotChoice{1, s};
        out.trace.steps.push_back(TraceStep{StepKind::Bump, 1, s, 0, std::nullopt,
                                            bump.conjugator, classify_conjugator(bump.conjugator),
                                            bump.result, std::nullopt});
        return out;
    }

    // Move the lexicographically smallest nonzero off-diagonal entry to
    // (1,2) so the first-row reduction below applies.
    Matrix current = a;
    PivotChoice lead = choose_pivot(a); // no unit entries, so smallest nonzero
    if (lead != PivotChoice{1, 2}) {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        // Send old row lead.r to 1 and old column lead.s to 2, keeping the
        // remaining indices in ascending order.
        std::vector<int> order;
        order.push_back(lead.r - 1);
        order.push_back(lead.s - 1);
        for (int i = 0; i < n; ++i)
            if (i != lead.r - 1 && i != lead.s - 1) order.push_back(i);
        for (int pos = 0; pos < n; ++pos) sigma[order[pos]] = pos;

        SimilarityWitness perm = permutation_similarity(current, sigma);
        perm.result = require_integer_result(perm.result, "permutation");
        out.witness = compose(out.witness, perm);
        current = perm.result;
        out.trace.steps.push_back(TraceStep{StepKind::Permute, lead.r, lead.s, 0, std::nullopt,
                                            perm.conjugator, classify_conjugator(perm.conjugator),
                                            current, std::nullopt});
        if (current.at(0, 1).is_zero()) {
            throw InternalError("permutation failed to populate (1,2)");
        }
    }

    // First-row reduction: repeatedly fold the leftmost nonzero tail entry
    // a_1k into a_12 with a unimodular Bezout block. Each round zeroes one
    // tail entry, so the round count is bounded by (n-2) plus the bits of
    // the starting |a_12| (the gcd can only shrink).
    const Int initial_a12 = abs(current.at(0, 1).numerator());
    const long max_rounds = static_cast<long>(n - 2) +
                            static_cast<long>(mpz_sizeinbase(initial_a12.get_mpz_t(), 2));
    long rounds = 0;
    bool done = false;
    while (!done) {
        int k0 = 0; // 0-based column of the leftmost nonzero tail entry
        for (int j = 2; j < n; ++j) {
            if (!current.at(0, j).is_zero()) {
                k0 = j;
                break;
            }
        }
        if (k0 == 0) break; // tail is zero: fall through to the scaling step

        const int tail_before = count_nonzero_tail(current);
        BezoutTriple bez = extended_gcd(current.at(0, 1).numerator(),
                                        current.at(0, k0).numerator());
        Matrix b = Matrix::identity(n, z);
        b.set(1, 1, Scalar::from_int(z, bez.p));
        b.set(1, k0, Scalar::from_int(z, bez.q));
        b.set(k0, 1, Scalar::from_int(z, bez.r));
        b.set(k0, k0, Scalar::from_int(z, bez.s));

        SimilarityWitness step = conjugate(current, b);
        step.result = require_integer_result(step.result, "Bezout round");
        if (step.result.at(0, 1).numerator() != bez.m || !step.result.at(0, k0).is_zero()) {
            throw InternalError("Bezout round left the wrong first row");
        }
        if (count_nonzero_tail(step.result) >= tail_before) {
            throw InternalError("Bezout round made no progress");
        }
        if (++rounds > max_rounds) {
            throw InternalError("Bezout reduction exceeded its round bound");
        }

        out.witness = compose(out.witness, step);
        current = step.result;
        out.trace.steps.push_back(TraceStep{StepKind::BezoutStep2, 1, 2, k0 + 1, bez,
                                            step.conjugator, classify_conjugator(step.conjugator),
                                            current, std::nullopt});
        if (bez.m == 1) done = true; // unit already sits at (1,2)
    }

    if (!current.at(0, 1).is_one()) {
        // Scale the (1,1) entry by 1/a_12. The tail is zero, so row 1
        // becomes (a_11, 1, 0, ..., 0); column 1 is multiplied by a_12 and
        // stays integer.
        Scalar a12 = current.at(0, 1).lifted_to_rationals();
        Matrix b = Matrix::identity(n, RingSpec::rationals());
        b.set(0, 0, a12.inverse());
        SimilarityWitness step = conjugate(current, b);
        step.result = require_integer_result(step.result, "first-row scaling");
        if (!step.result.at(0, 1).is_one()) {
            throw InternalError("first-row scaling did not produce a unit at (1,2)");
        }
        for (int j = 2; j < n; ++j) {
            if (!step.result.at(0, j).is_zero()) {
                throw InternalError("first-row scaling disturbed the zero tail");
            }
        }
        out.witness = compose(out.witness, step);
        current = step.result;
        out.trace.steps.push_back(TraceStep{StepKind::ScaleStep3, 1, 2, 0, std::nullopt,
                                            step.conjugator, classify_conjugator(step.conjugator),
                                            current, std::nullopt});
    }

    out.position = PivotChoice{1, 2};
    if (!current.at(0, 1).is_one()) {
        throw InternalError("unit entry reduction failed");
    }
    return out;
}

SolveOutcome solve_integer(const Matrix& a, const DiagonalSpec& gamma) {
    require_integer_ring(a, "integer solver");
    for (const Scalar& t : gamma.targets) {
        if (t.ring().kind() != RingKind::Integer) {
            throw PreconditionError("integer solver needs integer diagonal targets, got " +
                                    t.str() + " in " + t.ring().name());
        }
    }
    require_solvable(a, gamma);

    UnitEntryOutcome unit = find_unit_entry(a);
    SolveOutcome out{unit.witness, std::move(unit.trace), "integer"};
    Matrix current = unit.witness.result;

    SimilarityWitness w1 = unify_row(current, unit.position);
    w1.result = require_integer_result(w1.result, "unify_row at unit pivot");
    out.witness = compose(out.witness, w1);
    current = w1.result;
    out.trace.steps.push_back(TraceStep{StepKind::UnifyRow, unit.position.r, unit.position.s, 0,
                                        std::nullopt, w1.conjugator,
                                        classify_conjugator(w1.conjugator), current,
                                        std::nullopt});

    SimilarityWitness w2 = set_diagonal(current, unit.position.r, gamma);
    w2.result = require_integer_result(w2.result, "set_diagonal at unit row");
    out.witness = compose(out.witness, w2);
    current = w2.result;
    out.trace.steps.push_back(TraceStep{StepKind::SetDiagonal, unit.position.r, 0, 0, std::nullopt,
                                        w2.conjugator, classify_conjugator(w2.conjugator), current,
                                        std::nullopt});

    for (int i = 0; i < a.order(); ++i) {
        if (!values_equal(current.at(i, i), gamma.targets[i])) {
            throw InternalError("integer solve missed diagonal entry " + std::to_string(i + 1));
        }
    }
    return out;
}

} // namespace fillmore
