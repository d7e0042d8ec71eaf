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

#include "fillmore/verify.hpp"

namespace fillmore {

bool VerificationReport::pass() const {
    for (const auto& flag :
         {witness_ok, diagonal_ok, trace_ok, charpoly_ok, integrality_ok, replay_ok, labels_ok}) {
        if (flag.has_value() && !*flag) return false;
    }
    return true;
}

void VerificationReport::note_failure(const std::string& where) {
    if (!first_failure) first_failure = where;
}

VerificationReport verify(const Matrix& a, const DiagonalSpec& gamma,
                          const SimilarityWitness& w) {
    if (a.order() != w.result.order() || a.order() != w.conjugator.order()) {
        throw PreconditionError("verify: order mismatch between input, conjugator and result");
    }
    if (gamma.size() != a.order()) {
        throw PreconditionError("verify: diagonal length does not match order");
    }

    VerificationReport report;
    const Matrix af = lift_to_field(a);
    const Matrix bf = lift_to_field(w.result);
    const Matrix pf = lift_to_field(w.conjugator);

    // Witness: recompute the inverse rather than trusting the provided one.
    report.witness_ok = false;
    try {
        Matrix p_inv = invert(pf);
        Matrix conjugated = multiply(multiply(pf, af), p_inv);
        if (values_equal(conjugated, bf)) {
            report.witness_ok = true;
        } else {
            for (int i = 0; i < a.order() && !report.first_failure; ++i)
                for (int j = 0; j < a.order(); ++j)
                    if (!values_equal(conjugated.at(i, j), bf.at(i, j))) {
                        report.note_failure("witness mismatch at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
                        break;
                    }
        }
    } catch (const SingularMatrixError&) {
        report.note_failure("conjugator is singular");
    }

    report.diagonal_ok = true;
    for (int i = 0; i < a.order(); ++i) {
        if (!values_equal(w.result.at(i, i), gamma.targets[i])) {
            report.diagonal_ok = false;
            report.note_failure("diagonal entry " + std::to_string(i + 1) + " is " +
                                w.result.at(i, i).str() + ", wanted " + gamma.targets[i].str());
            break;
        }
    }

    Scalar tr_a = trace(af);
    Scalar tr_b = trace(bf);
    Scalar gamma_sum = gamma.sum();
    report.trace_ok = values_equal(tr_a, tr_b) && values_equal(tr_b, gamma_sum);
    if (!*report.trace_ok) {
        report.note_failure("trace drift: tr A = " + tr_a.str() + ", tr B = " + tr_b.str() +
                            ", sum(gamma) = " + gamma_sum.str());
    }

    report.charpoly_ok = char_poly(af) == char_poly(bf);
    if (!*report.charpoly_ok) report.note_failure("characteristic polynomials differ");

    if (a.ring().kind() == RingKind::Integer) {
        report.integrality_ok = all_entries_integer(w.result);
        if (!*report.integrality_ok) report.note_failure("result has a non-integer entry");
    }
    return report;
}

VerificationReport verify_trace(const Matrix& a, const ReductionTrace& trace,
                                const SimilarityWitness* witness) {
    VerificationReport report;
    report.replay_ok = true;
    report.labels_ok = true;

    Matrix current = lift_to_field(a);
    Matrix composed = Matrix::identity(a.order(), current.ring());
    Matrix composed_inv = composed;

    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        const std::string where = "step " + std::to_string(i + 1) + " (" +
                                  step_kind_name(step.kind) + ")";
        if (step.conjugator.order() != a.order() || step.result.order() != a.order()) {
            report.replay_ok = false;
            report.note_failure(where + ": order mismatch");
            break;
        }
        Matrix pf = lift_to_field(step.conjugator);
        try {
            Matrix p_inv = invert(pf);
            Matrix next = multiply(multiply(pf, current), p_inv);
            if (!values_equal(next, lift_to_field(step.result))) {
                report.replay_ok = false;
                report.note_failure(where + ": recorded intermediate does not replay");
                break;
            }
            current = next;
            composed = multiply(pf, composed);
            composed_inv = multiply(composed_inv, p_inv);
        } catch (const SingularMatrixError&) {
            report.replay_ok = false;
            report.note_failure(where + ": conjugator is singular");
            break;
        }
        if (classify_conjugator(pf) != step.conjugator_ring) {
            report.labels_ok = false;
            report.note_failure(where + ": conjugator-ring label is " +
                                conjugator_ring_name(step.conjugator_ring) + " but the matrix is " +
                                conjugator_ring_name(classify_conjugator(pf)));
        }
    }

    if (*report.replay_ok && witness != nullptr) {
        if (!values_equal(current, lift_to_field(witness->result))) {
            report.replay_ok = false;
            report.note_failure("trace replay does not end at the witness result");
        } else if (!values_equal(composed, lift_to_field(witness->conjugator))) {
            report.replay_ok = false;
            report.note_failure("composed step conjugators differ from the witness conjugator");
        }
    }
    return report;
}

} // namespace fillmore
