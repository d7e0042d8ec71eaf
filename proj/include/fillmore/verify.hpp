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
 * @file verify.hpp
 * @brief Independent exact verification of solver outputs.
 *
 * The verifier trusts nothing it can recompute: it inverts the conjugator
 * itself, re-derives characteristic polynomials, replays traces step by
 * step, and compares entry-exactly. There are no tolerances anywhere.
 */

#include <optional>
#include <string>

#include "fillmore/matrix.hpp"
#include "fillmore/trace.hpp"

namespace fillmore {

/// Flag-per-check verification result. A flag that does not apply to the
/// run (e.g. integrality over Q) stays unset and does not affect pass().
struct VerificationReport {
    std::optional<bool> witness_ok;     // P * A * P^-1 = B entry-exactly
    std::optional<bool> diagonal_ok;    // diag(B) = gamma
    std::optional<bool> trace_ok;       // tr B = tr A = sum(gamma)
    std::optional<bool> charpoly_ok;    // char_poly(A) = char_poly(B)
    std::optional<bool> integrality_ok; // every entry of B integer (Z runs)
    std::optional<bool> replay_ok;      // trace replays to the recorded matrices
    std::optional<bool> labels_ok;      // conjugator-ring labels are honest
    std::optional<std::string> first_failure;

    bool pass() const;

    /// Records a failed check location once (keeps the first).
    void note_failure(const std::string& where);
};

/**
 * Checks the similarity claim: recomputes P^-1 from w.conjugator, compares
 * P*A*P^-1 with w.result, the result diagonal with gamma, traces, and
 * characteristic polynomials. For Z inputs also checks the result is
 * integer. Throws PreconditionError on order mismatches.
 */
VerificationReport verify(const Matrix& a, const DiagonalSpec& gamma, const SimilarityWitness& w);

/**
 * Replays a trace from scratch: every step's conjugation must reproduce
 * the recorded intermediate, every ring label must match an independent
 * classification, and (when given) the composed conjugators must equal the
 * witness. Failures are report entries, never exceptions.
 */
VerificationReport verify_trace(const Matrix& a, const ReductionTrace& trace,
                                const SimilarityWitness* witness = nullptr);

} // namespace fillmore
