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
 * @file trace.hpp
 * @brief Ordered log of the elementary similarities a solver performed.
 *
 * Every step records the conjugator it applied, the ring that conjugator
 * honestly lives in, and the full matrix after the step, so a verifier can
 * replay the whole run from scratch.
 */

#include <optional>
#include <string>
#include <vector>

#include "fillmore/matrix.hpp"

namespace fillmore {

enum class StepKind {
    Bump,        // diagonal matrix gains a unit at (1, s)
    Permute,     // permutation similarity moving an entry to (1, 2)
    BezoutStep2, // unimodular 2x2 block zeroing one first-row entry
    ScaleStep3,  // rational (1,1) scaling making the (1,2) entry 1
    UnifyRow,    // row r's off-diagonal entries all become 1
    SetDiagonal, // diagonal becomes the target
    Deflate,     // basis change fixing one diagonal entry, order >= 3
    BaseCase,    // 2x2 basis change fixing the last two entries
};

std::string step_kind_name(StepKind kind);
StepKind step_kind_from_name(const std::string& name);

enum class ConjugatorRing {
    IntegerUnimodular, // integer entries, determinant +-1
    Rational,          // anything else over Q
    Field,             // GF(p) conjugator
};

std::string conjugator_ring_name(ConjugatorRing ring);
ConjugatorRing conjugator_ring_from_name(const std::string& name);

/// Honest classification of a conjugator matrix.
ConjugatorRing classify_conjugator(const Matrix& p);

/// One elementary similarity. Indices are 1-based and 0 when not
/// applicable. `conjugator` always has the full problem order; `basis`
/// carries the stage basis matrix for Deflate/BaseCase steps (block order).
struct TraceStep {
    StepKind kind;
    int r = 0;
    int s = 0;
    int k = 0;
    std::optional<BezoutTriple> bezout;
    Matrix conjugator;
    ConjugatorRing conjugator_ring;
    Matrix result;
    std::optional<Matrix> basis;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;

    int size() const { return static_cast<int>(steps.size()); }
};

/// A solver run: the composed witness plus the step-by-step trace.
struct SolveOutcome {
    SimilarityWitness witness;
    ReductionTrace trace;
    std::string algorithm;

    int conjugation_count() const { return trace.size(); }
};

} // namespace fillmore
