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

#include "fillmore/trace.hpp"

namespace fillmore {

std::string step_kind_name(StepKind kind) {
    switch (kind) {
    case StepKind::Bump: return "bump";
    case StepKind::Permute: return "permute";
    case StepKind::BezoutStep2: return "bezout-step2";
    case StepKind::ScaleStep3: return "scale-step3";
    case StepKind::UnifyRow: return "unify-row";
    case StepKind::SetDiagonal: return "set-diagonal";
    case StepKind::Deflate: return "deflate";
    case StepKind::BaseCase: return "base-case";
    }
    throw InternalError("unknown step kind");
}

StepKind step_kind_from_name(const std::string& name) {
    if (name == "bump") return StepKind::Bump;
    if (name == "permute") return StepKind::Permute;
    if (name == "bezout-step2") return StepKind::BezoutStep2;
    if (name == "scale-step3") return StepKind::ScaleStep3;
    if (name == "unify-row") return StepKind::UnifyRow;
    if (name == "set-diagonal") return StepKind::SetDiagonal;
    if (name == "deflate") return StepKind::Deflate;
    if (name == "base-case") return StepKind::BaseCase;
    throw ParseError("unknown trace step kind '" + name + "'");
}

std::string conjugator_ring_name(ConjugatorRing ring) {
    switch (ring) {
    case ConjugatorRing::IntegerUnimodular: return "integer-unimodular";
    case ConjugatorRing::Rational: return "rational";
    case ConjugatorRing::Field: return "field";
    }
    throw InternalError("unknown conjugator ring");
}

ConjugatorRing conjugator_ring_from_name(const std::string& name) {
    if (name == "integer-unimodular") return ConjugatorRing::IntegerUnimodular;
    if (name == "rational") return ConjugatorRing::Rational;
    if (name == "field") return ConjugatorRing::Field;
    throw ParseError("unknown conjugator ring '" + name + "'");
}

ConjugatorRing classify_conjugator(const Matrix& p) {
    if (p.ring().kind() == RingKind::PrimeField) return ConjugatorRing::Field;
    if (!all_entries_integer(p)) return ConjugatorRing::Rational;
    Scalar det = determinant(p);
    Scalar one = Scalar::one(p.ring());
    if (det == one || det == -one) return ConjugatorRing::IntegerUnimodular;
    return ConjugatorRing::Rational;
}

} // namespace fillmore
