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

#include "fillmore/demo.hpp"

#include <sstream>

#include "fillmore/integer_solve.hpp"
#include "fillmore/two_step.hpp"
#include "fillmore/verify.hpp"

namespace fillmore {

namespace {

// Shared worked example: a dense 5x5 with trace 11 and an off-diagonal
// unit at (4,2), so it exercises both the rational and the integer routes.
constexpr const char* kExampleMatrix = "4 0 4 -3 5; 2 3 0 2 3; 0 -2 2 5 4; 7 1 3 4 0; 2 5 3 0 -2";
constexpr const char* kExampleDiagonal = "3 5 -2 6 -1";

std::string diagonal_str(const Matrix& m) {
    std::string out = "(";
    for (int i = 0; i < m.order(); ++i) {
        if (i) out += ", ";
        out += m.at(i, i).str();
    }
    return out + ")";
}

std::string targets_str(const DiagonalSpec& gamma) {
    std::string out = "(";
    for (int i = 0; i < gamma.size(); ++i) {
        if (i) out += ", ";
        out += gamma.targets[i].str();
    }
    return out + ")";
}

void print_step(std::ostringstream& out, int number, const TraceStep& step) {
    out << "Step " << number << ": " << step_kind_name(step.kind);
    if (step.kind == StepKind::UnifyRow) out << " at pivot (" << step.r << "," << step.s << ")";
    if (step.kind == StepKind::SetDiagonal) out << " at row " << step.r;
    if (step.kind == StepKind::Bump) out << " at entry (" << step.r << "," << step.s << ")";
    out << "\n";
    out << "Conjugator (" << conjugator_ring_name(step.conjugator_ring) << "):\n";
    out << format_matrix(step.conjugator);
    out << "Result:\n" << format_matrix(step.result);
    out << "\n";
}

void print_report(std::ostringstream& out, const VerificationReport& report) {
    auto word = [](const std::optional<bool>& flag) { return flag.value_or(false) ? "ok" : "FAIL"; };
    out << "Verification: witness " << word(report.witness_ok) << "; diagonal "
        << word(report.diagonal_ok) << "; trace " << word(report.trace_ok) << "; charpoly "
        << word(report.charpoly_ok);
    if (report.integrality_ok.has_value()) out << "; integrality " << word(report.integrality_ok);
    out << ".\n";
}

std::string demo_two_step() {
    const RingSpec q = RingSpec::rationals();
    Matrix a = parse_matrix(q, kExampleMatrix);
    DiagonalSpec gamma = parse_diagonal(q, kExampleDiagonal);

    std::ostringstream out;
    out << "Two-step construction over Q\n";
    out << "Input A (trace " << trace(a).str() << "):\n" << format_matrix(a);
    out << "Target diagonal: " << targets_str(gamma) << "\n\n";

    SolveOutcome solved = solve_two_step(a, gamma, PivotChoice{3, 4});
    for (std::size_t i = 0; i < solved.trace.steps.size(); ++i) {
        print_step(out, static_cast<int>(i + 1), solved.trace.steps[i]);
    }
    out << "Final diagonal: " << diagonal_str(solved.witness.result) << "\n";
    print_report(out, verify(a, gamma, solved.witness));
    return out.str();
}

std::string demo_integer() {
    const RingSpec z = RingSpec::integers();
    Matrix a = parse_matrix(z, kExampleMatrix);
    DiagonalSpec gamma = parse_diagonal(z, kExampleDiagonal);

    std::ostringstream out;
    out << "Integer construction over Z\n";
    out << "Input A (trace " << trace(a).str() << "):\n" << format_matrix(a);
    out << "Target diagonal: " << targets_str(gamma) << "\n\n";

    UnitEntryOutcome unit = find_unit_entry(a);
    out << "Unit entry at (" << unit.position.r << "," << unit.position.s << ")";
    out << (unit.trace.steps.empty() ? " already present.\n\n" : " after reduction.\n\n");

    SolveOutcome solved = solve_integer(a, gamma);
    for (std::size_t i = 0; i < solved.trace.steps.size(); ++i) {
        print_step(out, static_cast<int>(i + 1), solved.trace.steps[i]);
    }
    out << "Final diagonal: " << diagonal_str(solved.witness.result) << "\n";
    print_report(out, verify(a, gamma, solved.witness));
    return out.str();
}

} // namespace

std::string demo_transcript(const std::string& name) {
    if (name == "paper-example-1") return demo_two_step();
    if (name == "paper-example-2") return demo_integer();
    throw ParseError("unknown demo '" + name + "'; expected paper-example-1 or paper-example-2");
}

} // namespace fillmore
