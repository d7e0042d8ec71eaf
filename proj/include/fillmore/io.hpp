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
 * @file io.hpp
 * @brief JSON documents for problems and solutions.
 *
 * Every scalar travels as its canonical string ("-3", "4/5", "6"), never
 * as a JSON number, so arbitrarily large exact values survive any consumer.
 * Ring descriptors are {"type": "integer" | "rational" | "gf"} with "p"
 * for prime fields. Trace indices are 1-based.
 */

#include <string>

#include "fillmore/matrix.hpp"
#include "fillmore/trace.hpp"
#include "fillmore/verify.hpp"

namespace fillmore {

/// Input instance: ring, square matrix, target diagonal.
struct ProblemDocument {
    RingSpec ring;
    Matrix matrix;
    DiagonalSpec diagonal;
};

/// Emitted solution: result, witness, per-step trace, verification report.
struct SolutionDocument {
    std::string algorithm;
    RingSpec ring; // ring the solver ran in (Z inputs may be lifted to Q)
    int conjugation_count = 0;
    Matrix result;
    Matrix conjugator;
    Matrix conjugator_inverse;
    ReductionTrace trace;
    VerificationReport verification;
};

/// Parses a problem document; errors carry line/column positions.
ProblemDocument parse_problem(const std::string& json_text);
std::string serialize_problem(const ProblemDocument& doc);

/// Parses a solution document. Matrices are read in the field the
/// solution's ring lifts to (Q for integer solutions), so rational
/// conjugators of integer runs parse cleanly.
SolutionDocument parse_solution(const std::string& json_text);
std::string serialize_solution(const SolutionDocument& doc);

std::string serialize_report(const VerificationReport& report);

/// Whole-file read/write helpers; failures raise ParseError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace fillmore
