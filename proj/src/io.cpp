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

#include "fillmore/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fillmore {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void throw_with_position(const nlohmann::json::parse_error& e,
                                      const std::string& text) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    if (byte > text.size()) byte = text.size();
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + e.what());
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw_with_position(e, text);
    }
}

const Json& need(const Json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(where) + ": missing key '" + key + "'");
    }
    return *it;
}

RingSpec ring_from_json(const Json& j) {
    std::string type = need(j, "type", "ring").get<std::string>();
    if (type == "integer") return RingSpec::integers();
    if (type == "rational") return RingSpec::rationals();
    if (type == "gf") {
        const Json& p = need(j, "p", "ring");
        if (!p.is_number_unsigned()) throw ParseError("ring: 'p' must be a positive integer");
        return RingSpec::gf(p.get<std::uint64_t>());
    }
    throw ParseError("ring: unknown type '" + type + "'");
}

Json ring_to_json(const RingSpec& ring) {
    Json j;
    switch (ring.kind()) {
    case RingKind::Integer: j["type"] = "integer"; break;
    case RingKind::Rational: j["type"] = "rational"; break;
    case RingKind::PrimeField:
        j["type"] = "gf";
        j["p"] = ring.modulus();
        break;
    }
    return j;
}

Matrix matrix_from_json(const Json& j, const RingSpec& ring, const char* where) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(std::string(where) + ": expected a non-empty array of rows");
    }
    std::vector<std::vector<Scalar>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError(std::string(where) + ": rows must be arrays");
        std::vector<Scalar> r;
        for (const Json& cell : row) {
            if (!cell.is_string()) {
                throw ParseError(std::string(where) + ": entries must be canonical strings");
            }
            r.push_back(Scalar::parse(ring, cell.get<std::string>()));
        }
        rows.push_back(std::move(r));
    }
    return Matrix::from_rows(ring, rows);
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.order(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Field the matrices of a solution in `ring` actually live in.
RingSpec lift_ring(const RingSpec& ring) {
    return ring.kind() == RingKind::Integer ? RingSpec::rationals() : ring;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    auto put = [&](const char* key, const std::optional<bool>& flag) {
        if (flag.has_value()) j[key] = *flag;
    };
    put("witness_ok", report.witness_ok);
    put("diagonal_ok", report.diagonal_ok);
    put("trace_ok", report.trace_ok);
    put("charpoly_ok", report.charpoly_ok);
    put("integrality_ok", report.integrality_ok);
    put("replay_ok", report.replay_ok);
    put("labels_ok", report.labels_ok);
    if (report.first_failure) j["first_failure"] = *report.first_failure;
    j["pass"] = report.pass();
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport report;
    auto get = [&](const char* key, std::optional<bool>& flag) {
        if (j.contains(key)) flag = j.at(key).get<bool>();
    };
    get("witness_ok", report.witness_ok);
    get("diagonal_ok", report.diagonal_ok);
    get("trace_ok", report.trace_ok);
    get("charpoly_ok", report.charpoly_ok);
    get("integrality_ok", report.integrality_ok);
    get("replay_ok", report.replay_ok);
    get("labels_ok", report.labels_ok);
    if (j.contains("first_failure")) report.first_failure = j.at("first_failure").get<std::string>();
    return report;
}

Json bezout_to_json(const BezoutTriple& b) {
    Json j;
    j["m"] = b.m.get_str();
    j["p"] = b.p.get_str();
    j["q"] = b.q.get_str();
    j["r"] = b.r.get_str();
    j["s"] = b.s.get_str();
    return j;
}

BezoutTriple bezout_from_json(const Json& j) {
    BezoutTriple b;
    b.m = Int(need(j, "m", "bezout").get<std::string>());
    b.p = Int(need(j, "p", "bezout").get<std::string>());
    b.q = Int(need(j, "q", "bezout").get<std::string>());
    b.r = Int(need(j, "r", "bezout").get<std::string>());
    b.s = Int(need(j, "s", "bezout").get<std::string>());
    return b;
}

Json step_to_json(const TraceStep& step) {
    Json j;
    j["kind"] = step_kind_name(step.kind);
    if (step.r > 0) j["r"] = step.r;
    if (step.s > 0) j["s"] = step.s;
    if (step.k > 0) j["k"] = step.k;
    if (step.bezout) j["bezout"] = bezout_to_json(*step.bezout);
    j["conjugator_ring"] = conjugator_ring_name(step.conjugator_ring);
    j["conjugator"] = matrix_to_json(step.conjugator);
    if (step.basis) j["basis"] = matrix_to_json(*step.basis);
    j["result"] = matrix_to_json(step.result);
    return j;
}

TraceStep step_from_json(const Json& j, const RingSpec& field) {
    TraceStep step{step_kind_from_name(need(j, "kind", "trace step").get<std::string>()),
                   j.value("r", 0),
                   j.value("s", 0),
                   j.value("k", 0),
                   std::nullopt,
                   matrix_from_json(need(j, "conjugator", "trace step"), field, "conjugator"),
                   conjugator_ring_from_name(
                       need(j, "conjugator_ring", "trace step").get<std::string>()),
                   matrix_from_json(need(j, "result", "trace step"), field, "step result"),
                   std::nullopt};
    if (j.contains("bezout")) step.bezout = bezout_from_json(j.at("bezout"));
    if (j.contains("basis")) {
        step.basis = matrix_from_json(j.at("basis"), field, "step basis");
    }
    return step;
}

} // namespace

ProblemDocument parse_problem(const std::string& json_text) {
    Json j = parse_json(json_text);
    RingSpec ring = ring_from_json(need(j, "ring", "problem"));
    Matrix matrix = matrix_from_json(need(j, "matrix", "problem"), ring, "matrix");
    const Json& diag = need(j, "diagonal", "problem");
    if (!diag.is_array()) throw ParseError("problem: 'diagonal' must be an array");
    DiagonalSpec gamma;
    for (const Json& cell : diag) {
        if (!cell.is_string()) throw ParseError("problem: diagonal entries must be strings");
        gamma.targets.push_back(Scalar::parse(ring, cell.get<std::string>()));
    }
    if (gamma.size() != matrix.order()) {
        throw ParseError("problem: diagonal has " + std::to_string(gamma.size()) +
                         " entries for an order-" + std::to_string(matrix.order()) + " matrix");
    }
    return ProblemDocument{ring, std::move(matrix), std::move(gamma)};
}

std::string serialize_problem(const ProblemDocument& doc) {
    Json j;
    j["ring"] = ring_to_json(doc.ring);
    j["matrix"] = matrix_to_json(doc.matrix);
    Json diag = Json::array();
    for (const Scalar& t : doc.diagonal.targets) diag.push_back(t.str());
    j["diagonal"] = std::move(diag);
    return j.dump(2) + "\n";
}

SolutionDocument parse_solution(const std::string& json_text) {
    Json j = parse_json(json_text);
    RingSpec ring = ring_from_json(need(j, "ring", "solution"));
    RingSpec field = lift_ring(ring);
    SolutionDocument doc{
        need(j, "algorithm", "solution").get<std::string>(),
        ring,
        need(j, "conjugation_count", "solution").get<int>(),
        matrix_from_json(need(j, "result", "solution"), field, "result"),
        matrix_from_json(need(j, "conjugator", "solution"), field, "conjugator"),
        matrix_from_json(need(j, "conjugator_inverse", "solution"), field, "conjugator_inverse"),
        ReductionTrace{},
        VerificationReport{}};
    const Json& steps = need(j, "trace", "solution");
    if (!steps.is_array()) throw ParseError("solution: 'trace' must be an array");
    for (const Json& s : steps) doc.trace.steps.push_back(step_from_json(s, field));
    if (j.contains("verification")) {
        doc.verification = report_from_json(j.at("verification"));
    }
    return doc;
}

std::string serialize_solution(const SolutionDocument& doc) {
    Json j;
    j["algorithm"] = doc.algorithm;
    j["ring"] = ring_to_json(doc.ring);
    j["conjugation_count"] = doc.conjugation_count;
    j["result"] = matrix_to_json(doc.result);
    j["conjugator"] = matrix_to_json(doc.conjugator);
    j["conjugator_inverse"] = matrix_to_json(doc.conjugator_inverse);
    Json steps = Json::array();
    for (const TraceStep& s : doc.trace.steps) steps.push_back(step_to_json(s));
    j["trace"] = std::move(steps);
    j["verification"] = report_to_json(doc.verification);
    return j.dump(2) + "\n";
}

std::string serialize_report(const VerificationReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace fillmore
