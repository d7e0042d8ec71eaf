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

#include "fillmore/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fillmore/demo.hpp"
#include "fillmore/generate.hpp"
#include "fillmore/inductive.hpp"
#include "fillmore/integer_solve.hpp"
#include "fillmore/io.hpp"
#include "fillmore/two_step.hpp"
#include "fillmore/verify.hpp"

namespace fillmore::cli {

namespace {

struct SolveOptions {
    std::string input;
    std::string algorithm = "two-step";
    std::string output;
    std::string pivot; // "r,s" forcing the two-step pivot
};

struct VerifyOptions {
    std::string input;
    std::string solution;
};

struct GenOptions {
    std::string ring = "rational";
    std::uint64_t p = 0;
    int n = 4;
    std::uint64_t seed = 1;
    std::string shape = "dense";
    int count = 1;
    std::uint64_t entry_bound = 9;
    std::string output;
};

struct DemoOptions {
    std::string name;
};

PivotChoice parse_pivot(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ParseError("pivot must be 'r,s', got '" + text + "'");
    }
    try {
        int r = std::stoi(text.substr(0, comma));
        int s = std::stoi(text.substr(comma + 1));
        return PivotChoice{r, s};
    } catch (const std::exception&) {
        throw ParseError("pivot must be 'r,s', got '" + text + "'");
    }
}

RingSpec ring_from_flags(const std::string& name, std::uint64_t p) {
    if (name == "integer" || name == "int" || name == "z") return RingSpec::integers();
    if (name == "rational" || name == "q") return RingSpec::rationals();
    if (name == "gf") {
        if (p == 0) throw ParseError("--ring gf needs --p <prime>");
        return RingSpec::gf(p);
    }
    throw ParseError("unknown ring '" + name + "' (integer, rational, gf)");
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_text_file(path, content);
    }
}

int run_solve(const SolveOptions& opt, std::ostream& out) {
    ProblemDocument problem = parse_problem(read_text_file(opt.input));

    std::optional<PivotChoice> forced;
    if (!opt.pivot.empty()) forced = parse_pivot(opt.pivot);

    Matrix a = problem.matrix;
    DiagonalSpec gamma = problem.diagonal;
    SolveOutcome solved{SimilarityWitness{a, a, a}, ReductionTrace{}, ""};

    if (opt.algorithm == "integer") {
        if (problem.ring.kind() != RingKind::Integer) {
            throw PreconditionError("the integer algorithm needs an integer-ring problem");
        }
        if (forced) throw PreconditionError("--pivot applies to the two-step algorithm only");
        solved = solve_integer(a, gamma);
    } else {
        if (problem.ring.kind() == RingKind::Integer) {
            a = lift_to_field(a);
            gamma = align_diagonal_ring(gamma, a.ring());
        }
        if (opt.algorithm == "two-step") {
            solved = solve_two_step(a, gamma, forced);
        } else if (opt.algorithm == "inductive") {
            if (forced) throw PreconditionError("--pivot applies to the two-step algorithm only");
            solved = solve_inductive(a, gamma);
        } else {
            throw ParseError("unknown algorithm '" + opt.algorithm +
                             "' (two-step, inductive, integer)");
        }
    }

    VerificationReport report = verify(a, gamma, solved.witness);
    VerificationReport replay = verify_trace(a, solved.trace, &solved.witness);
    report.replay_ok = replay.replay_ok;
    report.labels_ok = replay.labels_ok;
    if (!replay.pass() && replay.first_failure) report.note_failure(*replay.first_failure);

    SolutionDocument doc{solved.algorithm, a.ring(),          solved.conjugation_count(),
                         solved.witness.result,               solved.witness.conjugator,
                         solved.witness.conjugator_inverse,   solved.trace,
                         report};
    if (!report.pass()) {
        // Never emit an unverified solution.
        std::string why = report.first_failure.value_or("unknown check failure");
        throw InternalError("solution failed self-verification: " + why);
    }
    emit(opt.output, serialize_solution(doc), out);
    return kExitOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    ProblemDocument problem = parse_problem(read_text_file(opt.input));
    SolutionDocument solution = parse_solution(read_text_file(opt.solution));

    Matrix a = problem.matrix;
    DiagonalSpec gamma = problem.diagonal;
    if (problem.ring.kind() == RingKind::PrimeField &&
        solution.ring.kind() == RingKind::PrimeField &&
        problem.ring.modulus() != solution.ring.modulus()) {
        throw PreconditionError("problem and solution use different prime fields");
    }
    if (problem.ring.kind() == RingKind::Integer &&
        solution.ring.kind() == RingKind::Rational) {
        a = lift_to_field(a);
        gamma = align_diagonal_ring(gamma, a.ring());
    } else if (solution.ring.kind() == RingKind::Integer) {
        // Integrality is part of the claim; keep A in Z for verify().
    }

    SimilarityWitness witness{solution.conjugator, solution.conjugator_inverse, solution.result};
    VerificationReport report = verify(a, gamma, witness);
    VerificationReport replay = verify_trace(a, solution.trace, &witness);
    report.replay_ok = replay.replay_ok;
    report.labels_ok = replay.labels_ok;
    if (replay.first_failure) report.note_failure(*replay.first_failure);

    out << serialize_report(report);
    if (!report.pass()) {
        err << "verification failed: " << report.first_failure.value_or("see report") << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_gen(const GenOptions& opt, std::ostream& out) {
    RingSpec ring = ring_from_flags(opt.ring, opt.p);
    if (opt.count < 1) throw ParseError("--count must be >= 1");
    MatrixShape shape = matrix_shape_from_name(opt.shape);

    std::vector<std::string> docs;
    for (int i = 0; i < opt.count; ++i) {
        // Seed schedule: matrix at seed + 2i, diagonal at seed + 2i + 1.
        GenSpec spec{ring, opt.n, opt.entry_bound, opt.seed + 2 * static_cast<std::uint64_t>(i),
                     shape};
        Matrix m = gen_matrix(spec);
        DiagonalSpec gamma =
            gen_diagonal_spec(m, opt.seed + 2 * static_cast<std::uint64_t>(i) + 1,
                              opt.entry_bound);
        docs.push_back(serialize_problem(ProblemDocument{ring, m, gamma}));
    }

    if (!opt.output.empty() && opt.count > 1) {
        for (int i = 0; i < opt.count; ++i) {
            std::string path = opt.output;
            auto dot = path.rfind(".json");
            std::string suffix = "-" + std::to_string(i);
            if (dot != std::string::npos && dot == path.size() - 5) {
                path.insert(dot, suffix);
            } else {
                path += suffix + ".json";
            }
            write_text_file(path, docs[i]);
        }
        return kExitOk;
    }
    if (!opt.output.empty()) {
        write_text_file(opt.output, docs.front());
        return kExitOk;
    }
    for (const std::string& d : docs) out << d;
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact prescribed-diagonal similarity constructions", "fillmore"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "solve one problem document");
    solve->add_option("input", solve_opt.input, "problem JSON path")->required();
    solve->add_option("--algorithm", solve_opt.algorithm, "two-step | inductive | integer");
    solve->add_option("--output", solve_opt.output, "solution JSON path (default stdout)");
    solve->add_option("--pivot", solve_opt.pivot, "force the two-step pivot, e.g. 3,4");

    VerifyOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-verify a solution document");
    verify_cmd->add_option("input", verify_opt.input, "problem JSON path")->required();
    verify_cmd->add_option("solution", verify_opt.solution, "solution JSON path")->required();

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate problem documents");
    gen->add_option("--ring", gen_opt.ring, "integer | rational | gf");
    gen->add_option("--p", gen_opt.p, "prime modulus for --ring gf");
    gen->add_option("--n", gen_opt.n, "matrix order (>= 2)");
    gen->add_option("--seed", gen_opt.seed, "64-bit seed");
    gen->add_option("--shape", gen_opt.shape, "dense | diagonal | sparse-one-offdiag");
    gen->add_option("--count", gen_opt.count, "number of instances");
    gen->add_option("--entry-bound", gen_opt.entry_bound, "entry magnitude bound");
    gen->add_option("--output", gen_opt.output, "output path (indexed when count > 1)");

    DemoOptions demo_opt;
    CLI::App* demo = app.add_subcommand("demo", "print a worked-example walkthrough");
    demo->add_option("name", demo_opt.name, "paper-example-1 | paper-example-2")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (*solve) return run_solve(solve_opt, out);
        if (*verify_cmd) return run_verify(verify_opt, out, err);
        if (*gen) return run_gen(gen_opt, out);
        if (*demo) {
            out << demo_transcript(demo_opt.name);
            return kExitOk;
        }
        err << "usage error: no subcommand\n";
        return kExitParse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}

} // namespace fillmore::cli
