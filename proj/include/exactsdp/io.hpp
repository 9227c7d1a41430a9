#pragma once

#include <span>
#include <string>

#include "exactsdp/problem.hpp"
#include "exactsdp/solver.hpp"

namespace exactsdp {

/// Parses an instance document.  All scalars are exact rationals written
/// as strings "p/q" (or plain integers); floating-point literals are
/// rejected everywhere.  Structural problems throw ParseError; semantic
/// ones (the Model constructor's checks) throw ValidationError.
SdpProblem parse_instance_json(const std::string& text);

SdpProblem load_instance(const std::string& path);

/// Canonical serialization; parse(serialize(p)) reproduces p exactly.
std::string instance_to_json(const SdpProblem& problem);

/// The solution document written by the CLI.
struct SolutionDoc {
    std::string status;
    SymMatrix X_star;
    Rational objective;
    Rational gap_bound;
    Rational eps_bar;
    long iterations_phase1 = 0;
    long iterations_phase2 = 0;
};

SolutionDoc make_solution_doc(const SolveResult& result);
std::string solution_to_json(const SolutionDoc& doc);
SolutionDoc parse_solution_json(const std::string& text);
SolutionDoc load_solution(const std::string& path);

/// Exact re-check of a solution document against its instance: the matrix
/// must be symmetric of the right order, satisfy every constraint with
/// zero residual, pass the positive-definiteness test, and reproduce the
/// stated objective value exactly.  Throws ValidationError otherwise.
void verify_solution(const Model& model, const SolutionDoc& doc);

/// Line-delimited trace records, one JSON object per line.
std::string trace_to_lines(std::span<const TraceRecord> trace);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace exactsdp
