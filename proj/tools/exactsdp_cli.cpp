#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "exactsdp/errors.hpp"
#include "exactsdp/io.hpp"
#include "exactsdp/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;      // parse or validation failure
constexpr int kExitInvariant = 3;  // exact invariant failed during the solve
constexpr int kExitBudget = 4;     // iteration budget exceeded

int run_verify(const exactsdp::Model& model, const std::string& out_path) {
    const exactsdp::SolutionDoc doc = exactsdp::load_solution(out_path);
    exactsdp::verify_solution(model, doc);
    std::printf("solution verified: feasible, positive definite, objective %s exact\n",
                exactsdp::to_string(doc.objective).c_str());
    return kExitOk;
}

int run_solve(const exactsdp::Model& model, const std::string& out_path,
              const std::string& trace_path, long max_iters, bool phase1_only,
              bool no_rounding) {
    exactsdp::SolveOptions options;
    options.rounding = !no_rounding;
    options.phase1_only = phase1_only;
    if (max_iters >= 0) options.max_iterations = max_iters;

    const exactsdp::SolveResult result = exactsdp::solve(model, options);

    if (!trace_path.empty())
        exactsdp::write_text_file(trace_path, exactsdp::trace_to_lines(result.trace));
    const exactsdp::SolutionDoc doc = exactsdp::make_solution_doc(result);
    if (!out_path.empty()) exactsdp::write_text_file(out_path, exactsdp::solution_to_json(doc));

    std::printf("status:     %s\n", doc.status.c_str());
    std::printf("objective:  %s\n", exactsdp::to_string(result.objective).c_str());
    std::printf("iterations: %ld + %ld\n", result.iterations_phase1, result.iterations_phase2);
    std::printf("eps_bar:    %s\n", exactsdp::to_string(result.eps_bar).c_str());
    if (result.status == exactsdp::SolveStatus::phase1_complete)
        std::printf("phase-2 entry proximity_sq: %s (certified <= 1/16)\n",
                    exactsdp::to_string(result.phase2_entry_proximity_sq).c_str());
    if (result.status == exactsdp::SolveStatus::optimal)
        std::printf("gap bound:  objective - optimum <= %s * (max - optimum)\n",
                    exactsdp::to_string(result.gap_bound).c_str());
    return result.status == exactsdp::SolveStatus::iteration_limit ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational short-step interior point solver for semidefinite programs"};
    app.require_subcommand(1);

    auto* cmd = app.add_subcommand("solve", "solve an instance, or re-verify a solution file");
    std::string instance_path, out_path, trace_path;
    long max_iters = -1;
    bool phase1_only = false, verify_only = false, no_rounding = false;
    cmd->add_option("instance", instance_path, "instance JSON file")->required();
    cmd->add_option("--out", out_path,
                    "solution file to write (with --verify-only: the solution to check)");
    cmd->add_option("--trace", trace_path, "write line-delimited per-iteration records here");
    cmd->add_option("--max-iters", max_iters, "stop after this many total iterations (exit 4)");
    cmd->add_flag("--phase1-only", phase1_only, "stop after the auxiliary phase");
    cmd->add_flag("--verify-only", verify_only,
                  "re-check the solution named by --out against the instance, exactly");
    cmd->add_flag("--no-rounding", no_rounding,
                  "disable iterate rounding (demonstrates uncontrolled bit growth; "
                  "combine with --max-iters)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitParse;
    }

    try {
        const exactsdp::SdpProblem problem = exactsdp::load_instance(instance_path);
        const exactsdp::Model model(std::move(problem));
        if (verify_only) {
            if (out_path.empty()) {
                std::fprintf(stderr, "error: usage: --verify-only requires --out <solution>\n");
                return kExitParse;
            }
            return run_verify(model, out_path);
        }
        return run_solve(model, out_path, trace_path, max_iters, phase1_only, no_rounding);
    } catch (const exactsdp::ParseError& e) {
        std::fprintf(stderr, "error: parse: %s\n", e.what());
        return kExitParse;
    } catch (const exactsdp::ValidationError& e) {
        std::fprintf(stderr, "error: validation: %s\n", e.what());
        return kExitParse;
    } catch (const exactsdp::IterationLimitError& e) {
        std::fprintf(stderr, "error: iteration-limit: %s\n", e.what());
        return kExitBudget;
    } catch (const exactsdp::InvariantError& e) {
        std::fprintf(stderr, "error: invariant: %s\n", e.what());
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvariant;
    }
}
