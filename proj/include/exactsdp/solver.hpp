#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "exactsdp/bounds.hpp"
#include "exactsdp/problem.hpp"

namespace exactsdp {

/// One phase of the path-following scheme.
struct PhaseConfig {
    SymMatrix cost;           // lies in the constraint kernel
    Rational eta1;            // initial path parameter
    Rational theta;           // per-iteration multiplier of the parameter
    bool increasing = false;  // phase 2 grows eta; phase 1 shrinks it
    Rational stop_threshold;  // phase 1 stops at eta <= threshold, phase 2 at eta >= threshold
    Rational budget_epsilon;  // accuracy entering the certified iteration budget
};

/// Per-iteration entry of the certification trace.
struct TraceRecord {
    long k = 0;
    int phase = 0;
    Rational eta;
    BitSize coord_bits = 0;
    BitSize matrix_bits = 0;
    Rational loop_top_proximity_sq;  // squared Newton norm at the loop top, <= 1/16
    Rational proximity_sq;           // squared Newton norm after rounding, <= 1/81
    bool rounded = false;
    Rational eps_bar_used;
};

enum class SolveStatus {
    optimal,
    degenerate_objective,  // projected cost is zero; X0 returned as optimal
    phase1_complete,       // stopped on request after the first phase
    iteration_limit,       // stopped by the caller-supplied iteration cap
};

/// Observer invoked on every iterate the solver materializes.  Stages are
/// "start", "newton-step", "centered" and "rounded".
using IterateHook =
    std::function<void(int phase, long k, const char* stage, const SymMatrix& x, const Rational& eta)>;

struct SolveOptions {
    bool rounding = true;  // disable only to demonstrate uncontrolled bit growth
    std::optional<long> max_iterations;  // total across both phases; graceful stop
    bool phase1_only = false;
    IterateHook hook;
};

struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    FeasiblePoint x;
    Rational objective;  // <C, X> of the original objective, exact
    Rational gap_bound;  // certified relative gap factor (the input accuracy)
    Rational eps_bar;
    Rational phase2_eta1;
    Rational phase2_entry_proximity_sq;  // certificate that phase 2 may start
    long iterations_phase1 = 0;
    long iterations_phase2 = 0;
    std::vector<TraceRecord> trace;
};

/// Starting path parameter for the main phase: the largest power of two
/// below 1 / (12 * upper bound of ||H(x1)^{-1} cost||_{x1}).
Rational initial_eta(const Model& model, const FeasiblePoint& x1, const SymMatrix& cost);

/// Rounds an iterate's coordinates by Diophantine approximation at
/// tolerance eps_bar.  Requires squared proximity <= 1/1024 on entry (the
/// state after the extra centering step).  After rounding the result is
/// re-verified exactly: positive definiteness, squared proximity <= 1/81
/// and the encoding-length ceiling; the tolerance is halved and the
/// rounding retried when a check fails, which the surrogate constants make
/// rare.  More than 64 halvings aborts with InvariantError.
FeasiblePoint round_iterate(const Model& model, const FeasiblePoint& point, const Rational& eta,
                            const SymMatrix& cost, const Rational& eps_bar,
                            Rational* eps_used_out = nullptr, Rational* proximity_sq_out = nullptr);

struct ShortStepOutcome {
    FeasiblePoint x;
    long iterations = 0;
    bool hit_iteration_cap = false;
};

/// The short-step loop with extra centering and rounding.  `allowance` < 0
/// means unlimited; otherwise the loop stops gracefully after that many
/// iterations.  Violation of the certified iteration budget or of any
/// exact invariant throws.
ShortStepOutcome short_step(const Model& model, const PhaseConfig& config, FeasiblePoint x1,
                            const Rational& eps_bar, int phase, const SolveOptions& options,
                            std::vector<TraceRecord>& trace, long allowance);

/// The two-phase driver.
SolveResult solve(const Model& model, const SolveOptions& options = {});

}  // namespace exactsdp
