#include "exactsdp/solver.hpp"

#include <limits>
#include <utility>

#include "exactsdp/barrier.hpp"
#include "exactsdp/diophantine.hpp"
#include "exactsdp/errors.hpp"

namespace exactsdp {

namespace {

const Rational kLoopTopBound(1, 16);     // (1/4)^2
const Rational kPostRoundBound(1, 81);   // (1/9)^2
const Rational kPreRoundBound(1, 1024);  // (1/32)^2

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

/// Certified iteration budget ceil(10 ceil(sqrt(n)) ln(7n / (6 eta1 eps))),
/// evaluated with the rational overestimate ln z <= (7/10) ceil(log2 z).
long iteration_budget(std::size_t n, const Rational& eta1, const Rational& eps) {
    const Rational z = rat(7 * n) / (6 * eta1 * eps);
    if (z <= 1) return 0;
    const Integer budget =
        7 * isqrt_ceil(Integer(static_cast<unsigned long>(n))) * Integer(ceil_log2(z));
    if (!budget.fits_slong_p()) return std::numeric_limits<long>::max();
    return budget.get_si();
}

void check_iterate(const Model& model, const SymMatrix& x, int phase, long k, const char* stage) {
    const std::vector<Rational> image = model.ops().apply(x);
    const std::vector<Rational>& b = model.problem().b;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (image[j] != b[j])
            throw InvariantError("phase " + std::to_string(phase) + " iteration " +
                                 std::to_string(k) + " (" + stage +
                                 "): feasibility residual nonzero at constraint " +
                                 std::to_string(j + 1));
    if (PdCheck pd = ldl_pd_check(x); !pd)
        throw InvariantError("phase " + std::to_string(phase) + " iteration " +
                             std::to_string(k) + " (" + stage +
                             "): iterate lost positive definiteness (pivot " +
                             std::to_string(pd.pivot_index) + " is " + to_string(pd.pivot_value) +
                             ")");
}

void notify(const SolveOptions& options, int phase, long k, const char* stage, const SymMatrix& x,
            const Rational& eta) {
    if (options.hook) options.hook(phase, k, stage, x, eta);
}

/// Encoding-length ceiling for a rounded coordinate vector:
/// d * (6 + ceil(log2(d^2 ceil(2R) / eps^2))).  The coordinate range is
/// 2R because the basis elements have Frobenius norm >= 1/2.
BitSize coord_size_bound(std::size_t d, const Rational& outer_radius, const Rational& eps) {
    Integer range_ceil;
    const Rational doubled = 2 * outer_radius;
    mpz_cdiv_q(range_ceil.get_mpz_t(), doubled.get_num().get_mpz_t(),
               doubled.get_den().get_mpz_t());
    if (range_ceil < 1) range_ceil = 1;
    const Rational ratio = rat(d * d) * Rational(range_ceil) / (eps * eps);
    return static_cast<BitSize>(d) * (6 + static_cast<BitSize>(ceil_log2(ratio)));
}

}  // namespace

Rational initial_eta(const Model& model, const FeasiblePoint& x1, const SymMatrix& cost) {
    const SymMatrix w = hessian_solve(model, x1.X, cost);
    const Rational s = inner(cost, w);  // squared local norm of the unit-parameter step
    if (sgn(s) <= 0) throw std::invalid_argument("initial_eta: cost is degenerate");
    return pow2_floor(1 / (12 * sqrt_upper(s, Rational(1, 4))));
}

FeasiblePoint round_iterate(const Model& model, const FeasiblePoint& point, const Rational& eta,
                            const SymMatrix& cost, const Rational& eps_bar,
                            Rational* eps_used_out, Rational* proximity_sq_out) {
    {
        const SymMatrix dir = newton_direction(model, point.X, eta, cost);
        if (local_norm_sq(point.X, dir) > kPreRoundBound)
            throw InvariantError("rounding requires squared proximity at most 1/1024");
    }
    // The scalar approximation theorem needs a tolerance in (0, 1]; a
    // smaller tolerance than requested is always safe.
    Rational eps = eps_bar < 1 ? eps_bar : Rational(1);
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
        FeasiblePoint candidate = model.point_from_coords(approx_vector(point.coords, eps));
        if (!ldl_pd_check(candidate.X)) continue;
        const SymMatrix dir = newton_direction(model, candidate.X, eta, cost);
        const Rational prox = local_norm_sq(candidate.X, dir);
        if (prox > kPostRoundBound) continue;
        // Coordinates of any feasible point stay within twice the outer
        // radius; the encoding-length ceiling follows from that.
        const BitSize bound = coord_size_bound(model.dim(), model.problem().R, eps);
        if (bit_size(std::span<const Rational>(candidate.coords)) > bound)
            throw InvariantError(
                "rounded coordinates exceeded the encoding-length ceiling; the outer "
                "radius R of the input cannot be valid");
        if (eps_used_out) *eps_used_out = eps;
        if (proximity_sq_out) *proximity_sq_out = prox;
        return candidate;
    }
    throw InvariantError("rounding failed 64 tolerance halvings at eta = " + to_string(eta) +
                         ", eps_bar = " + to_string(eps_bar) +
                         "; the input radii cannot satisfy their ball hypotheses");
}

ShortStepOutcome short_step(const Model& model, const PhaseConfig& config, FeasiblePoint x1,
                            const Rational& eps_bar, int phase, const SolveOptions& options,
                            std::vector<TraceRecord>& trace, long allowance) {
    const std::size_t n = model.problem().n;
    const long budget = iteration_budget(n, config.eta1, config.budget_epsilon);

    FeasiblePoint x = std::move(x1);
    Rational eta = config.eta1;
    long k = 0;
    notify(options, phase, 0, "start", x.X, eta);

    const auto finished = [&] {
        return config.increasing ? eta >= config.stop_threshold : eta <= config.stop_threshold;
    };

    while (!finished()) {
        if (k >= budget)
            throw IterationLimitError("phase " + std::to_string(phase) +
                                      " exceeded its certified iteration budget of " +
                                      std::to_string(budget));
        if (allowance >= 0 && k >= allowance) return {std::move(x), k, true};
        ++k;

        SymMatrix dir = newton_direction(model, x.X, eta, config.cost);
        const Rational top_prox = local_norm_sq(x.X, dir);
        if (top_prox > kLoopTopBound)
            throw InvariantError("phase " + std::to_string(phase) + " iteration " +
                                 std::to_string(k) + ": loop-top squared proximity " +
                                 to_string(top_prox) + " exceeds 1/16");

        FeasiblePoint stepped = model.add_direction(x, dir);
        check_iterate(model, stepped.X, phase, k, "newton-step");
        notify(options, phase, k, "newton-step", stepped.X, eta);

        // Unconditional extra centering step; it restores enough proximity
        // for the rounding tolerance to be valid.
        dir = newton_direction(model, stepped.X, eta, config.cost);
        FeasiblePoint centered = model.add_direction(stepped, dir);
        check_iterate(model, centered.X, phase, k, "centered");
        notify(options, phase, k, "centered", centered.X, eta);

        Rational eps_used;
        Rational post_prox;
        bool rounded = false;
        if (options.rounding) {
            x = round_iterate(model, centered, eta, config.cost, eps_bar, &eps_used, &post_prox);
            rounded = true;
            check_iterate(model, x.X, phase, k, "rounded");
            notify(options, phase, k, "rounded", x.X, eta);
        } else {
            x = std::move(centered);
            const SymMatrix check_dir = newton_direction(model, x.X, eta, config.cost);
            post_prox = local_norm_sq(x.X, check_dir);
            if (post_prox > kPostRoundBound)
                throw InvariantError("phase " + std::to_string(phase) + " iteration " +
                                     std::to_string(k) + ": squared proximity " +
                                     to_string(post_prox) + " exceeds 1/81 after centering");
        }

        trace.push_back({k, phase, eta, bit_size(std::span<const Rational>(x.coords)),
                         bit_size(x.X), top_prox, post_prox, rounded, eps_used});
        eta *= config.theta;
    }
    return {std::move(x), k, false};
}

SolveResult solve(const Model& model, const SolveOptions& options) {
    SolveResult result;
    result.gap_bound = model.problem().epsilon;

    if (model.degenerate_objective()) {
        // The objective is constant on the feasible set; the interior point
        // is optimal with zero gap.
        result.status = SolveStatus::degenerate_objective;
        result.x = model.start_point();
        result.objective = model.objective_value(result.x.X);
        result.gap_bound = 0;
        return result;
    }

    const PathBounds bounds = compute_path_bounds(model);
    result.eps_bar = bounds.eps_bar;

    const Rational step = Rational(1) / (8 * Rational(bounds.sqrt_theta_ceil));
    const long cap = options.max_iterations.value_or(-1);

    // Phase 1: drive the auxiliary path parameter from 1 down to its
    // terminal value.  The auxiliary cost is the projected inverse of X0,
    // which puts X0 exactly on the auxiliary central path at parameter 1.
    PhaseConfig phase1;
    phase1.cost = model.ops().project(SymMatrix::from_matrix(invert(model.problem().X0.to_matrix())));
    phase1.eta1 = 1;
    phase1.theta = 1 - step;
    phase1.increasing = false;
    phase1.stop_threshold = bounds.nu_lo;
    phase1.budget_epsilon = bounds.nu_lo;

    ShortStepOutcome first =
        short_step(model, phase1, model.start_point(), bounds.eps_bar, 1, options, result.trace, cap);
    result.iterations_phase1 = first.iterations;
    if (first.hit_iteration_cap) {
        result.status = SolveStatus::iteration_limit;
        result.x = std::move(first.x);
        result.objective = model.objective_value(result.x.X);
        return result;
    }

    // Phase 2 entry: the starting parameter and the exact proximity
    // certificate required before the main phase may begin.
    result.phase2_eta1 = initial_eta(model, first.x, model.projected_cost());
    {
        const SymMatrix dir =
            newton_direction(model, first.x.X, result.phase2_eta1, model.projected_cost());
        result.phase2_entry_proximity_sq = local_norm_sq(first.x.X, dir);
    }
    if (result.phase2_entry_proximity_sq > kLoopTopBound)
        throw InvariantError(
            "phase-2 precondition failed: squared proximity " +
            to_string(result.phase2_entry_proximity_sq) +
            " exceeds 1/16 at the phase-1 terminal iterate; the input radii r, R cannot "
            "satisfy their ball hypotheses");

    if (options.phase1_only) {
        result.status = SolveStatus::phase1_complete;
        result.x = std::move(first.x);
        result.objective = model.objective_value(result.x.X);
        return result;
    }

    PhaseConfig phase2;
    phase2.cost = model.projected_cost();
    phase2.eta1 = result.phase2_eta1;
    phase2.theta = 1 + step;
    phase2.increasing = true;
    phase2.stop_threshold = rat(model.problem().n) / model.problem().epsilon;
    phase2.budget_epsilon = model.problem().epsilon;

    const long remaining = cap < 0 ? -1 : cap - result.iterations_phase1;
    ShortStepOutcome second = short_step(model, phase2, std::move(first.x), bounds.eps_bar, 2,
                                         options, result.trace, remaining);
    result.iterations_phase2 = second.iterations;
    result.x = std::move(second.x);
    result.objective = model.objective_value(result.x.X);
    result.status =
        second.hit_iteration_cap ? SolveStatus::iteration_limit : SolveStatus::optimal;
    return result;
}

}  // namespace exactsdp
