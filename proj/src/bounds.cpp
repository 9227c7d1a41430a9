#include "exactsdp/bounds.hpp"

#include <stdexcept>

#include "exactsdp/barrier.hpp"
#include "exactsdp/errors.hpp"

namespace exactsdp {

namespace {

const Rational kKappa(8, 5);  // >= 1/(1 - 1/e)
const Rational kRelErr(1, 4);

Rational rat(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

}  // namespace

Rational dual_norm_bound(const Rational& eta, const Rational& s0_inner, std::size_t n,
                         const Rational& r) {
    if (sgn(eta) <= 0 || sgn(r) <= 0)
        throw std::invalid_argument("dual_norm_bound: eta and r must be positive");
    const Rational sqrt_n_ceil(isqrt_ceil(Integer(static_cast<unsigned long>(n))));
    return sqrt_n_ceil * kKappa * (s0_inner + rat(n) / (r * eta * eta)) / r;
}

Rational rounding_tolerance_phase1(const Model& model) {
    const SdpProblem& p = model.problem();
    // Projected inverse of the interior point, the auxiliary-phase cost.
    const SymMatrix g_star = model.ops().project(
        SymMatrix::from_matrix(invert(p.X0.to_matrix())));
    const Rational inf_norm = max_row_abs_sum(g_star);
    const Rational s_inner =
        inner(p.X0, Rational(2) * inf_norm * SymMatrix::identity(p.n) - g_star);

    const Rational sqrt_n_ceil(isqrt_ceil(Integer(static_cast<unsigned long>(p.n))));
    const Rational range = rat(18 * p.n) * (1 + p.R / p.r);
    const Rational inv_eps =
        17 * sqrt_n_ceil * kKappa * (s_inner + rat(p.n) * range * range / p.r) / p.r;
    return 1 / inv_eps;
}

Rational rounding_tolerance_phase2(const Model& model) {
    if (model.degenerate_objective())
        throw std::invalid_argument("rounding_tolerance_phase2: projected cost is zero");
    const SdpProblem& p = model.problem();
    const SymMatrix& cost = model.projected_cost();

    const Rational cost_norm_sq = frob_norm_sq(cost);  // exact, appears in a denominator
    const SymMatrix shifted =
        cost + Rational(2) * max_row_abs_sum(cost) * SymMatrix::identity(p.n);
    const Rational shifted_norm = sqrt_upper(frob_norm_sq(shifted), kRelErr);
    const Rational x0_norm = sqrt_upper(frob_norm_sq(p.X0), kRelErr);

    const Rational sqrt_n_ceil(isqrt_ceil(Integer(static_cast<unsigned long>(p.n))));
    const Rational inv_eps = 17 * sqrt_n_ceil * sqrt_n_ceil * sqrt_n_ceil * kKappa *
                             ((p.R + x0_norm) * shifted_norm +
                              rat(36 * p.n) / (p.r * p.r * p.r * cost_norm_sq)) /
                             (p.r * p.epsilon);
    return 1 / inv_eps;
}

PathBounds compute_path_bounds(const Model& model) {
    const SdpProblem& p = model.problem();
    PathBounds bounds;
    bounds.nu_hi = 1;
    bounds.nu_lo = 1 / (rat(18 * p.n) * (1 + p.R / p.r));
    bounds.eta_lo = p.r * sqrt_lower(frob_norm_sq(model.projected_cost()), kRelErr) / 6;
    bounds.eta_hi = rat(p.n) / p.epsilon;
    bounds.eps1 = rounding_tolerance_phase1(model);
    bounds.eps2 = rounding_tolerance_phase2(model);
    bounds.eps_bar = bounds.eps1 < bounds.eps2 ? bounds.eps1 : bounds.eps2;
    bounds.theta_f = rat(p.n);
    bounds.sqrt_theta_ceil = isqrt_ceil(Integer(static_cast<unsigned long>(p.n)));
    return bounds;
}

}  // namespace exactsdp
