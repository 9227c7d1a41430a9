#pragma once

#include "exactsdp/problem.hpp"

namespace exactsdp {

/// Quantitative safety data derived once per solve from the input alone:
/// the admissible ranges of the path parameter in both phases and the
/// rounding tolerances that keep post-rounding proximity intact.  All
/// irrational ingredients are replaced by rational surrogates in the safe
/// direction (norm upper bounds, ceil of square roots, 8/5 >= 1/(1-1/e)),
/// so every tolerance is an underestimate of the exact one.
struct PathBounds {
    Rational nu_lo;           // phase-1 terminal value 1/(18n(1+R/r))
    Rational nu_hi;           // 1
    Rational eta_lo;          // r * lower bound of the cost Frobenius norm / 6
    Rational eta_hi;          // n / epsilon, the phase-2 termination threshold
    Rational eps1;            // phase-1 rounding tolerance
    Rational eps2;            // phase-2 rounding tolerance
    Rational eps_bar;         // min(eps1, eps2)
    Rational theta_f;         // barrier parameter bound, = n
    Integer sqrt_theta_ceil;  // ceil(sqrt(n))
};

/// Computes the bounds for a model with a nonzero projected cost.
PathBounds compute_path_bounds(const Model& model);

/// Upper bound on the Frobenius norm of the dual central-path point at the
/// given path parameter:
///   ceil(sqrt(n)) * (8/5) * (s0_inner + n / (r * eta^2)) / r,
/// where s0_inner = <X0, cost + 2 * max-row-sum(cost) * I> for the phase in
/// question.  Monotone nonincreasing in eta, nondecreasing in s0_inner.
Rational dual_norm_bound(const Rational& eta, const Rational& s0_inner, std::size_t n,
                         const Rational& r);

/// Phase-1 rounding tolerance from the input data, using the projected
/// inverse of the interior point as the auxiliary cost.
Rational rounding_tolerance_phase1(const Model& model);

/// Phase-2 rounding tolerance from the input data; requires a nonzero
/// projected cost (its Frobenius norm appears in a denominator).
Rational rounding_tolerance_phase2(const Model& model);

}  // namespace exactsdp
