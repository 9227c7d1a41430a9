#pragma once

#include <span>
#include <vector>

#include "exactsdp/rational.hpp"

namespace exactsdp {

/// A reduced fraction p/q produced by continued-fraction approximation.
struct DioApprox {
    Integer p;
    Integer q;

    Rational value() const;
};

/// Best rational approximation with bounded denominator.  For
/// 0 < eps <= 1 returns the continued-fraction convergent of alpha with the
/// largest denominator q <= 1/eps, which satisfies
///
///   |alpha - p/q| < eps / q,   1 <= q <= 1/eps,   |p| <= ceil(|alpha|) * q.
///
/// All three guarantees are re-verified exactly before returning.
DioApprox approx_scalar(const Rational& alpha, const Rational& eps);

/// Componentwise rounding of a vector at tolerance eps/n per entry, so the
/// Euclidean rounding error is below eps and the encoding length of the
/// result is at most n * (6 + ceil(log2(n^2 ceil(max|alpha_i|) / eps^2))).
/// Both bounds are asserted exactly on every call.
std::vector<Rational> approx_vector(std::span<const Rational> alpha, const Rational& eps);

}  // namespace exactsdp
