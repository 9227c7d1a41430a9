#pragma once

#include "exactsdp/problem.hpp"

namespace exactsdp {

/// Gradient of the log-det barrier restricted to the feasible subspace:
/// the negated projection of X^{-1} onto the constraint kernel.
/// Throws InvariantError when X is not positive definite.
SymMatrix barrier_gradient(const Model& model, const SymMatrix& x);

/// Projected Newton direction for eta * <cost, .> + barrier at a feasible
/// iterate: solve the m x m system M y = v with
///   M_ij = trace(X A_i X A_j),  v_i = -b_i + eta * trace(A_i X cost X),
/// then n = X (A* y) X + X - eta * X cost X.  The result lies in the
/// constraint kernel exactly, which is asserted.
SymMatrix newton_direction(const Model& model, const SymMatrix& x, const Rational& eta,
                           const SymMatrix& cost);

/// Solves H(X) W = rhs for rhs in the constraint kernel, where H is the
/// barrier Hessian Y -> proj(X^{-1} Y X^{-1}).  Uses the same system matrix
/// M as the Newton step with right-hand side -trace(A_i X rhs X).  Both the
/// kernel membership of W and H(X) W = rhs are asserted exactly.
SymMatrix hessian_solve(const Model& model, const SymMatrix& x, const SymMatrix& rhs);

/// Squared local norm of a kernel direction y at a positive definite x:
/// trace(x^{-1} y x^{-1} y), a nonnegative rational, zero iff y = 0.
/// The caller is responsible for y lying in the constraint kernel.
Rational local_norm_sq(const SymMatrix& x, const SymMatrix& y);

/// Same with a precomputed inverse of x.
Rational local_norm_sq(const RatMatrix& x_inverse, const SymMatrix& y);

}  // namespace exactsdp
