#pragma once

#include <cstddef>
#include <vector>

#include "exactsdp/linalg.hpp"
#include "exactsdp/matrix.hpp"

namespace exactsdp {

/// A semidefinite program
///
///   minimize <C, X>  subject to  <A_j, X> = b_j (j = 1..m),  X >= 0,
///
/// together with a strictly feasible point X0 and radii 0 < r <= R such
/// that, within the feasible affine subspace, the Frobenius ball of radius
/// r around X0 is feasible and the whole feasible set lies in the ball of
/// radius R.  `epsilon` is the relative accuracy the solve must certify.
struct SdpProblem {
    std::size_t n = 0;
    std::size_t m = 0;
    SymMatrix C;
    std::vector<SymMatrix> A;
    std::vector<Rational> b;
    SymMatrix X0;
    Rational r;
    Rational R;
    Rational epsilon;
};

/// A feasible iterate stored both as the coefficient vector in the kernel
/// basis (X = X0 + sum_i coords[i] B_i) and as the assembled matrix.  The
/// two stay consistent exactly; coordinates are what gets rounded, the
/// matrix is what Newton systems consume.
struct FeasiblePoint {
    std::vector<Rational> coords;
    SymMatrix X;
};

/// A validated problem plus everything derived from it once per solve: the
/// constraint operator, the orthogonal kernel basis, the projected cost and
/// the objective offset <C - proj(C), X0> that the projection removes.
class Model {
public:
    /// Validates every hypothesis the method relies on and throws
    /// ValidationError naming the violated one.
    explicit Model(SdpProblem problem);

    const SdpProblem& problem() const { return problem_; }
    const ConstraintOperator& ops() const { return ops_; }
    const OrthoBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.dim(); }

    /// The cost actually optimized: the projection of C onto the
    /// constraint kernel.  <C, X> = objective_offset() + <projected, X>
    /// for every feasible X.
    const SymMatrix& projected_cost() const { return projected_cost_; }
    const Rational& objective_offset() const { return objective_offset_; }

    /// True when the projected cost vanishes, i.e. the objective is
    /// constant on the feasible set and X0 is already optimal.
    bool degenerate_objective() const { return projected_cost_.is_zero(); }

    /// <C, X> via the offset identity, exact.
    Rational objective_value(const SymMatrix& x) const;

    FeasiblePoint start_point() const;
    FeasiblePoint point_from_coords(std::vector<Rational> coords) const;

    /// Inverse of the basis expansion; requires X - X0 to lie in the
    /// constraint kernel exactly, else throws ValidationError.
    std::vector<Rational> coords_of(const SymMatrix& x) const;

    /// The iterate X + dir for a direction in the constraint kernel; both
    /// representations are updated exactly.
    FeasiblePoint add_direction(const FeasiblePoint& p, const SymMatrix& dir) const;

private:
    SymMatrix assemble(std::span<const Rational> coords) const;

    SdpProblem problem_;
    ConstraintOperator ops_;
    OrthoBasis basis_;
    SymMatrix projected_cost_;
    Rational objective_offset_;
};

}  // namespace exactsdp
