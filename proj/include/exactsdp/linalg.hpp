#pragma once

#include <span>
#include <vector>

#include "exactsdp/errors.hpp"
#include "exactsdp/matrix.hpp"

namespace exactsdp {

/// Exact solution of M x = rhs for nonsingular square M.
std::vector<Rational> gauss_solve(RatMatrix m, std::vector<Rational> rhs);

/// Exact inverse of a nonsingular square matrix.
RatMatrix invert(const RatMatrix& m);

/// Orthogonal basis of the common kernel of a family of symmetric
/// constraint matrices under the trace inner product.  Every element
/// satisfies <A_j, B_i> = 0 exactly, the elements are pairwise orthogonal,
/// and each is scaled by a power of two so that <B_i, B_i> lies in
/// [1/4, 1] (Frobenius norm between 1/2 and 1).
struct OrthoBasis {
    std::vector<SymMatrix> elements;
    std::vector<Rational> normsq;

    std::size_t dim() const { return elements.size(); }
};

OrthoBasis nullspace_orthobasis(const std::vector<SymMatrix>& constraints, std::size_t n);

/// Result of the pivot-free LDL^T positive-definiteness test.  A symmetric
/// matrix is positive definite iff all n elimination pivots are positive;
/// a zero or negative pivot certifies failure and is reported as the
/// witness (1-based index).
struct PdCheck {
    bool positive_definite;
    std::size_t pivot_index = 0;
    Rational pivot_value;

    explicit operator bool() const { return positive_definite; }
};

PdCheck ldl_pd_check(const SymMatrix& x);

/// The constraint map X -> (<A_j, X>)_j together with its adjoint and the
/// orthogonal projection onto its kernel.  Construction verifies that the
/// constraint matrices are linearly independent (their Gram matrix must be
/// positive definite) and caches the Gram inverse used by the projection.
class ConstraintOperator {
public:
    ConstraintOperator(std::vector<SymMatrix> constraints, std::size_t n);

    std::size_t count() const { return constraints_.size(); }
    std::size_t order() const { return n_; }
    const std::vector<SymMatrix>& matrices() const { return constraints_; }

    /// (A X)_j = <A_j, X>.
    std::vector<Rational> apply(const SymMatrix& x) const;

    /// A* y = sum_j y_j A_j.
    SymMatrix apply_adjoint(std::span<const Rational> y) const;

    /// Orthogonal projection onto {X : A X = 0}; the residual Y - project(Y)
    /// lies in the span of the constraint matrices exactly.
    SymMatrix project(const SymMatrix& y) const;

private:
    std::size_t n_;
    std::vector<SymMatrix> constraints_;
    RatMatrix gram_inverse_;
};

}  // namespace exactsdp
