#include "exactsdp/barrier.hpp"

#include <utility>

#include "exactsdp/errors.hpp"

namespace exactsdp {

namespace {

RatMatrix pd_inverse(const SymMatrix& x) {
    if (PdCheck pd = ldl_pd_check(x); !pd)
        throw InvariantError("base point is not positive definite: pivot " +
                             std::to_string(pd.pivot_index) + " is " + to_string(pd.pivot_value));
    return invert(x.to_matrix());
}

// System matrix M_ij = trace(X A_i X A_j) = <X A_i X, A_j>, built from the
// sandwiched constraints, with exact symmetry asserted.
struct NewtonSystem {
    std::vector<SymMatrix> sandwiched;  // X A_i X
    RatMatrix m;
};

NewtonSystem build_system(const ConstraintOperator& ops, const SymMatrix& x) {
    const std::size_t m = ops.count();
    NewtonSystem sys;
    sys.sandwiched.reserve(m);
    for (std::size_t i = 0; i < m; ++i) sys.sandwiched.push_back(sandwich(x, ops.matrices()[i]));
    sys.m = RatMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            sys.m.at(i, j) = inner(sys.sandwiched[i], ops.matrices()[j]);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (sys.m.at(i, j) != sys.m.at(j, i))
                throw InvariantError("Newton system matrix lost symmetry");
    return sys;
}

std::vector<Rational> solve_system(const NewtonSystem& sys, std::vector<Rational> rhs) {
    try {
        return gauss_solve(sys.m, std::move(rhs));
    } catch (const SingularMatrixError& e) {
        throw InvariantError(
            std::string("Newton system is singular, the constraint matrices cannot be "
                        "linearly independent: ") +
            e.what());
    }
}

void assert_in_kernel(const ConstraintOperator& ops, const SymMatrix& w, const char* what) {
    for (const Rational& residual : ops.apply(w))
        if (sgn(residual) != 0)
            throw InvariantError(std::string(what) + " left the constraint kernel");
}

}  // namespace

SymMatrix barrier_gradient(const Model& model, const SymMatrix& x) {
    const RatMatrix inv = pd_inverse(x);
    return -model.ops().project(SymMatrix::from_matrix(inv));
}

SymMatrix newton_direction(const Model& model, const SymMatrix& x, const Rational& eta,
                           const SymMatrix& cost) {
    const ConstraintOperator& ops = model.ops();
    const SymMatrix weighted = sandwich(x, cost);  // X cost X
    SymMatrix direction = x - eta * weighted;
    if (ops.count() > 0) {
        const NewtonSystem sys = build_system(ops, x);
        std::vector<Rational> rhs(ops.count());
        for (std::size_t i = 0; i < ops.count(); ++i)
            rhs[i] = -model.problem().b[i] + eta * inner(ops.matrices()[i], weighted);
        const std::vector<Rational> y = solve_system(sys, std::move(rhs));
        direction += sandwich(x, ops.apply_adjoint(y));
    }
    assert_in_kernel(ops, direction, "Newton direction");
    return direction;
}

SymMatrix hessian_solve(const Model& model, const SymMatrix& x, const SymMatrix& rhs) {
    const ConstraintOperator& ops = model.ops();
    const SymMatrix base = sandwich(x, rhs);  // X rhs X
    SymMatrix w = base;
    if (ops.count() > 0) {
        const NewtonSystem sys = build_system(ops, x);
        std::vector<Rational> system_rhs(ops.count());
        for (std::size_t i = 0; i < ops.count(); ++i)
            system_rhs[i] = -inner(ops.matrices()[i], base);
        const std::vector<Rational> y = solve_system(sys, std::move(system_rhs));
        w += sandwich(x, ops.apply_adjoint(y));
    }
    assert_in_kernel(ops, w, "Hessian solve");
    // H(X) W must reproduce the right-hand side exactly.
    const RatMatrix inv = pd_inverse(x);
    const SymMatrix image =
        model.ops().project(SymMatrix::from_matrix(mul(inv, mul(w.to_matrix(), inv))));
    if (image != rhs) throw InvariantError("Hessian solve failed its exact residual check");
    return w;
}

Rational local_norm_sq(const SymMatrix& x, const SymMatrix& y) {
    return local_norm_sq(pd_inverse(x), y);
}

Rational local_norm_sq(const RatMatrix& x_inverse, const SymMatrix& y) {
    const RatMatrix p = mul(x_inverse, y.to_matrix());
    return trace_product(p, p);
}

}  // namespace exactsdp
