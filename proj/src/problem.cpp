#include "exactsdp/problem.hpp"

#include <utility>

#include "exactsdp/errors.hpp"

namespace exactsdp {

namespace {

ConstraintOperator validated_ops(const SdpProblem& p) {
    if (p.n == 0) throw ValidationError("matrix order n must be positive");
    if (p.C.order() != p.n) throw ValidationError("objective matrix order differs from n");
    if (p.A.size() != p.m) throw ValidationError("expected m constraint matrices");
    if (p.b.size() != p.m) throw ValidationError("expected m right-hand-side entries");
    if (p.X0.order() != p.n) throw ValidationError("interior point order differs from n");
    for (std::size_t j = 0; j < p.m; ++j)
        if (p.A[j].order() != p.n)
            throw ValidationError("constraint matrix " + std::to_string(j + 1) +
                                  " order differs from n");
    try {
        return ConstraintOperator(p.A, p.n);
    } catch (const RankDeficiencyError& e) {
        throw ValidationError(std::string("constraint matrices must be linearly independent: ") +
                              e.what());
    }
}

}  // namespace

Model::Model(SdpProblem problem)
    : problem_(std::move(problem)),
      ops_(validated_ops(problem_)),
      basis_(nullspace_orthobasis(problem_.A, problem_.n)) {
    const SdpProblem& p = problem_;

    const std::vector<Rational> image = ops_.apply(p.X0);
    for (std::size_t j = 0; j < p.m; ++j)
        if (image[j] != p.b[j])
            throw ValidationError("interior point is infeasible: <A_" + std::to_string(j + 1) +
                                  ", X0> = " + to_string(image[j]) + " but b_" +
                                  std::to_string(j + 1) + " = " + to_string(p.b[j]));

    if (PdCheck pd = ldl_pd_check(p.X0); !pd)
        throw ValidationError("X0 is not positive definite: pivot " +
                              std::to_string(pd.pivot_index) + " is " + to_string(pd.pivot_value));

    if (sgn(p.r) <= 0) throw ValidationError("inner radius r must be positive");
    if (p.r > p.R) throw ValidationError("radii must satisfy r <= R");
    if (sgn(p.epsilon) <= 0) throw ValidationError("accuracy epsilon must be positive");

    projected_cost_ = ops_.project(p.C);
    objective_offset_ = inner(p.C - projected_cost_, p.X0);
}

Rational Model::objective_value(const SymMatrix& x) const {
    return objective_offset_ + inner(projected_cost_, x);
}

FeasiblePoint Model::start_point() const {
    return {std::vector<Rational>(basis_.dim()), problem_.X0};
}

SymMatrix Model::assemble(std::span<const Rational> coords) const {
    SymMatrix x = problem_.X0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (sgn(coords[i]) == 0) continue;
        x += coords[i] * basis_.elements[i];
    }
    return x;
}

FeasiblePoint Model::point_from_coords(std::vector<Rational> coords) const {
    if (coords.size() != basis_.dim())
        throw std::invalid_argument("point_from_coords: expected " + std::to_string(basis_.dim()) +
                                    " coordinates");
    SymMatrix x = assemble(coords);
    return {std::move(coords), std::move(x)};
}

std::vector<Rational> Model::coords_of(const SymMatrix& x) const {
    const SymMatrix delta = x - problem_.X0;
    std::vector<Rational> coords(basis_.dim());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = inner(delta, basis_.elements[i]) / basis_.normsq[i];
    // Membership test: the expansion must reproduce delta exactly.
    if (assemble(coords) != x)
        throw ValidationError("matrix_to_coords: X - X0 does not lie in the constraint kernel");
    return coords;
}

FeasiblePoint Model::add_direction(const FeasiblePoint& p, const SymMatrix& dir) const {
    FeasiblePoint next{p.coords, p.X + dir};
    for (std::size_t i = 0; i < basis_.dim(); ++i)
        next.coords[i] += inner(dir, basis_.elements[i]) / basis_.normsq[i];
    return next;
}

}  // namespace exactsdp
