#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactsdp/errors.hpp"
#include "exactsdp/problem.hpp"
#include "test_util.hpp"

using namespace exactsdp;
using exactsdp::testing::mineig2_problem;
using exactsdp::testing::random_rational;

namespace {

Rational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("constraint map fixed cases") {
    const Model model(mineig2_problem());
    // the interior point maps to the right-hand side exactly
    CHECK(model.ops().apply(model.problem().X0) == model.problem().b);
    // kernel directions map to zero
    const SymMatrix traceless = SymMatrix::diagonal({q("1"), q("-1")});
    CHECK(model.ops().apply(traceless) == std::vector<Rational>{q("0")});
    CHECK(model.ops().apply(SymMatrix::diagonal({q("1/3"), q("2/3")})) ==
          std::vector<Rational>{q("1")});
}

TEST_CASE("objective normalization") {
    const Model model(mineig2_problem());
    // C = diag(1,2) under the trace constraint projects to diag(-1/2, 1/2)
    CHECK(model.projected_cost() == SymMatrix::diagonal({q("-1/2"), q("1/2")}));
    // offset <C - proj(C), X0> = <(3/2) I, I/2> = 3/2
    CHECK(model.objective_offset() == q("3/2"));
    CHECK_FALSE(model.degenerate_objective());

    // a multiple of the constraint is killed by the projection
    SdpProblem p = mineig2_problem();
    p.C = SymMatrix::identity(2);
    const Model degenerate(std::move(p));
    CHECK(degenerate.degenerate_objective());
    CHECK(degenerate.objective_offset() == q("1"));

    // with no constraints the projection is the identity
    SdpProblem free_p;
    free_p.n = 1;
    free_p.m = 0;
    free_p.C = SymMatrix::diagonal({q("2")});
    free_p.X0 = SymMatrix::diagonal({q("1")});
    free_p.r = q("1/2");
    free_p.R = q("1");
    free_p.epsilon = q("1/10");
    const Model free_model(std::move(free_p));
    CHECK(free_model.projected_cost() == SymMatrix::diagonal({q("2")}));
    CHECK(free_model.objective_offset() == q("0"));
}

TEST_CASE("objective identity holds on feasible points") {
    const Model model(mineig2_problem());
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> coords(model.dim());
        for (Rational& c : coords) c = random_rational(rng, 9);
        const FeasiblePoint p = model.point_from_coords(coords);
        CHECK(inner(model.problem().C, p.X) == model.objective_value(p.X));
        CHECK(model.ops().apply(p.X) == model.problem().b);
    }
}

TEST_CASE("coordinate round trip") {
    const Model model(mineig2_problem());
    CHECK(model.coords_of(model.problem().X0) == std::vector<Rational>(model.dim()));

    // a single basis element has unit coordinates
    std::vector<Rational> unit(model.dim());
    unit[0] = q("1");
    const FeasiblePoint p = model.point_from_coords(unit);
    CHECK(model.coords_of(p.X) == unit);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> coords(model.dim());
        for (Rational& c : coords) c = random_rational(rng, 99);
        CHECK(model.coords_of(model.point_from_coords(coords).X) == coords);
    }

    // matrices outside the feasible affine subspace are rejected
    CHECK_THROWS_AS(model.coords_of(SymMatrix::identity(2)), ValidationError);
}

TEST_CASE("add_direction keeps both representations consistent") {
    const Model model(mineig2_problem());
    std::mt19937_64 rng(37);
    FeasiblePoint p = model.start_point();
    for (int step = 0; step < 10; ++step) {
        SymMatrix dir(2);
        for (std::size_t i = 0; i < model.dim(); ++i)
            dir += random_rational(rng, 5) * model.basis().elements[i];
        p = model.add_direction(p, dir);
        CHECK(model.point_from_coords(p.coords).X == p.X);
    }
}

TEST_CASE("validation rejects broken instances") {
    {
        SdpProblem p = mineig2_problem();
        p.b = {q("2")};  // X0 no longer satisfies the constraint
        CHECK_THROWS_WITH_AS(Model(std::move(p)),
                             doctest::Contains("infeasible"), ValidationError);
    }
    {
        SdpProblem p = mineig2_problem();
        p.X0 = SymMatrix::diagonal({q("2"), q("-1")});  // trace stays 1
        CHECK_THROWS_WITH_AS(Model(std::move(p)),
                             doctest::Contains("not positive definite"), ValidationError);
    }
    {
        SdpProblem p = mineig2_problem();
        p.m = 2;
        p.A.push_back(Rational(2) * SymMatrix::identity(2));
        p.b.push_back(q("2"));
        CHECK_THROWS_WITH_AS(Model(std::move(p)),
                             doctest::Contains("linearly independent"), ValidationError);
    }
    {
        SdpProblem p = mineig2_problem();
        p.r = q("0");
        CHECK_THROWS_AS(Model(std::move(p)), ValidationError);
    }
    {
        SdpProblem p = mineig2_problem();
        p.r = q("3");  // r > R
        CHECK_THROWS_AS(Model(std::move(p)), ValidationError);
    }
    {
        SdpProblem p = mineig2_problem();
        p.epsilon = q("-1/100");
        CHECK_THROWS_AS(Model(std::move(p)), ValidationError);
    }
}

TEST_CASE("coordinates of points within the outer radius stay below 2R") {
    const Model model(mineig2_problem());
    const Rational two_r = 2 * model.problem().R;
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> coords(model.dim());
        for (Rational& c : coords) c = random_rational(rng, 7, 7);
        const FeasiblePoint p = model.point_from_coords(coords);
        const Rational dist_sq = frob_norm_sq(p.X - model.problem().X0);
        if (dist_sq > model.problem().R * model.problem().R) continue;
        for (const Rational& c : coords) CHECK(abs(c) <= two_r);
    }
}
