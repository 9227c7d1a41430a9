#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactsdp/bounds.hpp"
#include "test_util.hpp"

using namespace exactsdp;
using exactsdp::testing::mineig2_problem;

namespace {

Rational q(const char* s) { return parse_rational(s); }

// n = 1, no constraints, X0 = [1], C = [2], r = 1/2, R = 1, accuracy 1/10
Model scalar_model() {
    SdpProblem p;
    p.n = 1;
    p.m = 0;
    p.C = SymMatrix::diagonal({q("2")});
    p.X0 = SymMatrix::diagonal({q("1")});
    p.r = q("1/2");
    p.R = q("1");
    p.epsilon = q("1/10");
    return Model(std::move(p));
}

}  // namespace

TEST_CASE("dual norm bound fixed case") {
    // n = 1, S0_inner = <[1], [2] + 2*2*[1]> = 6, r = 1/2, eta = 1:
    // 1 * (8/5) * (6 + 1/((1/2)*1)) / (1/2) = 128/5
    CHECK(dual_norm_bound(q("1"), q("6"), 1, q("1/2")) == q("128/5"));
    CHECK_THROWS_AS(dual_norm_bound(q("0"), q("6"), 1, q("1/2")), std::invalid_argument);
    CHECK_THROWS_AS(dual_norm_bound(q("1"), q("6"), 1, q("-1")), std::invalid_argument);
}

TEST_CASE("dual norm bound monotonicity") {
    const Rational base = dual_norm_bound(q("1"), q("6"), 1, q("1/2"));
    // nonincreasing in eta
    CHECK(dual_norm_bound(q("2"), q("6"), 1, q("1/2")) <= base);
    CHECK(dual_norm_bound(q("100"), q("6"), 1, q("1/2")) <=
          dual_norm_bound(q("2"), q("6"), 1, q("1/2")));
    // nondecreasing in the inner product
    CHECK(dual_norm_bound(q("1"), q("7"), 1, q("1/2")) >= base);
    // doubling r strictly decreases the bound
    CHECK(dual_norm_bound(q("1"), q("6"), 1, q("1")) < base);
}

TEST_CASE("phase-1 rounding tolerance fixed case") {
    // n = 1, m = 0: the projected inverse of X0 = [1] is [1] with max row
    // sum 1, the inner term is <[1], [-1] + [2]> = 1, and
    // 1/eps1 = 17 * 1 * (8/5) * (1 + 1 * 54^2/(1/2)) / (1/2) = 1586576/5.
    CHECK(rounding_tolerance_phase1(scalar_model()) == q("5/1586576"));
    CHECK(sgn(rounding_tolerance_phase1(Model(mineig2_problem()))) > 0);
}

TEST_CASE("phase-1 tolerance shrinks as the radii ratio grows") {
    SdpProblem wide = mineig2_problem();
    wide.R = q("8");
    CHECK(rounding_tolerance_phase1(Model(std::move(wide))) <
          rounding_tolerance_phase1(Model(mineig2_problem())));
}

TEST_CASE("phase-2 rounding tolerance fixed case") {
    // n = 1, C = [2]: <C,C> = 4, shifted cost [6] has exact norm 6,
    // ||X0||_F = 1 exactly, so
    // 1/eps2 = 17 * 1 * (8/5) * 10 * ((1+1)*6 + 36/((1/8)*4)) / (1/2) = 45696.
    CHECK(rounding_tolerance_phase2(scalar_model()) == q("1/45696"));
}

TEST_CASE("phase-2 tolerance scales linearly with the accuracy") {
    SdpProblem fine = mineig2_problem();
    fine.epsilon = q("1/200");
    const Rational eps_base = rounding_tolerance_phase2(Model(mineig2_problem()));
    const Rational eps_fine = rounding_tolerance_phase2(Model(std::move(fine)));
    CHECK(eps_fine == eps_base / 2);
    CHECK(sgn(eps_base) > 0);
}

TEST_CASE("path bounds assemble consistently") {
    const Model model(mineig2_problem());
    const PathBounds bounds = compute_path_bounds(model);
    CHECK(bounds.nu_hi == 1);
    // 1/(18 * 2 * (1 + 4)) with R/r = 4
    CHECK(bounds.nu_lo == q("1/180"));
    CHECK(bounds.eta_hi == q("200"));  // n / epsilon
    CHECK(bounds.eta_lo <= bounds.eta_hi);
    CHECK(sgn(bounds.eta_lo) > 0);
    CHECK(bounds.eps_bar == (bounds.eps1 < bounds.eps2 ? bounds.eps1 : bounds.eps2));
    CHECK(sgn(bounds.eps_bar) > 0);
    CHECK(bounds.theta_f == 2);
    CHECK(bounds.sqrt_theta_ceil == 2);

    // eta_lo is a valid lower bound of r ||cost||_F / 6: squared comparison
    const Rational cost_norm_sq = frob_norm_sq(model.projected_cost());
    const Rational lhs = 6 * bounds.eta_lo / model.problem().r;
    CHECK(lhs * lhs <= cost_norm_sq);
}

TEST_CASE("degenerate cost is rejected by the phase-2 tolerance") {
    SdpProblem p = mineig2_problem();
    p.C = SymMatrix::identity(2);
    const Model model(std::move(p));
    CHECK_THROWS_AS(rounding_tolerance_phase2(model), std::invalid_argument);
}
