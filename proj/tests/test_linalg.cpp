#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactsdp/linalg.hpp"
#include "test_util.hpp"

using namespace exactsdp;
using exactsdp::testing::random_constraints;
using exactsdp::testing::random_matrix;
using exactsdp::testing::random_nonsingular;
using exactsdp::testing::random_rational;
using exactsdp::testing::random_symmetric;

namespace {

Rational q(const char* s) { return parse_rational(s); }

RatMatrix mat2(const char* a, const char* b, const char* c, const char* d) {
    RatMatrix m(2, 2);
    m.at(0, 0) = q(a);
    m.at(0, 1) = q(b);
    m.at(1, 0) = q(c);
    m.at(1, 1) = q(d);
    return m;
}

}  // namespace

TEST_CASE("gauss_solve on fixed systems") {
    CHECK(gauss_solve(RatMatrix::identity(2), {q("1/2"), q("1/3")}) ==
          std::vector<Rational>{q("1/2"), q("1/3")});
    CHECK(gauss_solve(mat2("2", "0", "0", "3"), {q("1"), q("1")}) ==
          std::vector<Rational>{q("1/2"), q("1/3")});
    CHECK(gauss_solve(mat2("1", "1", "1", "2"), {q("3"), q("5")}) ==
          std::vector<Rational>{q("1"), q("2")});
}

TEST_CASE("gauss_solve reports the failing stage") {
    try {
        gauss_solve(mat2("1", "2", "2", "4"), {q("1"), q("1")});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.stage == 2);
    }
}

TEST_CASE("invert on fixed matrices") {
    CHECK(invert(RatMatrix::identity(2)) == RatMatrix::identity(2));
    RatMatrix one(1, 1);
    one.at(0, 0) = q("2");
    CHECK(invert(one).at(0, 0) == q("1/2"));
    CHECK(invert(mat2("1", "1", "1", "2")) == mat2("2", "-1", "-1", "1"));
}

TEST_CASE("solve and invert are exact on random systems") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const RatMatrix m = random_nonsingular(rng, n);
        std::vector<Rational> rhs(n);
        for (Rational& x : rhs) x = random_rational(rng, 9);
        const std::vector<Rational> sol = gauss_solve(m, rhs);
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j) * sol[j];
            CHECK(acc == rhs[i]);
        }
        CHECK(mul(m, invert(m)) == RatMatrix::identity(n));
    }
}

TEST_CASE("kernel basis of the full space") {
    const OrthoBasis basis = nullspace_orthobasis({}, 2);
    CHECK(basis.dim() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(basis.normsq[i] == frob_norm_sq(basis.elements[i]));
        CHECK(basis.normsq[i] >= q("1/4"));
        CHECK(basis.normsq[i] <= q("1"));
        for (std::size_t j = i + 1; j < 3; ++j)
            CHECK(inner(basis.elements[i], basis.elements[j]) == 0);
    }
}

TEST_CASE("kernel basis of the traceless subspace") {
    const OrthoBasis basis = nullspace_orthobasis({SymMatrix::identity(2)}, 2);
    CHECK(basis.dim() == 2);
    for (const SymMatrix& b : basis.elements) CHECK(trace(b) == 0);
    CHECK(inner(basis.elements[0], basis.elements[1]) == 0);
}

TEST_CASE("kernel basis of a full constraint set is empty") {
    SymMatrix e11(2), e22(2), off(2);
    e11.set(0, 0, q("1"));
    e22.set(1, 1, q("1"));
    off.set(0, 1, q("1"));
    CHECK(nullspace_orthobasis({e11, e22, off}, 2).dim() == 0);
}

TEST_CASE("dependent constraints are rejected") {
    const SymMatrix id = SymMatrix::identity(2);
    CHECK_THROWS_AS(nullspace_orthobasis({id, Rational(2) * id}, 2), RankDeficiencyError);
    CHECK_THROWS_AS(ConstraintOperator({id, Rational(2) * id}, 2), RankDeficiencyError);
}

TEST_CASE("kernel basis invariants on random constraint sets") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const std::size_t max_m = n * (n + 1) / 2 - 1;
        const std::size_t m = 1 + static_cast<std::size_t>(rng() % max_m);
        const std::vector<SymMatrix> a = random_constraints(rng, n, m);
        const OrthoBasis basis = nullspace_orthobasis(a, n);
        CHECK(basis.dim() == n * (n + 1) / 2 - m);
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            for (const SymMatrix& aj : a) CHECK(inner(aj, basis.elements[i]) == 0);
            CHECK(basis.normsq[i] == frob_norm_sq(basis.elements[i]));
            CHECK(basis.normsq[i] >= q("1/4"));
            CHECK(basis.normsq[i] <= q("1"));
            for (std::size_t j = i + 1; j < basis.dim(); ++j)
                CHECK(inner(basis.elements[i], basis.elements[j]) == 0);
        }
    }
}

TEST_CASE("projection fixed cases") {
    const ConstraintOperator ops({SymMatrix::identity(2)}, 2);
    const SymMatrix y = SymMatrix::diagonal({q("3"), q("1")});
    CHECK(ops.project(y) == SymMatrix::diagonal({q("1"), q("-1")}));
    CHECK(ops.project(SymMatrix::identity(2)).is_zero());
    // points already in the kernel are fixed
    const SymMatrix z = SymMatrix::diagonal({q("5"), q("-5")});
    CHECK(ops.project(z) == z);
}

TEST_CASE("projection is idempotent and orthogonal") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const std::size_t m = 1 + static_cast<std::size_t>(rng() % n);
        const ConstraintOperator ops(random_constraints(rng, n, m), n);
        const SymMatrix y = random_symmetric(rng, n);
        const SymMatrix z = random_symmetric(rng, n);
        const SymMatrix py = ops.project(y);
        CHECK(ops.project(py) == py);
        CHECK(inner(y - py, ops.project(z)) == 0);
        for (const Rational& res : ops.apply(py)) CHECK(sgn(res) == 0);
    }
}

TEST_CASE("adjoint identities") {
    std::mt19937_64 rng(109);
    const std::vector<SymMatrix> a = random_constraints(rng, 3, 2);
    const ConstraintOperator ops(a, 3);
    CHECK(ops.apply_adjoint(std::vector<Rational>{q("0"), q("0")}).is_zero());
    for (int trial = 0; trial < 20; ++trial) {
        const SymMatrix x = random_symmetric(rng, 3);
        const std::vector<Rational> y{random_rational(rng, 9), random_rational(rng, 9)};
        const std::vector<Rational> ax = ops.apply(x);
        Rational rhs;
        for (std::size_t j = 0; j < 2; ++j) rhs += y[j] * ax[j];
        CHECK(inner(ops.apply_adjoint(y), x) == rhs);
    }
}

TEST_CASE("positive definiteness fixed cases") {
    CHECK(ldl_pd_check(SymMatrix::identity(3)).positive_definite);
    const PdCheck neg = ldl_pd_check(SymMatrix::diagonal({q("1"), q("-1")}));
    CHECK(!neg.positive_definite);
    CHECK(neg.pivot_index == 2);
    CHECK(neg.pivot_value == q("-1"));
    SymMatrix m(2);
    m.set(0, 0, q("2"));
    m.set(0, 1, q("1"));
    m.set(1, 1, q("2"));
    CHECK(ldl_pd_check(m).positive_definite);
    // zero pivot before completion certifies failure
    SymMatrix z(2);
    z.set(0, 1, q("1"));
    const PdCheck zero = ldl_pd_check(z);
    CHECK(!zero.positive_definite);
    CHECK(zero.pivot_index == 1);
    CHECK(zero.pivot_value == 0);
}

TEST_CASE("2x2 positive definiteness agrees with the determinant criterion") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 300; ++trial) {
        const SymMatrix s = random_symmetric(rng, 2, 6);
        const Rational det = s.at(0, 0) * s.at(1, 1) - s.at(0, 1) * s.at(0, 1);
        const bool expected = sgn(det) > 0 && sgn(trace(s)) > 0;
        CHECK(ldl_pd_check(s).positive_definite == expected);
    }
}

TEST_CASE("coordinate expansions never exceed the coefficient norm") {
    // with basis norms at most one, |sum_i c_i B_i|_F^2 <= |c|_2^2
    std::mt19937_64 rng(127);
    const OrthoBasis basis = nullspace_orthobasis({SymMatrix::identity(3)}, 3);
    for (int trial = 0; trial < 30; ++trial) {
        SymMatrix delta(3);
        Rational coeff_sq;
        for (std::size_t i = 0; i < basis.dim(); ++i) {
            const Rational c = random_rational(rng, 9);
            delta += c * basis.elements[i];
            coeff_sq += c * c;
        }
        CHECK(frob_norm_sq(delta) <= coeff_sq);
    }
}
