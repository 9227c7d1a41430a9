#include "exactsdp/linalg.hpp"

#include <utility>

namespace exactsdp {

namespace {

void check_square(const RatMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

// Forward elimination with row swaps on exact nonzero tests.  Operates on an
// augmented block [m | rhs] in place; throws when a pivot column is entirely
// zero.
void eliminate(RatMatrix& m, RatMatrix& rhs) {
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == n)
            throw SingularMatrixError(
                "singular matrix: no nonzero pivot at elimination stage " + std::to_string(col + 1),
                col + 1);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) swap(m.at(pivot, j), m.at(col, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j) swap(rhs.at(pivot, j), rhs.at(col, j));
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (sgn(m.at(row, col)) == 0) continue;
            const Rational factor = m.at(row, col) / m.at(col, col);
            m.at(row, col) = 0;
            for (std::size_t j = col + 1; j < n; ++j) m.at(row, j) -= factor * m.at(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(row, j) -= factor * rhs.at(col, j);
        }
    }
}

RatMatrix back_substitute(const RatMatrix& m, const RatMatrix& rhs) {
    const std::size_t n = m.rows();
    RatMatrix x(n, rhs.cols());
    for (std::size_t col = 0; col < rhs.cols(); ++col) {
        for (std::size_t i = n; i-- > 0;) {
            Rational acc = rhs.at(i, col);
            for (std::size_t j = i + 1; j < n; ++j) acc -= m.at(i, j) * x.at(j, col);
            x.at(i, col) = acc / m.at(i, i);
        }
    }
    return x;
}

}  // namespace

std::vector<Rational> gauss_solve(RatMatrix m, std::vector<Rational> rhs) {
    check_square(m, "gauss_solve");
    if (rhs.size() != m.rows()) throw std::invalid_argument("gauss_solve: dimension mismatch");
    RatMatrix b(m.rows(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) b.at(i, 0) = std::move(rhs[i]);
    eliminate(m, b);
    RatMatrix x = back_substitute(m, b);
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::move(x.at(i, 0));
    return out;
}

RatMatrix invert(const RatMatrix& m) {
    check_square(m, "invert");
    RatMatrix work = m;
    RatMatrix aug = RatMatrix::identity(m.rows());
    eliminate(work, aug);
    return back_substitute(work, aug);
}

namespace {

// Unknowns of the kernel system are the upper-triangle entries (i <= j) of a
// symmetric matrix; <A, X> contributes coefficient A_ii on a diagonal
// unknown and 2 A_ij on an off-diagonal one.
std::vector<std::pair<std::size_t, std::size_t>> triangle_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

SymMatrix unpack_triangle(std::span<const Rational> u, std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    SymMatrix x(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) x.set(pairs[k].first, pairs[k].second, u[k]);
    return x;
}

// Raw kernel basis of the constraint system via reduced row echelon form.
std::vector<std::vector<Rational>> kernel_basis(RatMatrix rows, std::size_t unknowns) {
    const std::size_t m = rows.rows();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && sgn(rows.at(pivot, col)) == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < unknowns; ++j) swap(rows.at(pivot, j), rows.at(rank, j));
        const Rational inv = 1 / rows.at(rank, col);
        for (std::size_t j = col; j < unknowns; ++j) rows.at(rank, j) *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || sgn(rows.at(r, col)) == 0) continue;
            const Rational factor = rows.at(r, col);
            for (std::size_t j = col; j < unknowns; ++j) rows.at(r, j) -= factor * rows.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < m)
        throw RankDeficiencyError("constraint matrices are linearly dependent (rank " +
                                  std::to_string(rank) + " < " + std::to_string(m) + ")");

    std::vector<bool> is_pivot(unknowns, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < unknowns; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(unknowns);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -rows.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

OrthoBasis nullspace_orthobasis(const std::vector<SymMatrix>& constraints, std::size_t n) {
    const auto pairs = triangle_pairs(n);
    const std::size_t unknowns = pairs.size();

    RatMatrix system(constraints.size(), unknowns);
    for (std::size_t r = 0; r < constraints.size(); ++r) {
        const SymMatrix& a = constraints[r];
        if (a.order() != n) throw std::invalid_argument("nullspace_orthobasis: order mismatch");
        for (std::size_t k = 0; k < unknowns; ++k) {
            const auto [i, j] = pairs[k];
            system.at(r, k) = (i == j) ? a.at(i, i) : Rational(2) * a.at(i, j);
        }
    }

    std::vector<std::vector<Rational>> raw = kernel_basis(std::move(system), unknowns);

    // Gram-Schmidt under the trace inner product, exact.
    OrthoBasis basis;
    for (auto& coords : raw) {
        SymMatrix b = unpack_triangle(coords, n, pairs);
        for (std::size_t k = 0; k < basis.elements.size(); ++k) {
            const Rational coeff = inner(b, basis.elements[k]) / basis.normsq[k];
            if (sgn(coeff) != 0) b -= coeff * basis.elements[k];
        }
        Rational nsq = frob_norm_sq(b);
        if (sgn(nsq) == 0)
            throw InvariantError("orthogonalization produced a zero kernel element");
        // Scale by a power of two until the squared norm lands in [1/4, 1].
        const Rational quarter(1, 4);
        const Rational half(1, 2);
        while (nsq > 1) {
            b *= half;
            nsq /= 4;
        }
        while (nsq < quarter) {
            b *= 2;
            nsq *= 4;
        }
        basis.elements.push_back(std::move(b));
        basis.normsq.push_back(std::move(nsq));
    }
    return basis;
}

PdCheck ldl_pd_check(const SymMatrix& x) {
    const std::size_t n = x.order();
    RatMatrix w = x.to_matrix();
    for (std::size_t k = 0; k < n; ++k) {
        const Rational pivot = w.at(k, k);
        if (sgn(pivot) <= 0) return {false, k + 1, pivot};
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(w.at(i, k)) == 0) continue;
            const Rational factor = w.at(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) w.at(i, j) -= factor * w.at(k, j);
            w.at(i, k) = 0;
        }
    }
    return {true};
}

ConstraintOperator::ConstraintOperator(std::vector<SymMatrix> constraints, std::size_t n)
    : n_(n), constraints_(std::move(constraints)) {
    for (const SymMatrix& a : constraints_)
        if (a.order() != n_) throw std::invalid_argument("constraint matrix order mismatch");
    const std::size_t m = constraints_.size();
    if (m == 0) return;
    SymMatrix gram(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) gram.set(i, j, inner(constraints_[i], constraints_[j]));
    if (PdCheck pd = ldl_pd_check(gram); !pd)
        throw RankDeficiencyError(
            "constraint matrices are linearly dependent (Gram pivot " +
            std::to_string(pd.pivot_index) + " is " + to_string(pd.pivot_value) + ")");
    gram_inverse_ = invert(gram.to_matrix());
}

std::vector<Rational> ConstraintOperator::apply(const SymMatrix& x) const {
    if (x.order() != n_) throw std::invalid_argument("apply: order mismatch");
    std::vector<Rational> out(constraints_.size());
    for (std::size_t j = 0; j < constraints_.size(); ++j) out[j] = inner(constraints_[j], x);
    return out;
}

SymMatrix ConstraintOperator::apply_adjoint(std::span<const Rational> y) const {
    if (y.size() != constraints_.size()) throw std::invalid_argument("apply_adjoint: length mismatch");
    SymMatrix acc(n_);
    for (std::size_t j = 0; j < constraints_.size(); ++j) {
        if (sgn(y[j]) == 0) continue;
        acc += y[j] * constraints_[j];
    }
    return acc;
}

SymMatrix ConstraintOperator::project(const SymMatrix& y) const {
    if (constraints_.empty()) return y;
    const std::vector<Rational> image = apply(y);
    std::vector<Rational> weights(constraints_.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < image.size(); ++j) acc += gram_inverse_.at(i, j) * image[j];
        weights[i] = std::move(acc);
    }
    return y - apply_adjoint(weights);
}

}  // namespace exactsdp
