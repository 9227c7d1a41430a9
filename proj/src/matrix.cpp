#include "exactsdp/matrix.hpp"

#include <utility>

#include "exactsdp/errors.hpp"

namespace exactsdp {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<Rational>& d) {
    SymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.entries_[i * d.size() + i] = d[i];
    return m;
}

SymMatrix SymMatrix::from_matrix(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("matrix is not square");
    SymMatrix s(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (m.at(i, j) != m.at(j, i))
                throw ValidationError("matrix is not symmetric at entry (" + std::to_string(i + 1) +
                                      "," + std::to_string(j + 1) + ")");
            s.set(i, j, m.at(i, j));
        }
    }
    return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, Rational v) {
    entries_[j * n_ + i] = v;
    entries_[i * n_ + j] = std::move(v);
}

RatMatrix SymMatrix::to_matrix() const {
    RatMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    return m;
}

bool SymMatrix::is_zero() const {
    for (const Rational& e : entries_)
        if (sgn(e) != 0) return false;
    return true;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

SymMatrix& SymMatrix::operator*=(const Rational& s) {
    for (Rational& e : entries_) e *= s;
    return *this;
}

SymMatrix SymMatrix::operator-() const {
    SymMatrix m(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows(), b.cols());
    Rational term;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                term = aik * b.at(k, j);
                c.at(i, j) += term;
            }
        }
    }
    return c;
}

Rational trace_product(const RatMatrix& a, const RatMatrix& b) {
    Rational acc;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * b.at(j, i);
    return acc;
}

Rational inner(const SymMatrix& x, const SymMatrix& y) {
    Rational acc;
    const std::size_t n = x.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += x.at(i, j) * y.at(i, j);
    return acc;
}

Rational trace(const SymMatrix& x) {
    Rational acc;
    for (std::size_t i = 0; i < x.order(); ++i) acc += x.at(i, i);
    return acc;
}

Rational frob_norm_sq(const SymMatrix& x) { return inner(x, x); }

Rational max_row_abs_sum(const SymMatrix& x) {
    Rational best;
    for (std::size_t i = 0; i < x.order(); ++i) {
        Rational row;
        for (std::size_t j = 0; j < x.order(); ++j) row += abs(x.at(i, j));
        if (row > best) best = row;
    }
    return best;
}

SymMatrix sandwich(const SymMatrix& x, const SymMatrix& a) {
    const RatMatrix xm = x.to_matrix();
    return SymMatrix::from_matrix(mul(xm, mul(a.to_matrix(), xm)));
}

BitSize bit_size(const RatMatrix& m) {
    BitSize total = static_cast<BitSize>(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) total += bit_size(m.at(i, j));
    return total;
}

BitSize bit_size(const SymMatrix& m) {
    BitSize total = static_cast<BitSize>(m.order() * m.order());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) total += bit_size(m.at(i, j));
    return total;
}

}  // namespace exactsdp
