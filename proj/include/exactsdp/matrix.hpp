#pragma once

#include <cstddef>
#include <vector>

#include "exactsdp/rational.hpp"

namespace exactsdp {

/// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

/// Dense rational symmetric matrix.  Storage is the full n x n grid; the
/// mutating interface writes mirrored pairs so entries_[i][j] == entries_[j][i]
/// holds exactly at all times.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static SymMatrix identity(std::size_t n);
    static SymMatrix diagonal(const std::vector<Rational>& d);
    /// Throws ValidationError unless m is square and exactly symmetric.
    static SymMatrix from_matrix(const RatMatrix& m);

    std::size_t order() const { return n_; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, Rational v);

    RatMatrix to_matrix() const;
    bool is_zero() const;

    SymMatrix& operator+=(const SymMatrix& other);
    SymMatrix& operator-=(const SymMatrix& other);
    SymMatrix& operator*=(const Rational& s);
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(const Rational& s, SymMatrix a) { return a *= s; }
    SymMatrix operator-() const;

    bool operator==(const SymMatrix& other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);

/// trace(a b) for general square matrices of equal order.
Rational trace_product(const RatMatrix& a, const RatMatrix& b);

/// Trace inner product <x, y> = trace(xy) of symmetric matrices.
Rational inner(const SymMatrix& x, const SymMatrix& y);

Rational trace(const SymMatrix& x);

/// Squared Frobenius norm <x, x>.
Rational frob_norm_sq(const SymMatrix& x);

/// Maximum absolute row sum.
Rational max_row_abs_sum(const SymMatrix& x);

/// x a x for symmetric x, a; the product is symmetric exactly.
SymMatrix sandwich(const SymMatrix& x, const SymMatrix& a);

/// Encoding length: component sum plus rows * cols.
BitSize bit_size(const RatMatrix& m);
BitSize bit_size(const SymMatrix& m);

}  // namespace exactsdp
