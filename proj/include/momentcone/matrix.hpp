#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "momentcone/scalar.hpp"

namespace momentcone::exactla {

/// Dense rectangular matrix over Q(sqrt 2).  Immutable by convention once
/// built; elimination routines work on copies.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix transposed() const;

    std::vector<Scalar> row(std::size_t i) const;
    std::vector<Scalar> column(std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

/// Exact row-space dimension via fraction-free Bareiss elimination with
/// smallest-bit-length pivoting.
std::size_t rank(const Matrix& m);

/// Exact basis of { x : Mx = 0 }.  Each basis vector is scaled to integer
/// components (both rational and sqrt2 parts) with overall content 1 and a
/// positive first nonzero entry; vectors are ordered by their free column.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

/// Exact determinant (square matrices only).
Scalar det(const Matrix& m);

/// Exact solution of Mx = b when consistent (free variables set to zero);
/// std::nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Scales a nonzero vector by a positive rational so that all components are
/// integers (both parts) with content 1, then fixes the sign of the first
/// nonzero entry to be positive.  Zero vectors pass through unchanged.
std::vector<Scalar> normalize_primitive(std::vector<Scalar> v);

}  // namespace momentcone::exactla
