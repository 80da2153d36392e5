#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpqc/field.hpp"

namespace mpqc {

/// Dense row-major matrix over a finite field. Indices are 0-based.
class Matrix {
   public:
    using value_type = Field::value_type;

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<value_type> entries);
    /// Rows of small integers mapped into the prime subfield (negatives allowed).
    static Matrix from_ints(FieldPtr field, const std::vector<std::vector<long>>& rows);
    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    value_type operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    value_type& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    FieldElement at(std::size_t r, std::size_t c) const;

    std::span<const value_type> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<value_type> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<value_type>& data() const noexcept { return data_; }

    Matrix transpose() const;
    /// Entrywise x -> x^l (A^(l)).
    Matrix conjugate() const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(value_type f) const;
    /// Stack rows of o below this matrix.
    Matrix vstack(const Matrix& o) const;
    void append_row(std::span<const value_type> r);
    Matrix submatrix_rows(std::size_t first, std::size_t count) const;

    bool is_zero() const noexcept;
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_upper_triangular() const noexcept;
    bool is_diagonal() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

struct RrefResult {
    Matrix reduced;  ///< rank x cols, zero rows dropped
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form with first-nonzero pivoting; zero rows are dropped.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as rows, in rref) of {x : m x^T = 0}.
Matrix nullspace(const Matrix& m);

struct DetInv {
    FieldElement det;
    std::optional<Matrix> inverse;
};

/// Determinant and inverse by Gaussian elimination; the inverse is absent iff det = 0.
DetInv det_inv(const Matrix& m);
Field::value_type determinant(const Matrix& m);

/// Submatrix with the given strictly increasing row and column indices.
Matrix minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Reduce v against an rref basis with the given pivots; the result is zero iff v is in the row space.
std::vector<Field::value_type> reduce_against(const Matrix& rref_basis, std::span<const std::size_t> pivots,
                                              std::span<const Field::value_type> v);

}  // namespace mpqc
