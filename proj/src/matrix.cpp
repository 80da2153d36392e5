#include "mpqc/matrix.hpp"

#include <stdexcept>
#include <string>

namespace mpqc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix without a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("matrix without a field");
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match matrix shape");
    for (auto v : data_)
        if (v >= field_->order()) throw std::invalid_argument("matrix entry out of range for " + field_->name());
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix out(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) out(i, j) = out.field_->from_int(rows[i][j]);
    }
    return out;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return {field_, (*this)(r, c)};
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out = *this;
    for (auto& v : out.data_) v = field_->conj(v);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("matrix product over different fields");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) field_->axpy(out.row(i), (*this)(i, k), o.row(k));
    return out;
}

Matrix Matrix::scaled(value_type f) const {
    Matrix out = *this;
    field_->scale(out.data_, f);
    return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("vstack over different fields");
    if (cols_ != o.cols_ && rows_ && o.rows_) throw std::invalid_argument("vstack column mismatch");
    const std::size_t c = rows_ ? cols_ : o.cols_;
    Matrix out(field_, rows_ + o.rows_, c);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

void Matrix::append_row(std::span<const value_type> r) {
    if (r.size() != cols_) throw std::invalid_argument("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::submatrix_rows(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw std::out_of_range("row range out of bounds");
    Matrix out(field_, count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
    return out;
}

bool Matrix::is_zero() const noexcept {
    for (auto v : data_)
        if (v) return false;
    return true;
}

bool Matrix::is_upper_triangular() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < std::min(i, cols_); ++j)
            if ((*this)(i, j)) return false;
    return true;
}

bool Matrix::is_diagonal() const noexcept {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j)) return false;
    return true;
}

namespace {

// In-place forward elimination to rref; returns pivot columns. Rows beyond rank are zero.
std::vector<std::size_t> eliminate(Matrix& m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
        const auto inv = f.inv(m(r, c));
        f.scale(m.row(r), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            f.axpy(m.row(i), f.neg(m(i, c)), m.row(r));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    Matrix work = m;
    auto pivots = eliminate(work);
    const std::size_t rk = pivots.size();
    return {work.submatrix_rows(0, rk), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return eliminate(work).size();
}

Matrix nullspace(const Matrix& m) {
    const auto [r, rk, pivots] = rref(m);
    const Field& f = *m.field();
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix out(m.field(), 0, n);
    std::vector<Field::value_type> v(n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r(i, free));
        out.append_row(v);
    }
    return rref(out).reduced;
}

DetInv det_inv(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_inv requires a square matrix");
    const Field& f = *m.field();
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(m.field(), n);
    Field::value_type det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return {FieldElement(m.field(), 0), std::nullopt};
        if (piv != c) {
            std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(c).begin());
            std::swap_ranges(inv.row(piv).begin(), inv.row(piv).end(), inv.row(c).begin());
            det = f.neg(det);
        }
        const auto p = a(c, c);
        det = f.mul(det, p);
        const auto pinv = f.inv(p);
        f.scale(a.row(c), pinv);
        f.scale(inv.row(c), pinv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const auto factor = f.neg(a(i, c));
            f.axpy(a.row(i), factor, a.row(c));
            f.axpy(inv.row(i), factor, inv.row(c));
        }
    }
    return {FieldElement(m.field(), det), std::move(inv)};
}

Field::value_type determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant requires a square matrix");
    const Field& f = *m.field();
    const std::size_t n = m.rows();
    Matrix a = m;
    Field::value_type det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(c).begin());
            det = f.neg(det);
        }
        const auto p = a(c, c);
        det = f.mul(det, p);
        const auto pinv = f.inv(p);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            f.axpy(a.row(i), f.neg(f.mul(a(i, c), pinv)), a.row(c));
        }
    }
    return det;
}

Matrix minor(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    auto check = [](std::span<const std::size_t> idx, std::size_t bound, const char* what) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= bound) throw std::out_of_range(std::string(what) + " index out of range");
            if (i && idx[i] <= idx[i - 1])
                throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
        }
    };
    check(rows, m.rows(), "row");
    check(cols, m.cols(), "column");
    Matrix out(m.field(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
    return out;
}

std::vector<Field::value_type> reduce_against(const Matrix& rref_basis, std::span<const std::size_t> pivots,
                                              std::span<const Field::value_type> v) {
    const Field& f = *rref_basis.field();
    std::vector<Field::value_type> w(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        const auto c = w[pivots[i]];
        if (c) f.axpy(w, f.neg(c), rref_basis.row(i));
    }
    return w;
}

}  // namespace mpqc
