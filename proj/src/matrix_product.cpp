#include "mpqc/matrix_product.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "mpqc/errors.hpp"

namespace mpqc {

namespace {

bool diagonal_with_nonzero_diagonal(const Matrix& a) {
    if (!a.field()->has_conjugation() || !a.is_square()) return false;
    const Matrix p = a.conjugate() * a.transpose();
    if (!p.is_diagonal()) return false;
    for (std::size_t i = 0; i < p.rows(); ++i)
        if (p(i, i) == 0) return false;
    return true;
}

// Explicit codewords: component i's lightest generator row placed in every block of row i.
std::size_t product_witness(const MatrixProductSpec& spec, const LinearCode& product) {
    std::size_t best = witness_weight(product);
    for (std::size_t i = 0; i < spec.s(); ++i) {
        const auto& c = spec.components()[i];
        if (c.dimension() == 0) continue;
        std::size_t nnz = 0;
        for (std::size_t j = 0; j < spec.m(); ++j) nnz += spec.matrix()(i, j) != 0;
        if (nnz) best = std::min(best, nnz * witness_weight(c));
    }
    return best;
}

void require_count(const MatrixProductSpec& spec, std::span<const std::size_t> distances) {
    if (distances.size() != spec.s())
        throw std::invalid_argument("need one distance per component, got " + std::to_string(distances.size()));
    for (auto d : distances)
        if (d == 0) throw std::invalid_argument("component distances must be positive");
}

}  // namespace

MatrixProductSpec::MatrixProductSpec(std::vector<LinearCode> components, Matrix a)
    : components_(std::move(components)), a_(std::move(a)) {
    if (components_.empty()) throw std::invalid_argument("matrix product needs at least one component");
    if (a_.rows() != components_.size())
        throw std::invalid_argument("A has " + std::to_string(a_.rows()) + " rows for " +
                                    std::to_string(components_.size()) + " components");
    if (a_.rows() > a_.cols()) throw std::invalid_argument("matrix product needs s <= m");
    for (const auto& c : components_) {
        if (c.field() != a_.field()) throw std::invalid_argument("component over a different field than A");
        if (c.length() != components_.front().length()) throw std::invalid_argument("components of different lengths");
    }
    frr_ = is_frr(a_);
    nsc_ = is_nsc(a_);
    upper_triangular_ = a_.is_upper_triangular();
    diagonal_condition_ = diagonal_with_nonzero_diagonal(a_);
}

LinearCode mpc_construct(const MatrixProductSpec& spec) {
    const Field& f = *spec.field();
    const std::size_t n = spec.component_length();
    const std::size_t m = spec.m();
    Matrix g(spec.field(), 0, n * m);
    std::vector<Field::value_type> row(n * m);
    for (std::size_t i = 0; i < spec.s(); ++i) {
        const auto& gen = spec.components()[i].generator();
        for (std::size_t r = 0; r < gen.rows(); ++r) {
            std::fill(row.begin(), row.end(), 0);
            for (std::size_t j = 0; j < m; ++j)
                f.axpy(std::span(row).subspan(j * n, n), spec.matrix()(i, j), gen.row(r));
            g.append_row(row);
        }
    }
    return LinearCode::from_generator(g);
}

bool is_frr(const Matrix& a) { return rank(a) == a.rows(); }

bool is_nsc(const Matrix& a) {
    const std::size_t s = a.rows();
    const std::size_t m = a.cols();
    if (s > m) return false;
    for (std::size_t t = 1; t <= s; ++t) {
        std::vector<std::size_t> rows(t);
        for (std::size_t i = 0; i < t; ++i) rows[i] = i;
        std::vector<std::size_t> cols(rows);
        while (true) {
            if (determinant(minor(a, rows, cols)) == 0) return false;
            std::size_t i = t;
            while (i-- > 0)
                if (cols[i] < m - t + i) break;
            if (i == static_cast<std::size_t>(-1)) break;
            ++cols[i];
            for (std::size_t j = i + 1; j < t; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    return true;
}

LinearCode ua_code(const Matrix& a, std::size_t k) {
    if (k < 1 || k > a.rows())
        throw std::out_of_range("U_A(k) needs 1 <= k <= " + std::to_string(a.rows()) + ", got " + std::to_string(k));
    return LinearCode::from_generator(a.submatrix_rows(0, k));
}

std::size_t distance_bound_frr(const MatrixProductSpec& spec, std::span<const std::size_t> distances) {
    require_count(spec, distances);
    if (!spec.frr()) throw std::invalid_argument("the FRR bound needs a full-row-rank matrix");
    std::size_t best = SIZE_MAX;
    for (std::size_t k = 1; k <= spec.s(); ++k) {
        const auto u = ua_code(spec.matrix(), k);
        // the full space needs no enumeration
        const std::size_t du = u.dimension() == u.length() ? 1 : *min_distance_exhaustive(u).lower;
        best = std::min(best, distances[k - 1] * du);
    }
    return best;
}

NscBound distance_bound_nsc(const MatrixProductSpec& spec, std::span<const std::size_t> distances) {
    require_count(spec, distances);
    if (!spec.nsc()) throw std::invalid_argument("the NSC bound needs a matrix that is non-singular by columns");
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < spec.s(); ++i) best = std::min(best, (spec.m() - i) * distances[i]);
    return {best, spec.upper_triangular()};
}

LinearCode mpc_dual_formula(const MatrixProductSpec& spec) {
    if (!spec.matrix().is_square()) throw std::invalid_argument("the dual formula needs a square matrix");
    const auto di = det_inv(spec.matrix());
    if (!di.inverse) throw std::invalid_argument("the dual formula needs a nonsingular matrix");
    std::vector<LinearCode> duals;
    for (const auto& c : spec.components()) duals.push_back(euclidean_dual(c));
    return mpc_construct(MatrixProductSpec(std::move(duals), di.inverse->transpose()));
}

LinearCode mpc_dual(const MatrixProductSpec& spec) {
    auto rhs = mpc_dual_formula(spec);
    if (!(euclidean_dual(mpc_construct(spec)) == rhs))
        throw consistency_error("dual of the matrix product code differs from the dual formula");
    return rhs;
}

Theorem31Check theorem31_check(const Matrix& a) {
    if (!a.field()->has_conjugation())
        throw std::domain_error("the diagonal condition needs a field of square order, got " + a.field()->name());
    if (!a.is_square()) throw std::invalid_argument("the diagonal condition needs a square matrix");
    const Matrix conj = a.conjugate();
    const auto di = det_inv(conj);
    if (!di.inverse) throw std::domain_error("singular matrix");
    Theorem31Check out;
    out.diagonal_condition = diagonal_with_nonzero_diagonal(a);
    const Matrix target = di.inverse->transpose();
    const Field& f = *a.field();
    for (std::size_t i = 0; i < a.rows() && !out.scalar; ++i)
        for (std::size_t j = 0; j < a.cols() && !out.scalar; ++j)
            if (a(i, j)) out.scalar = f.div(target(i, j), a(i, j));
    out.scalar_condition = out.scalar && *out.scalar != 0 && a.scaled(*out.scalar) == target;
    if (!out.scalar_condition) out.scalar.reset();
    return out;
}

ProductCode theorem31_construct(std::vector<LinearCode> codes, const Matrix& a, std::span<const std::size_t> distances) {
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (!is_hermitian_dual_containing(codes[i]))
            throw std::invalid_argument("component " + std::to_string(i + 1) + " is not Hermitian dual-containing");
    MatrixProductSpec spec(std::move(codes), a);
    if (!spec.diagonal_condition()) throw std::invalid_argument("A^(l) A^T is not a nonsingular diagonal matrix");
    auto code = mpc_construct(spec);
    if (!is_hermitian_dual_containing(code))
        throw consistency_error("matrix product with the diagonal condition is not dual-containing");
    const auto lower = distance_bound_frr(spec, distances);
    const auto upper = product_witness(spec, code);
    if (lower > upper) throw consistency_error("FRR bound exceeds the weight of an explicit codeword");
    DistanceReport r{lower, LowerSource::product_bound, upper, UpperSource::witness_codeword};
    return {std::move(code), std::move(spec), r};
}

Matrix character_matrix(const FieldPtr& field, std::uint32_t r) {
    if (field->characteristic() == 2) throw std::domain_error("character matrix needs odd characteristic");
    if (r < 1 || r > 10) throw std::invalid_argument("character matrix order out of range");
    const std::size_t size = std::size_t{1} << r;
    auto rev = [r](std::size_t j) {
        std::size_t out = 0;
        for (std::uint32_t b = 0; b < r; ++b)
            if (j >> b & 1) out |= std::size_t{1} << (r - 1 - b);
        return out;
    };
    Matrix a(field, size, size);
    const auto minus = field->neg(1);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) a(i, j) = std::popcount(i & rev(j)) % 2 ? minus : 1;
    return a;
}

ProductCode corollary32_construct(std::vector<LinearCode> codes, std::span<const std::size_t> distances) {
    if (codes.size() != 4) throw std::invalid_argument("Corollary 3.2 takes four component codes");
    const auto a = character_matrix(codes.front().field(), 2);
    return theorem31_construct(std::move(codes), a, distances);
}

bool is_monotone_chain(const std::vector<LinearCode>& codes) {
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < codes.size(); ++i) {
        up = up && is_subcode(codes[i - 1], codes[i]);
        down = down && is_subcode(codes[i], codes[i - 1]);
    }
    return up || down;
}

ProductCode theorem_main1_construct(std::vector<LinearCode> codes, const Matrix& a, std::span<const std::size_t> distances) {
    if (!is_monotone_chain(codes)) throw std::invalid_argument("component codes are not a nested chain");
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (!is_hermitian_dual_containing(codes[i]))
            throw std::invalid_argument("component " + std::to_string(i + 1) + " is not Hermitian dual-containing");
    MatrixProductSpec spec(std::move(codes), a);
    if (!spec.matrix().is_square()) throw std::invalid_argument("Theorem main1 needs a square matrix");
    if (!spec.upper_triangular()) throw std::invalid_argument("Theorem main1 needs an upper-triangular matrix");
    if (!spec.nsc()) throw std::invalid_argument("Theorem main1 needs an NSC matrix");
    auto code = mpc_construct(spec);
    if (!is_hermitian_dual_containing(code))
        throw consistency_error("nested matrix product with NSC triangular A is not dual-containing");
    const auto bound = distance_bound_nsc(spec, distances);
    const auto upper = product_witness(spec, code);
    if (bound.lower > upper) throw consistency_error("NSC bound exceeds the weight of an explicit codeword");
    DistanceReport r{bound.lower, LowerSource::product_bound, upper, UpperSource::witness_codeword};
    return {std::move(code), std::move(spec), r};
}

Matrix main_triangular_matrix(const FieldPtr& field, std::size_t s) {
    if (s < 1 || s > 3) throw std::invalid_argument("the triangular matrix has order 1 to 3");
    const auto full = Matrix::from_ints(field, {{1, 1, 1}, {0, 2, 1}, {0, 0, 1}});
    Matrix out(field, s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) out(i, j) = full(i, j);
    return out;
}

}  // namespace mpqc
