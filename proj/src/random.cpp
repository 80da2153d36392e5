#include "mpqc/random.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpqc/matrix_product.hpp"

namespace mpqc {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr int max_attempts = 10'000;

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view check, std::uint64_t index)
    : engine_(mix(mix(seed) ^ fnv1a(check)) ^ mix(index)) {}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
}

std::vector<Field::value_type> Rng::vector(const Field& f, std::size_t n) {
    std::vector<Field::value_type> v(n);
    for (auto& x : v) x = element(f);
    return v;
}

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element(*f);
    return m;
}

LinearCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
    if (k > n) throw std::invalid_argument("random_code needs k <= n");
    for (int a = 0; a < max_attempts; ++a) {
        auto c = LinearCode::from_generator(random_matrix(f, k, n, rng));
        if (c.dimension() == k) return c;
    }
    throw std::runtime_error("random_code: rank rejection did not terminate");
}

LinearCode random_subcode(const LinearCode& c, std::size_t k, Rng& rng) {
    if (k > c.dimension()) throw std::invalid_argument("random_subcode needs k <= dim");
    for (int a = 0; a < max_attempts; ++a) {
        auto coeffs = random_matrix(c.field(), k, c.dimension(), rng);
        auto s = LinearCode::from_generator(coeffs * c.generator());
        if (s.dimension() == k) return s;
    }
    throw std::runtime_error("random_subcode: rank rejection did not terminate");
}

Matrix random_nonsingular(const FieldPtr& f, std::size_t s, Rng& rng) { return random_frr(f, s, s, rng); }

Matrix random_frr(const FieldPtr& f, std::size_t s, std::size_t m, Rng& rng) {
    for (int a = 0; a < max_attempts; ++a) {
        auto x = random_matrix(f, s, m, rng);
        if (rank(x) == s) return x;
    }
    throw std::runtime_error("random_frr: rank rejection did not terminate");
}

Matrix random_nsc_upper(const FieldPtr& f, std::size_t s, Rng& rng) {
    for (int a = 0; a < max_attempts; ++a) {
        Matrix x(f, s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i; j < s; ++j) x(i, j) = rng.nonzero(*f);
        if (is_nsc(x)) return x;
    }
    throw std::runtime_error("random_nsc_upper: rejection did not terminate");
}

Matrix random_diagonal_condition(const FieldPtr& f, std::size_t s, Rng& rng) {
    for (int a = 0; a < max_attempts; ++a) {
        Matrix rows(f, 0, s);
        bool ok = true;
        for (std::size_t i = 0; i < s && ok; ++i) {
            // candidates v with sum_k r_k^l v_k = 0 for the rows r chosen so far
            const Matrix space = rows.rows() ? nullspace(rows.conjugate()) : Matrix::identity(f, s);
            ok = false;
            for (int t = 0; t < 100 && !ok; ++t) {
                std::vector<Field::value_type> v(s, 0);
                for (std::size_t r = 0; r < space.rows(); ++r) f->axpy(v, rng.element(*f), space.row(r));
                Field::value_type norm = 0;
                for (auto x : v) norm = f->add(norm, f->norm(x));
                if (norm != 0) {
                    rows.append_row(v);
                    ok = true;
                }
            }
        }
        if (ok) return rows;
    }
    throw std::runtime_error("random_diagonal_condition: sampling did not terminate");
}

Matrix random_self_orthogonal_rows(const FieldPtr& f, std::size_t n, std::size_t t, Rng& rng) {
    Matrix rows(f, 0, n);
    for (int tries = 0; rows.rows() < t && tries < 400; ++tries) {
        const Matrix space = rows.rows() ? nullspace(rows.conjugate()) : Matrix::identity(f, n);
        std::vector<Field::value_type> v(n, 0);
        for (std::size_t r = 0; r < space.rows(); ++r) f->axpy(v, rng.element(*f), space.row(r));
        Field::value_type norm = 0;
        for (auto x : v) norm = f->add(norm, f->norm(x));
        if (norm != 0) continue;
        Matrix grown = rows;
        grown.append_row(v);
        if (rank(grown) == grown.rows()) rows = std::move(grown);
    }
    return rows;
}

LinearCode random_dual_containing(const FieldPtr& f, std::size_t n, std::size_t t, Rng& rng) {
    return hermitian_dual(LinearCode::from_generator(random_self_orthogonal_rows(f, n, t, rng)));
}

std::vector<LinearCode> random_dual_containing_chain(const FieldPtr& f, std::size_t n, std::size_t s, Rng& rng) {
    const auto rows = random_self_orthogonal_rows(f, n, n / 2, rng);
    std::vector<std::size_t> t(s);
    for (auto& x : t) x = rng.below(rows.rows() + 1);
    std::sort(t.rbegin(), t.rend());
    std::vector<LinearCode> chain;
    for (auto tj : t) chain.push_back(hermitian_dual(LinearCode::from_generator(rows.submatrix_rows(0, tj))));
    return chain;
}

}  // namespace mpqc
