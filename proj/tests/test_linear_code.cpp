#include "doctest.h"

#include <random>
#include <vector>

#include "mpqc/errors.hpp"
#include "mpqc/linear_code.hpp"

using namespace mpqc;

namespace {

LinearCode random_code(const FieldPtr& f, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->order() - 1);
    Matrix m(f, k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return LinearCode::from_generator(m);
}

}  // namespace

TEST_CASE("code_from_generator") {
    auto gf25 = Field::create(5, 2);
    auto full = LinearCode::from_generator(Matrix::identity(gf25, 5));
    CHECK(full.dimension() == 5);
    CHECK(min_distance_exhaustive(full).lower == 1);

    auto rep = LinearCode::from_generator(Matrix::from_ints(gf25, {{1, 1, 1, 1}, {2, 2, 2, 2}}));
    CHECK(rep.dimension() == 1);
    CHECK(min_distance_exhaustive(rep).lower == 4);

    auto a = LinearCode::from_generator(Matrix::from_ints(gf25, {{1, 0, 2, 3}, {0, 1, 4, 4}}));
    auto b = LinearCode::from_generator(Matrix::from_ints(gf25, {{0, 1, 4, 4}, {1, 0, 2, 3}}));
    CHECK(a == b);

    auto empty = LinearCode::from_generator(Matrix(gf25, 0, 4));
    CHECK(empty.dimension() == 0);
    CHECK(!certify_distance(empty).lower);
}

TEST_CASE("duals") {
    auto gf25 = Field::create(5, 2);
    auto gf9 = Field::create(3, 2);
    CHECK(euclidean_dual(LinearCode::full(gf25, 3)).dimension() == 0);
    CHECK(hermitian_dual(LinearCode::full(gf9, 3)).dimension() == 0);
    auto one = LinearCode::from_generator(Matrix::from_ints(gf25, {{1, 1}}));
    CHECK(euclidean_dual(one) == LinearCode::from_generator(Matrix::from_ints(gf25, {{1, -1}})));
    auto one9 = LinearCode::from_generator(Matrix::from_ints(gf9, {{1, 1}}));
    CHECK(hermitian_dual(one9) == LinearCode::from_generator(Matrix::from_ints(gf9, {{1, -1}})));
    CHECK_THROWS_AS(hermitian_dual(LinearCode::full(Field::create(3, 3), 2)), std::domain_error);

    std::mt19937_64 rng(5);
    for (const auto& f : {gf9, gf25}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 2 + t % 6;
            auto c = random_code(f, 1 + t % n, n, rng);
            auto e = euclidean_dual(c);
            auto h = hermitian_dual(c);
            CHECK(c.dimension() + e.dimension() == n);
            CHECK(c.dimension() + h.dimension() == n);
            CHECK(euclidean_dual(e) == c);
            CHECK(hermitian_dual(h) == c);
            CHECK(h == euclidean_dual(c.conjugate()));
            for (std::size_t i = 0; i < c.dimension(); ++i)
                for (std::size_t j = 0; j < h.dimension(); ++j) {
                    CHECK(hermitian_inner(*f, h.generator().row(j), c.generator().row(i)) == 0);
                    CHECK(euclidean_inner(*f, c.generator().row(i), e.generator().row(j % std::max<std::size_t>(1, e.dimension()))) == 0);
                }
        }
    }
}

TEST_CASE("containment") {
    auto gf9 = Field::create(3, 2);
    std::mt19937_64 rng(9);
    auto zero = LinearCode::zero(gf9, 5);
    auto c = random_code(gf9, 3, 5, rng);
    CHECK(is_subcode(zero, c));
    CHECK(is_subcode(c, c));
    CHECK(!is_subcode(c, zero));
    CHECK(is_hermitian_dual_containing(LinearCode::full(gf9, 4)));
    CHECK(!is_hermitian_dual_containing(zero));
    CHECK(!is_hermitian_dual_containing(LinearCode::from_generator(Matrix::from_ints(gf9, {{1, 0}}))));
    CHECK_THROWS_AS(is_subcode(c, LinearCode::zero(gf9, 4)), std::invalid_argument);

    for (int t = 0; t < 30; ++t) {
        auto a = random_code(gf9, 2, 6, rng);
        Matrix g = a.generator().vstack(random_code(gf9, 2, 6, rng).generator());
        auto b = LinearCode::from_generator(g);
        CHECK(is_subcode(a, b));
        CHECK(is_subcode(hermitian_dual(b), hermitian_dual(a)));
    }
}

TEST_CASE("exhaustive distance and MDS certificate agree") {
    auto gf9 = Field::create(3, 2);
    auto gf25 = Field::create(5, 2);
    CHECK(mds_certificate(LinearCode::full(gf9, 4)));
    CHECK(!mds_certificate(LinearCode::from_generator(Matrix::from_ints(gf9, {{1, 1, 0, 1}, {0, 0, 1, 2}}))));
    std::mt19937_64 rng(21);
    for (const auto& f : {gf9, gf25}) {
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 3 + t % 6;
            auto c = random_code(f, 1 + t % 3, n, rng);
            if (c.dimension() == 0) continue;
            auto d = min_distance_exhaustive(c, 100000);
            CHECK(d.exact());
            CHECK(mds_certificate(c) == (*d.lower == n - c.dimension() + 1));
            CHECK(witness_weight(c) >= *d.lower);
        }
    }
    auto big = random_code(gf25, 6, 10, rng);
    CHECK_THROWS_AS(min_distance_exhaustive(big, 1000), budget_exceeded);
    CHECK_THROWS_AS(mds_certificate(big, 10), budget_exceeded);
}

TEST_CASE("distance is independent of the worker count") {
    auto gf9 = Field::create(3, 2);
    std::mt19937_64 rng(2);
    auto c = random_code(gf9, 5, 12, rng);
    setenv("MPQC_WORKERS", "1", 1);
    auto a = min_distance_exhaustive(c);
    setenv("MPQC_WORKERS", "4", 1);
    auto b = min_distance_exhaustive(c);
    unsetenv("MPQC_WORKERS");
    CHECK(a.lower == b.lower);
}

TEST_CASE("binomial") {
    CHECK(binomial(24, 3) == 2024);
    CHECK(binomial(26, 5) == 65780);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}
