#include "doctest.h"

#include <vector>

#include "mpqc/code_constructions.hpp"
#include "mpqc/errors.hpp"
#include "mpqc/matrix_product.hpp"
#include "mpqc/negacyclic.hpp"

using namespace mpqc;

namespace {

Matrix ints(const FieldPtr& f, const std::vector<std::vector<long>>& rows) { return Matrix::from_ints(f, rows); }

}  // namespace

TEST_CASE("mpc_construct trivial cases") {
    auto f = Field::create(3, 2);
    auto c = LinearCode::from_generator(ints(f, {{1, 2, 0}}));
    CHECK(mpc_construct(MatrixProductSpec({c}, ints(f, {{1}}))) == c);
    auto full = LinearCode::full(f, 2);
    CHECK(mpc_construct(MatrixProductSpec({full, full}, Matrix::identity(f, 2))) == LinearCode::full(f, 4));

    // block j is sum_i a_ij c_i
    auto a = LinearCode::from_generator(ints(f, {{1, 0}}));
    auto b = LinearCode::from_generator(ints(f, {{0, 1}}));
    auto p = mpc_construct(MatrixProductSpec({a, b}, ints(f, {{1, 1}, {0, 2}})));
    CHECK(p.contains(std::vector<Field::value_type>{1, 0, 1, 0}));
    CHECK(p.contains(std::vector<Field::value_type>{0, 0, 0, f->from_int(2)}));
    CHECK(p.dimension() == 2);

    CHECK_THROWS_AS(MatrixProductSpec({a, LinearCode::full(f, 3)}, Matrix::identity(f, 2)), std::invalid_argument);
    CHECK_THROWS_AS(MatrixProductSpec({a, b}, Matrix::identity(f, 1)), std::invalid_argument);
    CHECK_THROWS_AS(MatrixProductSpec({a, b}, ints(f, {{1}, {1}})), std::invalid_argument);
    CHECK_THROWS_AS(MatrixProductSpec({}, Matrix::identity(f, 1)), std::invalid_argument);
}

TEST_CASE("FRR and NSC") {
    auto f = Field::create(5, 2);
    CHECK(is_frr(Matrix::identity(f, 3)));
    CHECK(is_nsc(Matrix::identity(f, 1)));
    auto main = main_triangular_matrix(f);
    CHECK(is_nsc(main));
    CHECK(main.is_upper_triangular());
    auto ch = character_matrix(f, 2);
    CHECK(is_frr(ch));
    CHECK_FALSE(is_nsc(ch));
    CHECK_FALSE(is_frr(ints(f, {{1, 1}, {2, 2}})));
}

TEST_CASE("U_A codes") {
    auto f = Field::create(5, 2);
    auto ch = character_matrix(f, 2);
    CHECK(min_distance_exhaustive(ua_code(ch, 1)).lower == 4);
    auto u2 = ua_code(ch, 2);
    CHECK(u2.contains(std::vector<Field::value_type>{0, 0, 2, 2}));
    CHECK(min_distance_exhaustive(u2).lower == 2);
    CHECK(ua_code(ch, 4) == LinearCode::full(f, 4));
    CHECK_THROWS_AS(ua_code(ch, 0), std::out_of_range);
    CHECK_THROWS_AS(ua_code(ch, 5), std::out_of_range);
}

TEST_CASE("character matrix") {
    auto f = Field::create(5, 2);
    auto a1 = character_matrix(f, 1);
    CHECK(a1 == ints(f, {{1, 1}, {1, -1}}));
    auto a2 = character_matrix(f, 2);
    CHECK(a2 == ints(f, {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}));
    for (std::uint32_t r = 1; r <= 4; ++r) {
        auto a = character_matrix(f, r);
        CHECK(a.conjugate() == a);
        CHECK(a * a.transpose() == Matrix::identity(f, a.rows()).scaled(f->from_int(1L << r)));
    }
    auto t = theorem31_check(a2);
    CHECK(t.diagonal_condition);
    CHECK(t.scalar_condition);
    REQUIRE(t.scalar);
    CHECK(*t.scalar == f->inv(f->from_int(4)));
    CHECK_THROWS_AS(character_matrix(Field::create(2, 2), 1), std::domain_error);
}

TEST_CASE("Theorem 3.1 check") {
    auto f = Field::create(3, 2);
    auto id = theorem31_check(Matrix::identity(f, 2));
    CHECK(id.diagonal_condition);
    CHECK(id.scalar_condition);
    CHECK(id.scalar == 1);
    auto tri = theorem31_check(ints(f, {{1, 1}, {0, 1}}));
    CHECK_FALSE(tri.diagonal_condition);
    CHECK_THROWS_AS(theorem31_check(ints(f, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST_CASE("distance bounds") {
    auto f = Field::create(3, 2);
    auto c = lemma33_code(3, 2, Lemma33Variant::i).code;
    auto full = LinearCode::full(f, 8);
    MatrixProductSpec one({c}, Matrix::identity(f, 1));
    const std::vector<std::size_t> d2{2};
    CHECK(distance_bound_frr(one, d2) == 2);
    auto nb = distance_bound_nsc(one, d2);
    CHECK(nb.lower == 2);
    CHECK(nb.exact);

    MatrixProductSpec ident({c, full}, Matrix::identity(f, 2));
    const std::vector<std::size_t> d21{2, 1};
    CHECK(distance_bound_frr(ident, d21) == 1);

    auto g = Field::create(5, 2);
    MatrixProductSpec chain({LinearCode::full(g, 2), LinearCode::full(g, 2), LinearCode::full(g, 2)},
                            main_triangular_matrix(g));
    const std::vector<std::size_t> d246{2, 4, 6};
    auto b = distance_bound_nsc(chain, d246);
    CHECK(b.lower == 6);
    CHECK(b.exact);
    MatrixProductSpec ch({full, full, full, full}, character_matrix(f, 2));
    const std::vector<std::size_t> ones{1, 1, 1, 1};
    CHECK_THROWS_AS(distance_bound_nsc(ch, ones), std::invalid_argument);
    CHECK_THROWS_AS(distance_bound_frr(ch, d2), std::invalid_argument);
}

TEST_CASE("dual formula") {
    auto f = Field::create(3, 2);
    auto a = LinearCode::from_generator(ints(f, {{1, 1, 0, 2}}));
    auto b = LinearCode::from_generator(ints(f, {{1, 0, 1, 0}, {0, 1, 2, 1}}));
    MatrixProductSpec spec({a, b}, ints(f, {{1, 1}, {0, 1}}));
    CHECK(mpc_dual_formula(spec) == euclidean_dual(mpc_construct(spec)));
    CHECK(mpc_dual(spec) == euclidean_dual(mpc_construct(spec)));
    MatrixProductSpec id({a, b}, Matrix::identity(f, 2));
    CHECK(mpc_dual(id) == mpc_construct(MatrixProductSpec({euclidean_dual(a), euclidean_dual(b)},
                                                          Matrix::identity(f, 2))));
    MatrixProductSpec singular({a, b}, ints(f, {{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(mpc_dual_formula(singular), std::invalid_argument);
}

TEST_CASE("Corollary 3.2 at l = 3") {
    std::vector<LinearCode> codes;
    std::vector<std::size_t> dist;
    for (std::uint32_t d : {1u, 2u, 2u, 4u}) {
        auto c = lemma33_code(3, d, Lemma33Variant::i);
        codes.push_back(c.code);
        dist.push_back(*c.distance.lower);
    }
    auto p = corollary32_construct(codes, dist);
    CHECK(p.code.length() == 32);
    CHECK(p.code.dimension() == 27);
    CHECK(p.distance.lower == 4);
    CHECK(is_hermitian_dual_containing(p.code));
    CHECK(p.spec.diagonal_condition());

    auto full = LinearCode::full(Field::create(5, 2), 2);
    auto q = corollary32_construct({full, full, full, full}, std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(q.code == LinearCode::full(full.field(), 8));
    CHECK(q.distance.lower == 1);
}

TEST_CASE("Theorem main1 at l = 5") {
    auto f = square_field(5);
    std::vector<LinearCode> codes;
    for (std::uint32_t d : {0u, 1u, 2u}) codes.push_back(negacyclic_code(f, kai1_defining_set(5, d)).code);
    CHECK(is_monotone_chain(codes));
    const std::vector<std::size_t> dist{2, 4, 6};
    auto p = theorem_main1_construct(codes, main_triangular_matrix(f), dist);
    CHECK(p.code.length() == 78);
    CHECK(p.code.dimension() == 69);
    CHECK(p.distance.lower == 6);
    CHECK(p.distance.upper == 6);

    // descending chains work too
    std::vector<LinearCode> down(codes.rbegin(), codes.rend());
    const std::vector<std::size_t> rdist{6, 4, 2};
    auto pd = theorem_main1_construct(down, main_triangular_matrix(f), rdist);
    CHECK(is_hermitian_dual_containing(pd.code));
    CHECK(pd.distance.lower == 2);

    CHECK_THROWS_AS(theorem_main1_construct(codes, character_matrix(f, 2).submatrix_rows(0, 3), dist),
                    std::invalid_argument);
    std::vector<LinearCode> broken{codes[0], codes[2], codes[1]};
    CHECK_THROWS_AS(theorem_main1_construct(broken, main_triangular_matrix(f), dist), std::invalid_argument);
    CHECK(theorem_main1_construct({codes[1]}, main_triangular_matrix(f, 1), std::vector<std::size_t>{4}).code ==
          codes[1]);
}
