#include "doctest.h"

#include "mpqc/errors.hpp"
#include "mpqc/negacyclic.hpp"
#include "mpqc/quantum.hpp"

using namespace mpqc;

TEST_CASE("Hermitian construction") {
    auto f = square_field(5);
    auto full = LinearCode::full(f, 6);
    auto q = hermitian_construction(full, certify_distance(full), "full");
    CHECK(q.triple() == ParamTriple{6, 6, 1});
    CHECK(q.verified);
    CHECK(q.base == 5);
    CHECK_FALSE(q.d_exact);

    auto k = negacyclic_code(f, kai1_defining_set(5, 1)).code;
    auto qk = hermitian_construction(k, certify_distance(k), "kai1");
    CHECK(qk.triple() == ParamTriple{26, 20, 4});

    auto g = Field::create(3, 2);
    auto bad = LinearCode::from_generator(Matrix::from_ints(g, {{1, 0}}));
    CHECK_THROWS_AS(hermitian_construction(bad, certify_distance(bad), "bad"), std::invalid_argument);
    CHECK_THROWS_AS(hermitian_construction(full, DistanceReport{}, "no distance"), std::invalid_argument);
}

TEST_CASE("Singleton check") {
    auto mds = singleton_check(ParamTriple{78, 68, 6}, true);
    CHECK(mds.defect == 0);
    CHECK(mds.is_mds);
    auto approx = singleton_check(ParamTriple{78, 68, 6}, false);
    CHECK(approx.approximate);
    CHECK_FALSE(approx.is_mds);
    CHECK(singleton_check(ParamTriple{96, 86, 4}, false).defect == 4);
    CHECK(singleton_check(ParamTriple{5, 5, 1}, true).is_mds);
    CHECK_THROWS_AS(singleton_check(ParamTriple{78, 72, 6}, false), consistency_error);
}

TEST_CASE("Theorem 3.5 formulas") {
    CHECK(theorem35_params(5, 4, Case35::i).triple() == ParamTriple{96, 86, 4});
    CHECK(theorem35_params(7, 7, Case35::ii).triple() == ParamTriple{192, 170, 7});
    CHECK_FALSE(theorem35_params(5, 4, Case35::i).verified);
    CHECK_THROWS_AS(theorem35_params(5, 5, Case35::i), std::invalid_argument);
    CHECK_THROWS_AS(theorem35_params(5, 6, Case35::i), std::invalid_argument);
    CHECK_THROWS_AS(theorem35_params(6, 4, Case35::i), std::invalid_argument);
    CHECK(theorem35_component_distances(8, Case35::i) == std::vector<std::uint32_t>{2, 4, 4, 8});
    CHECK(theorem35_component_distances(7, Case35::ii) == std::vector<std::uint32_t>{2, 4, 4, 7});
    CHECK(theorem35_component_length(5, Case35::iv) == 25);
    CHECK(case35_from_string("vi") == Case35::vi);
    CHECK_THROWS_AS(case35_from_string("vii"), std::invalid_argument);
}

TEST_CASE("Table 1 formula rows") {
    const auto& rows = table1_rows();
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        CAPTURE(r.l);
        CAPTURE(r.d);
        auto p = theorem35_params(r.l, r.d, r.c);
        CHECK(p.n == r.new_code.n);
        CHECK(p.k == r.new_code.k);
    }
}

TEST_CASE("emitted records respect the Singleton bound") {
    for (const auto& q : emitted_quantum_records()) {
        CAPTURE(q.provenance);
        CHECK(2 * static_cast<std::int64_t>(q.d_lower) <= q.n - q.k + 2);
    }
}
