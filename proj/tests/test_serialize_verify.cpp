#include "doctest.h"

#include "mpqc/commands.hpp"
#include "mpqc/random.hpp"
#include "mpqc/serialize.hpp"
#include "mpqc/verify.hpp"

using namespace mpqc;

TEST_CASE("field and matrix round trip") {
    for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {2u, 4u}, {7u, 1u}}) {
        const auto f = Field::create(p, m);
        const auto g = field_from_json(field_to_json(*f));
        CHECK(g->order() == f->order());
        Rng rng(9, "round-trip", p * 10 + m);
        const auto a = random_matrix(f, 3, 5, rng);
        CHECK(matrix_from_json(matrix_to_json(a), f) == a);
    }
}

TEST_CASE("field json rejects a non-canonical modulus") {
    auto j = field_to_json(*Field::create(3, 2));
    j["modulus"] = json::array({2, 0, 1});
    CHECK_THROWS_AS(field_from_json(j), std::invalid_argument);
}

TEST_CASE("code record round trip keeps the claims") {
    const auto f = Field::create(5, 2);
    Rng rng(1);
    const auto c = random_code(f, 6, 3, rng);
    const auto d = min_distance_exhaustive(c);
    const auto r = code_record_from_json(code_to_json(c, d));
    CHECK(r.code == c);
    CHECK(r.claimed_n == 6);
    CHECK(r.claimed_k == 3);
    CHECK(r.claimed_lower == d.lower);
    CHECK(r.claimed_upper == d.upper);
}

TEST_CASE("code record rejects malformed input") {
    const auto f = Field::create(3, 2);
    auto j = code_to_json(LinearCode::full(f, 3), {});
    j["gen"]["entries"][0][0] = json::array({3, 0});
    CHECK_THROWS_AS(code_record_from_json(j), std::invalid_argument);
    auto k = code_to_json(LinearCode::full(f, 3), {});
    k.erase("gen");
    CHECK_THROWS(code_record_from_json(k));
}

TEST_CASE("rng streams are reproducible and independent") {
    Rng a(42, "check", 3), b(42, "check", 3), c(42, "check", 4), d(42, "other", 3);
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    CHECK(x != d.next());
    Rng r(5);
    for (int i = 0; i < 1000; ++i) {
        const auto v = r.between(3, 7);
        CHECK(v >= 3);
        CHECK(v <= 7);
    }
}

TEST_CASE("random dual-containing codes are dual-containing") {
    const auto f = Field::create(5, 2);
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng(7, "dc", i);
        CHECK(is_hermitian_dual_containing(random_dual_containing(f, 6, 2, rng)));
    }
}

TEST_CASE("fixture verification") {
    const auto f = Field::create(3, 2);
    const auto c = LinearCode::from_generator(Matrix::from_ints(f, {{1, 1, 1, 1}}));
    const auto good = min_distance_exhaustive(c);
    CHECK(verify_fixture(json::array({code_to_json(c, good)})).passed());

    DistanceReport over = good;
    over.lower = 5;
    const auto bad = verify_fixture(json::array({code_to_json(c, over)}));
    CHECK_FALSE(bad.passed());
    CHECK(bad.failures() == 1);
}

TEST_CASE("verify suites are deterministic and pass") {
    const auto a = verify_report_to_json(run_verify(Suite::fields, 3)).dump();
    const auto b = verify_report_to_json(run_verify(Suite::fields, 3)).dump();
    CHECK(a == b);
    CHECK(run_verify(Suite::negacyclic, 3).passed());
}

TEST_CASE("command exit codes") {
    RunConfig cfg;
    CHECK(cmd_table1(cfg).exit_code == 2);
    cfg.theorem = "3.5";
    CHECK(cmd_build(cfg).exit_code == 0);
    cfg.theorem = "main2";
    CHECK(cmd_build(cfg).exit_code == 2);
    cfg.theorem = "nonsense";
    CHECK_THROWS_AS(cmd_build(cfg), std::invalid_argument);
    RunConfig bad;
    bad.l = 4;
    CHECK_THROWS(cmd_build(bad));
}

TEST_CASE("formats") {
    RunConfig cfg;
    cfg.format = Format::csv;
    const auto csv = cmd_table1(cfg).output;
    CHECK(csv.find("l,d,case") == 0);
    cfg.format = Format::md;
    CHECK(cmd_table1(cfg).output.find("| l | d | case |") != std::string::npos);
    CHECK_THROWS_AS(format_from_string("xml"), std::invalid_argument);
}
