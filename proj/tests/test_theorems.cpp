#include "doctest.h"

#include "mpqc/errors.hpp"
#include "mpqc/theorems.hpp"

using namespace mpqc;

TEST_CASE("Theorem 3.5 build at l = 5, case i") {
    auto b = theorem35_build(5, 4, Case35::i);
    CHECK(b.product.code.length() == 96);
    CHECK(b.product.code.dimension() == 91);
    CHECK(b.product.distance.lower == 4);
    CHECK(b.built.verified);
    CHECK(b.built.triple() == ParamTriple{96, 86, 4});
    CHECK_FALSE(b.built.discrepancy);
    CHECK(b.formula.triple() == b.built.triple());
}

TEST_CASE("Theorem 3.5 build at l = 3 analogue is refused") {
    CHECK_THROWS_AS(theorem35_build(3, 3, Case35::ii), std::invalid_argument);
}

TEST_CASE("admissible depth triples") {
    CHECK(admissible_triples(MainTheorem::main2, 5, DeltaMode::strict).empty());
    auto relaxed = admissible_triples(MainTheorem::main2, 5, DeltaMode::relaxed);
    CHECK(relaxed.size() == 10);
    CHECK(relaxed.front() == std::array<std::uint32_t, 3>{0, 0, 0});
    CHECK(admissible_triples(MainTheorem::main3, 7, DeltaMode::strict).size() == 1);
    CHECK(admissible_triples(MainTheorem::main3, 7, DeltaMode::relaxed).size() == 10);
    CHECK_FALSE(admissible_deltas(MainTheorem::main3, 7, {0, 1, 2}, DeltaMode::relaxed));
    CHECK_FALSE(admissible_deltas(MainTheorem::main2, 5, {0, 1, 3}, DeltaMode::relaxed));
}

TEST_CASE("Theorem main2 at l = 5") {
    auto r = theorem_main_construct(MainTheorem::main2, 5, {0, 1, 2}, DeltaMode::relaxed);
    CHECK(r.built);
    CHECK(r.dims == std::vector<std::size_t>{25, 23, 21});
    CHECK(r.distances == std::vector<std::size_t>{2, 4, 6});
    REQUIRE(r.classical);
    CHECK(r.classical->length() == 78);
    CHECK(r.classical->dimension() == 69);
    CHECK(r.computed.verified);
    CHECK(r.computed.triple() == ParamTriple{78, 60, 6});
    CHECK(r.formula == ParamTriple{78, 72, 6});
    REQUIRE(r.discrepancy);
    CHECK(r.discrepancy->note.find("Singleton") != std::string::npos);

    auto flat = theorem_main_construct(MainTheorem::main2, 5, {0, 0, 0}, DeltaMode::relaxed);
    CHECK(flat.computed.triple() == ParamTriple{78, 72, 2});

    auto predicted = theorem_main_construct(MainTheorem::main2, 5, {0, 1, 2}, DeltaMode::relaxed, false);
    CHECK_FALSE(predicted.computed.verified);
    CHECK(predicted.computed.triple() == r.computed.triple());

    CHECK_THROWS_AS(theorem_main_construct(MainTheorem::main2, 5, {0, 1, 2}, DeltaMode::strict),
                    std::invalid_argument);
    CHECK_THROWS_AS(theorem_main_construct(MainTheorem::main2, 7, {0, 1, 2}, DeltaMode::relaxed),
                    std::invalid_argument);
}

TEST_CASE("Theorem main3 at l = 7") {
    auto r = theorem_main_construct(MainTheorem::main3, 7, {1, 2, 3}, DeltaMode::strict);
    CHECK(r.built);
    CHECK(r.computed.verified);
    CHECK(r.computed.base == 7);
    CHECK(r.computed.n == 75);
    CHECK(r.computed.triple() == ParamTriple{75, 51, 7});
    CHECK(r.formula == ParamTriple{75, 63, 7});
    CHECK(r.discrepancy);
}

TEST_CASE("Example 3.8 at l = 5") {
    auto rel = run_example("3.8", 5, DeltaMode::relaxed, true);
    CHECK(rel.admissible == 10);
    REQUIRE(rel.claims.size() == 2);
    REQUIRE(rel.claims[0].best);
    CHECK(rel.claims[0].best->computed.triple() == ParamTriple{78, 68, 4});
    CHECK(rel.claims[0].best->delta == std::array<std::uint32_t, 3>{0, 0, 1});
    REQUIRE(rel.claims[1].best);
    CHECK(rel.claims[1].best->computed.triple() == ParamTriple{78, 60, 6});
    CHECK(rel.claims[1].best->computed.verified);
    CHECK(rel.claims[1].discrepancy);

    auto strict = run_example("3.8", 5, DeltaMode::strict, true);
    CHECK(strict.admissible == 0);
    for (const auto& c : strict.claims) {
        CHECK_FALSE(c.best);
        REQUIRE(c.discrepancy);
        CHECK(c.discrepancy->note == "no admissible delta triple");
    }
    CHECK_THROWS_AS(run_example("3.8", 7, DeltaMode::relaxed, false), std::invalid_argument);
    CHECK_THROWS_AS(run_example("3.9", 5, DeltaMode::relaxed, false), std::invalid_argument);
}

TEST_CASE("Example 3.10 at l = 7") {
    auto rel = run_example("3.10", 7, DeltaMode::relaxed, true);
    REQUIRE(rel.claims.size() == 2);
    REQUIRE(rel.claims[0].best);
    CHECK(rel.claims[0].best->computed.triple() == ParamTriple{75, 59, 5});
    REQUIRE(rel.claims[1].best);
    CHECK(rel.claims[1].best->computed.triple() == ParamTriple{75, 51, 7});
    for (const auto& c : rel.claims) CHECK(c.best->computed.verified);
}

TEST_CASE("formula-level examples for large l") {
    auto r = run_example("3.8", 13, DeltaMode::relaxed, false);
    CHECK_FALSE(r.built);
    for (const auto& c : r.claims) {
        REQUIRE(c.best);
        CHECK_FALSE(c.best->computed.verified);
        CHECK(c.best->computed.d_lower >= static_cast<std::size_t>(*c.claimed.d));
    }
}

TEST_CASE("Theorem 3.5 recipe parameters") {
    CHECK(theorem35_recipe_params(5, 4, Case35::i) == ParamTriple{96, 86, 4});
    CHECK(theorem35_recipe_params(9, 8, Case35::i) == ParamTriple{320, 292, 8});
    CHECK(theorem35_recipe_params(7, 8, Case35::v) == ParamTriple{200, 172, 8});
    // case ii: the formula's +6 is 4 more than the recipe gives
    CHECK(theorem35_recipe_params(7, 7, Case35::ii) == ParamTriple{192, 166, 7});
    CHECK(theorem35_params(7, 7, Case35::ii).k == 170);
}
