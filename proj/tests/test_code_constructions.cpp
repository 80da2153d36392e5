#include "doctest.h"

#include <vector>

#include "mpqc/code_constructions.hpp"
#include "mpqc/errors.hpp"

using namespace mpqc;

TEST_CASE("GRS codes") {
    auto f = Field::create(3, 2);
    std::vector<Field::value_type> pts{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<Field::value_type> ones(8, 1);
    auto full = grs_code({f, pts, ones, 8});
    CHECK(full == LinearCode::full(f, 8));
    auto rep = grs_code({f, pts, ones, 1});
    CHECK(min_distance_exhaustive(rep).lower == 8);
    auto c = grs_code({f, pts, ones, 5});
    CHECK(c.dimension() == 5);
    CHECK(mds_certificate(c));
    CHECK(min_distance_exhaustive(c).lower == 4);

    auto dup = pts;
    dup[1] = 1;
    CHECK_THROWS_AS(grs_code({f, dup, ones, 3}), std::invalid_argument);
    auto zero = ones;
    zero[3] = 0;
    CHECK_THROWS_AS(grs_code({f, pts, zero, 3}), std::invalid_argument);
    CHECK_THROWS_AS(grs_code({f, pts, ones, 9}), std::invalid_argument);
}

TEST_CASE("Lemma 3.3 (i)") {
    for (std::uint32_t l : {3u, 5u}) {
        for (std::uint32_t d = 1; d <= l + 1; ++d) {
            CAPTURE(l);
            CAPTURE(d);
            try {
                auto c = lemma33_code(l, d, Lemma33Variant::i);
                CHECK(c.code.length() == l * l - 1);
                CHECK(c.code.dimension() == l * l - d);
                CHECK(is_hermitian_dual_containing(c.code));
                CHECK(c.distance.lower == d);
                MESSAGE("realized by " << c.realization);
            } catch (const construction_gap& e) {
                MESSAGE("gap: " << std::string(e.what()));
                CHECK((l == 5 && d == 6));
            }
        }
    }
    CHECK_THROWS_AS(lemma33_code(3, 5, Lemma33Variant::i), std::invalid_argument);
    auto c = lemma33_code(3, 4, Lemma33Variant::i);
    CHECK(min_distance_exhaustive(c.code).lower == 4);
}

TEST_CASE("Lemma 3.3 (ii)") {
    for (std::uint32_t l : {3u, 5u}) {
        for (std::uint32_t d = 2; d <= l; ++d) {
            auto c = lemma33_code(l, d, Lemma33Variant::ii);
            CHECK(c.code.length() == l * l);
            CHECK(c.code.dimension() == l * l + 1 - d);
            CHECK(is_hermitian_dual_containing(c.code));
            CHECK(c.distance.lower == d);
        }
    }
    CHECK_THROWS_AS(lemma33_code(3, 4, Lemma33Variant::ii), std::invalid_argument);
}

TEST_CASE("Lemma 3.4") {
    for (std::uint32_t d = 1; d <= 6; ++d) {
        CAPTURE(d);
        auto c = lemma34_code(5, d);
        CHECK(c.code.length() == 26);
        CHECK(c.code.dimension() == 27 - d);
        CHECK(is_hermitian_dual_containing(c.code));
        CHECK(c.distance.lower == d);
        if (d % 2 == 0 && d > 1) {
            REQUIRE(c.defining);
            CHECK(c.defining->residues == kai1_defining_set(5, (d - 2) / 2).residues);
        }
    }
    CHECK_THROWS_AS(lemma34_code(7, 2), std::invalid_argument);
}
