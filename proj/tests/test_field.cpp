#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "mpqc/errors.hpp"
#include "mpqc/field.hpp"

using namespace mpqc;

TEST_CASE("canonical moduli") {
    auto gf3 = Field::create(3, 1);
    CHECK(gf3->order() == 3);
    CHECK(gf3->modulus() == std::vector<std::uint32_t>{0, 1});

    auto gf25 = Field::create(5, 2);
    CHECK(gf25->modulus() == std::vector<std::uint32_t>{2, 0, 1});
    auto gf9 = Field::create(3, 2);
    CHECK(gf9->modulus() == std::vector<std::uint32_t>{1, 0, 1});

    CHECK_THROWS_AS(Field::create(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(2, 21), budget_exceeded);
    CHECK(Field::create(5, 2) == gf25);
}

TEST_CASE("GF(25): x * x reduces to 3") {
    auto f = Field::create(5, 2);
    const std::uint32_t x = f->from_coeffs(std::vector<std::uint32_t>{0, 1});
    CHECK(f->mul(x, x) == 3);
    FieldElement a(f, x);
    CHECK((a * a).coeffs() == std::vector<std::uint32_t>{3, 0});
}

TEST_CASE("field axioms exhaustively on small fields") {
    for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {7u, 1u}, {2u, 3u}, {3u, 3u}, {7u, 2u}}) {
        auto f = Field::create(p, m);
        const auto q = f->order();
        CAPTURE(q);
        for (std::uint32_t a = 1; a < q; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
        CHECK_THROWS_AS(f->inv(0), std::domain_error);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
                CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
                for (std::uint32_t c = 0; c < q; c += 3) {
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
                    CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("Zech addition agrees with coefficient addition") {
    auto f = Field::create(3, 7);  // 2187 > add table limit
    for (std::uint32_t a = 0; a < f->order(); a += 7) {
        for (std::uint32_t b = 0; b < f->order(); b += 11) {
            auto ca = f->coeffs(a);
            const auto cb = f->coeffs(b);
            for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % 3;
            REQUIRE(f->add(a, b) == f->from_coeffs(ca));
        }
    }
}

TEST_CASE("conjugation") {
    auto gf9 = Field::create(3, 2);
    const std::uint32_t alpha = 3;  // x
    CHECK(gf9->conj(alpha) == gf9->neg(alpha));
    auto gf25 = Field::create(5, 2);
    std::size_t fixed = 0;
    for (std::uint32_t a = 0; a < 25; ++a) {
        CHECK(gf25->conj(gf25->conj(a)) == a);
        if (gf25->conj(a) == a) ++fixed;
    }
    CHECK(fixed == 5);
    CHECK(gf25->subfield_elements(5).size() == 5);
    CHECK_THROWS_AS(Field::create(3, 3)->conj(1), std::domain_error);
    FieldElement c(gf25, 3);
    CHECK(c.conj() == c);
}

TEST_CASE("mismatched elements") {
    FieldElement a(Field::create(3, 2), 1);
    FieldElement b(Field::create(5, 2), 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(FieldElement(Field::create(3, 2), 0).inv(), std::domain_error);
}

TEST_CASE("primitive nth roots") {
    auto gf25 = Field::create(5, 2);
    CHECK(multiplicative_order_mod(25, 52) == 2);
    auto r = primitive_nth_root(gf25, 52);
    const auto& ext = *r.embedding.ext();
    CHECK(ext.order() == 625);
    CHECK(ext.pow(r.root, 52) == 1);
    CHECK(ext.pow(r.root, 26) == ext.neg(1));
    for (auto d : {1, 2, 4, 13, 26}) CHECK(ext.pow(r.root, d) != 1);
    CHECK(ext.element_order(r.root) == 52);
    CHECK_THROWS_AS(primitive_nth_root(Field::create(3, 2), 3), std::invalid_argument);

    auto r50 = primitive_nth_root(Field::create(7, 2), 50);
    CHECK(r50.embedding.ext()->order() == 2401);
    CHECK(r50.embedding.ext()->element_order(r50.root) == 50);
}

TEST_CASE("embedding is a homomorphism and restrict inverts it") {
    for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 4u}}) {
        auto base = Field::create(p, m);
        auto ext = Field::create(p, 2 * m);
        ExtensionEmbedding e(base, ext);
        CHECK(e.relative_degree() == 2);
        const auto q = base->order();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(e.restrict(e.embed(a)) == a);
            CHECK(e.in_base(e.embed(a)));
            for (std::uint32_t b = 0; b < q; ++b) {
                REQUIRE(e.embed(base->add(a, b)) == ext->add(e.embed(a), e.embed(b)));
                REQUIRE(e.embed(base->mul(a, b)) == ext->mul(e.embed(a), e.embed(b)));
            }
        }
        std::uint32_t outside = 0;
        while (e.in_base(outside)) ++outside;
        CHECK_THROWS_AS(e.restrict(outside), consistency_error);
    }
}
