#include <doctest.h>

#include "test_util.hpp"

using namespace derivlab;

TEST_CASE("parse_poly basics") {
    auto c = make_context({"x", "y1"}, 0);
    CHECK(parse_poly("x^2*y1 + 1/2", c) ==
          parse_poly("y1*x*x + 3/6", c));
    CHECK(parse_poly("x*(x+1)", c) == parse_poly("x^2 + x", c));
    CHECK(render(parse_poly("x^2*y1 + 1/2", c)) == "x^2*y1 + 1/2");
}

TEST_CASE("parse_poly rejections carry a position") {
    auto c = make_context({"x", "y1"}, 0);
    CHECK_THROWS_WITH_AS(parse_poly("x^-1", c),
                         "negative exponent (line 1, col 3)", parse_error);
    CHECK_THROWS_AS(parse_poly("x + z", c), parse_error);
    CHECK_THROWS_AS(parse_poly("x y1", c), parse_error); // implicit mul
    CHECK_THROWS_AS(parse_poly("1/0", c), parse_error);
    CHECK_THROWS_AS(parse_poly("(x", c), parse_error);
    try {
        parse_poly("x *\n* y1", c);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("rational literal binds tighter than *") {
    auto c = make_context({"x"}, 0);
    CHECK(parse_poly("1/2*x", c) == Polynomial::variable(c, 0) * Rational(1, 2));
}

TEST_CASE("render special cases") {
    auto c = make_context({"x"}, 0);
    CHECK(render(Polynomial::zero(c)) == "0");
    CHECK(render(-Polynomial::variable(c, 0)) == "-x");
    CHECK(render(parse_poly("x^2 - 2*x + 1", c)) == "x^2 - 2*x + 1");
}

TEST_CASE("round-trip: parse_poly after render is the identity") {
    auto rng = dl_test::make_rng(10);
    auto c = make_context({"x", "y1", "y2"}, 0);
    for (int i = 0; i < 100; ++i) {
        auto p = dl_test::random_poly(rng, c, 4, 6);
        CHECK(parse_poly(render(p), c) == p);
    }
}

TEST_CASE("parse_derivation") {
    Derivation D = parse_derivation("vars: x, y; x' = 1; y' = x*y + 1");
    auto c = D.context();
    CHECK(c->distinguished_index() == 0);
    CHECK(D.image(0) == Polynomial::constant(c, 1));
    CHECK(D.image(1) == parse_poly("x*y + 1", c));

    CHECK_THROWS_AS(parse_derivation("vars: x, y; x' = 1"), parse_error);
    CHECK_THROWS_AS(
        parse_derivation("vars: x, y; x' = 1; y' = 1; y' = 2"), parse_error);
    CHECK_THROWS_AS(parse_derivation("vars: x; x = 1"), parse_error);

    Derivation T = parse_derivation(
        "vars: x1, x2, x3; x1' = 1; x2' = x1*x2 + 1; x3' = x2 + 1");
    CHECK(as_triangular(T).has_value());
    CHECK(parse_derivation(render(T)).image(2) == T.image(2));
}
