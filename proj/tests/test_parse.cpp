#include <doctest.h>

#include <fstream>

#include "zarlat/parse.hpp"
#include "zarlat/random.hpp"

using namespace zarlat;

namespace {

const RingPtr Z = Ring::integers();
const RingPtr QX = Ring::rational_poly("x");
const RingPtr RXY = Ring::rational_multi_poly({"x", "y"});

} // namespace

TEST_CASE("parsing the documented forms") {
    Elem p = parse_elem("3/2*x^2 - x + 1", QX);
    UniPoly expect = {mpq_class(1), mpq_class(-1), mpq_class(3, 2)};
    CHECK(p == Elem::from_uni(QX, expect));

    CHECK(parse_elem("-7", Z) == Elem::from_int(Z, -7));
    CHECK(parse_elem("  42 ", Z) == Elem::from_int(Z, 42));
    CHECK(parse_elem("25", Ring::modular(12)) == Elem::from_int(Ring::modular(12), 1));

    CHECK(parse_elem("x*y - 2", RXY) ==
          add(Elem::monomial(RXY, {1, 1}), Elem::from_int(RXY, -2)));
    CHECK(parse_elem("x^2*y^3", RXY) == Elem::monomial(RXY, {2, 3}));
    CHECK(parse_elem("0", QX).is_zero());
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_elem("x^", QX);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }

    CHECK_THROWS_AS(parse_elem("", Z), ParseError);
    CHECK_THROWS_AS(parse_elem("2 + ", Z), ParseError);
    CHECK_THROWS_AS(parse_elem("y", QX), ParseError);       // unknown variable
    CHECK_THROWS_AS(parse_elem("x + 1", Z), ParseError);    // integers take digits only
    CHECK_THROWS_AS(parse_elem("1/0", QX), ParseError);     // zero denominator
    CHECK_THROWS_AS(parse_elem("3x", QX), ParseError);      // missing '*'
    CHECK_THROWS_AS(parse_elem("1/2", Z), UsageError);      // non-integral constant
}

TEST_CASE("print then parse is the identity on random canonical elements") {
    for (auto ring : {Z, Ring::modular(12), QX, RXY}) {
        Rng rng(31337);
        for (int i = 0; i < 300; ++i) {
            Elem e = random_elem(rng, ring, 4);
            CHECK(parse_elem(to_string(e), ring) == e);
        }
    }
}

TEST_CASE("parse then print is a fixed point on the shipped corpus") {
    auto run = [](const char* file, const RingPtr& ring) {
        std::ifstream in(std::string(ZARLAT_CORPUS_DIR) + "/" + file);
        REQUIRE(in);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Elem e = parse_elem(line, ring);
            std::string printed = to_string(e);
            CHECK(parse_elem(printed, ring) == e);
            CHECK(to_string(parse_elem(printed, ring)) == printed);
        }
    };
    run("integers.txt", Z);
    run("mod12.txt", Ring::modular(12));
    run("poly_x.txt", QX);
    run("poly_xy.txt", RXY);
}
