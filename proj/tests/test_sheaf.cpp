#include <doctest.h>

#include "zarlat/random.hpp"
#include "zarlat/sheaf.hpp"
#include "zarlat/suites.hpp"

using namespace zarlat;

namespace {

const RingPtr Z = Ring::integers();
const RingPtr QX = Ring::rational_poly("x");

Elem zi(long v) { return Elem::from_int(Z, v); }
Elem qx(std::initializer_list<long> coeffs) {
    UniPoly p;
    for (long c : coeffs) p.emplace_back(c);
    return Elem::from_uni(QX, std::move(p));
}

CompatibleFamily family_over(const LatticeElt& target, const std::vector<Elem>& parts,
                             const std::vector<LocElem>& sections) {
    auto cover = cover_check(target, parts);
    REQUIRE(cover);
    auto fam = check_compatible(*cover, sections);
    REQUIRE(fam);
    return *fam;
}

} // namespace

TEST_CASE("gluing the integer hand trace: (14/2, 21/3) over the top cover is 7") {
    auto fam = family_over(lat_top(Z), {zi(2), zi(3)},
                           {LocElem{LocRing::at(zi(2)), zi(14), 1},
                            LocElem{LocRing::at(zi(3)), zi(21), 1}});
    LocElem s = glue(zi(1), fam);
    CHECK(loc_eq(s, loc_from_base(LocRing::trivial(Z), zi(7))));
    // the full trace: d=1, N=0, D=1, combination 1 = -2 + 3, s = -14 + 21
    CHECK(s.num == zi(7));
    CHECK(s.exp == 1);

    // permuted Bezout coefficients reach the same element
    CHECK(loc_eq(glue_permuted(zi(1), fam), s));
}

TEST_CASE("gluing the polynomial hand trace gives x^2 + 1") {
    Elem x = qx({0, 1}), xm1 = qx({-1, 1});
    Elem n1 = qx({0, 1, 0, 1});      // x^3 + x
    Elem n2 = qx({-1, 1, -1, 1});    // x^3 - x^2 + x - 1
    auto fam = family_over(lat_top(QX), {x, xm1},
                           {LocElem{LocRing::at(x), n1, 1}, LocElem{LocRing::at(xm1), n2, 1}});
    LocElem s = glue(qx({1}), fam);
    CHECK(loc_eq(s, loc_from_base(LocRing::trivial(QX), qx({1, 0, 1}))));
}

TEST_CASE("gluing a constant family returns the constant") {
    for (auto parts : {std::vector<Elem>{zi(2), zi(3)}, {zi(6), zi(10), zi(15)}, {zi(1)}}) {
        auto cover = cover_check(lat_top(Z), parts);
        REQUIRE(cover);
        CompatibleFamily fam = constant_family(*cover, zi(42));
        CHECK(loc_eq(glue(zi(1), fam), loc_from_base(LocRing::trivial(Z), zi(42))));
    }
}

TEST_CASE("gluing over a non-unit basic open") {
    // cover of D(6) by {12, 18}: spread 5/6 and glue it back
    LocRingPtr at6 = LocRing::at(zi(6));
    LocElem s{at6, zi(5), 1};
    LocElem s12 = restrict_basic(s, zi(12));
    LocElem s18 = restrict_basic(s, zi(18));
    auto fam = family_over(basic_open(zi(6)), {zi(12), zi(18)}, {s12, s18});
    LocElem glued = glue(zi(6), fam);
    CHECK(loc_eq(glued, s));
}

TEST_CASE("gluing with zero divisors: Z/12 where D(2) and D(3) are disjoint") {
    // 6 is nilpotent mod 12, so the overlap ring (Z/12)[1/6] collapses and
    // every pair of sections over {2, 3} is compatible
    const RingPtr Z12 = Ring::modular(12);
    auto zm = [&](long v) { return Elem::from_int(Z12, v); };
    CHECK(lat_eq(basic_open(zm(6)), lat_bottom(Z12)));

    auto cover = cover_check(lat_top(Z12), {zm(2), zm(3)});
    REQUIRE(cover);
    LocElem a{LocRing::at(zm(2)), zm(5), 1};
    LocElem b{LocRing::at(zm(3)), zm(7), 2};
    auto fam = check_compatible(*cover, {a, b});
    REQUIRE(fam);
    LocElem s = glue(zm(1), *fam);
    // the glued element restricts back to both sections
    CHECK(loc_eq(restrict_basic(s, zm(2)), a));
    CHECK(loc_eq(restrict_basic(s, zm(3)), b));
    CHECK(loc_eq(glue_permuted(zm(1), *fam), s));

    Rng rng(111);
    CHECK(sheaf_suite(zm(1), zm(2), zm(3), rng, 15, 0).all_ok());
}

TEST_CASE("empty cover glues to the unique element of the zero ring") {
    auto fam = family_over(basic_open(zi(0)), {}, {});
    LocElem s = glue(zi(0), fam);
    CHECK(s.loc->zero_ring);
    CHECK(loc_eq(s, loc_zero(s.loc)));
    CHECK(loc_eq(s, loc_one(s.loc))); // everything is equal there
}

TEST_CASE("restrict_basic follows the certificate") {
    LocElem half{LocRing::at(zi(2)), zi(1), 1};
    LocElem moved = restrict_basic(half, zi(6));
    CHECK(moved.num == zi(3));
    CHECK(moved.exp == 1);

    CHECK(loc_eq(restrict_basic(half, zi(2)), half)); // identity restriction

    CHECK_THROWS_AS(restrict_basic(LocElem{LocRing::at(qx({0, 1})), qx({1}), 0}, qx({1, 1})),
                    UsageError); // x+1 is not in sqrt<x>
}

TEST_CASE("restrict_section to a smaller element and compare covers") {
    // global section 7 over top = D(2) v D(3), restricted to D(6) with cover {6}
    auto fam = family_over(lat_top(Z), {zi(2), zi(3)},
                           {LocElem{LocRing::at(zi(2)), zi(14), 1},
                            LocElem{LocRing::at(zi(3)), zi(21), 1}});
    SheafSection sec{lat_top(Z), fam};

    SheafSection down = restrict_section(sec, basic_open(zi(6)), {zi(6)});
    REQUIRE(down.family.sections.size() == 1);
    CHECK(loc_eq(down.family.sections[0], loc_from_base(LocRing::at(zi(6)), zi(7))));

    // identity restriction reproduces the section componentwise
    SheafSection same = restrict_section(sec, lat_top(Z), {zi(2), zi(3)});
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(loc_eq(same.family.sections[i], fam.sections[i]));

    // failed preconditions
    CHECK_THROWS_AS(restrict_section(sec, lat_top(Z), {zi(2)}), UsageError);
}

TEST_CASE("restrict_section in Q[x]: global x^2+1 lands on D(x(x-1))") {
    Elem x = qx({0, 1}), xm1 = qx({-1, 1}), prod = qx({0, -1, 1});
    Elem s = qx({1, 0, 1});
    auto cover = cover_check(lat_top(QX), {x, xm1});
    REQUIRE(cover);
    SheafSection sec{lat_top(QX), constant_family(*cover, s)};
    SheafSection down = restrict_section(sec, basic_open(prod), {prod});
    REQUIRE(down.family.sections.size() == 1);
    CHECK(loc_eq(down.family.sections[0], loc_from_base(LocRing::at(prod), s)));
}

TEST_CASE("section_eq compares across covers by common refinement") {
    auto fam23 = family_over(lat_top(Z), {zi(2), zi(3)},
                             {LocElem{LocRing::at(zi(2)), zi(14), 1},
                              LocElem{LocRing::at(zi(3)), zi(21), 1}});
    SheafSection s{lat_top(Z), fam23};

    auto cover1 = cover_check(lat_top(Z), {zi(1)});
    REQUIRE(cover1);
    SheafSection t{lat_top(Z), constant_family(*cover1, zi(7))};
    CHECK(section_eq(s, t));
    CHECK(section_eq(s, s));

    SheafSection u{lat_top(Z), constant_family(*cover1, zi(8))};
    CHECK_FALSE(section_eq(s, u));

    auto covx = cover_check(basic_open(zi(6)), {zi(6)});
    REQUIRE(covx);
    SheafSection over6{basic_open(zi(6)), constant_family(*covx, zi(7))};
    CHECK_THROWS_AS(section_eq(s, over6), UsageError); // different lattice elements
}

TEST_CASE("restriction of sections is functorial") {
    auto fam = family_over(lat_top(Z), {zi(2), zi(3)},
                           {LocElem{LocRing::at(zi(2)), zi(14), 1},
                            LocElem{LocRing::at(zi(3)), zi(21), 1}});
    SheafSection sec{lat_top(Z), fam};
    // top -> D(6) -> D(12), against the direct drop top -> D(12)
    SheafSection mid = restrict_section(sec, basic_open(zi(6)), {zi(6)});
    SheafSection low1 = restrict_section(mid, basic_open(zi(12)), {zi(12)});
    SheafSection low2 = restrict_section(sec, basic_open(zi(12)), {zi(12)});
    CHECK(section_eq(low1, low2));
}

TEST_CASE("top roundtrip over shipped covers") {
    auto rep = global_sections_roundtrip(Z, {zi(2), zi(3)}, {zi(7), zi(-3), zi(0)});
    CHECK(rep.all_ok());
    auto rep1 = global_sections_roundtrip(Z, {zi(1)}, {zi(9)});
    CHECK(rep1.all_ok());

    Rng rng(2025);
    CHECK(roundtrip_suite(QX, {qx({0, 1}), qx({-1, 1})}, rng, 200).all_ok());
    CHECK(perturbed_roundtrip_suite(Z, {zi(6), zi(10), zi(15)}, rng, 100).all_ok());
}

TEST_CASE("pullback instances accept compatible pairs and reject the rest") {
    LocRingPtr at2 = LocRing::at(zi(2)), at3 = LocRing::at(zi(3));
    std::vector<std::pair<LocElem, LocElem>> pairs = {
        {LocElem{at2, zi(14), 1}, LocElem{at3, zi(21), 1}}, // glues to 7
        {LocElem{at2, zi(1), 1}, LocElem{at3, zi(1), 1}},   // 1/2 vs 1/3
    };
    PullbackReport rep = pullback_instance_check(zi(1), zi(2), zi(3), pairs);
    REQUIRE(rep.cases.size() == 2);
    CHECK(rep.cases[0].compatible);
    CHECK(rep.cases[0].glue_restricts_back);
    CHECK(rep.cases[0].glue_unique);
    CHECK_FALSE(rep.cases[1].compatible);
    CHECK(rep.terminal_ok);

    CHECK_THROWS_AS(pullback_instance_check(zi(6), zi(2), zi(3), {}), UsageError);
}

TEST_CASE("randomized sheaf suites on the three instance configurations") {
    Rng rng(909090);
    CHECK(sheaf_suite(zi(1), zi(2), zi(3), rng, 20, 20).all_ok());
    CHECK(sheaf_suite(zi(6), zi(12), zi(18), rng, 10, 10).all_ok());
    CHECK(sheaf_suite(qx({1}), qx({0, 1}), qx({-1, 1}), rng, 10, 10).all_ok());
}
