#include <doctest.h>

#include "zarlat/cover.hpp"
#include "zarlat/random.hpp"

using namespace zarlat;

namespace {

const RingPtr Z = Ring::integers();
Elem zi(long v) { return Elem::from_int(Z, v); }

} // namespace

TEST_CASE("cover diagram shapes") {
    DiagShape d0 = cover_diagram_shape(0);
    CHECK(d0.objects.empty());
    CHECK(d0.arrows.empty());

    DiagShape d2 = cover_diagram_shape(2);
    CHECK(d2.objects.size() == 3); // sing(1), sing(2), pair(1,2)
    CHECK(d2.arrows.size() == 5);  // 3 identities + left + right

    DiagShape d3 = cover_diagram_shape(3);
    CHECK(d3.objects.size() == 6);
    CHECK(d3.arrows.size() == 12);
}

TEST_CASE("diagram composition: identities act trivially, nothing else composes") {
    for (std::size_t n = 0; n <= 6; ++n) {
        DiagShape d = cover_diagram_shape(n);
        for (std::size_t a = 0; a < d.arrows.size(); ++a)
            for (std::size_t b = 0; b < d.arrows.size(); ++b) {
                auto comp = d.compose(a, b);
                if (d.arrows[a].dst != d.arrows[b].src) {
                    CHECK_FALSE(comp);
                    continue;
                }
                bool a_id = d.arrows[a].kind == DiagShape::Arrow::Kind::identity;
                bool b_id = d.arrows[b].kind == DiagShape::Arrow::Kind::identity;
                if (a_id) CHECK(*comp == b);
                else if (b_id) CHECK(*comp == a);
                else CHECK_FALSE(comp); // two non-identity arrows never compose
            }
    }
}

TEST_CASE("hom-sets have at most one arrow except identities") {
    DiagShape d = cover_diagram_shape(4);
    for (std::size_t x = 0; x < d.objects.size(); ++x)
        for (std::size_t y = 0; y < d.objects.size(); ++y) {
            std::size_t count = 0;
            for (const auto& a : d.arrows)
                if (a.src == x && a.dst == y) ++count;
            CHECK(count <= 1);
            if (x == y) CHECK(count == 1);
        }
}

TEST_CASE("cover_check produces re-verifying certificates") {
    auto top = cover_check(lat_top(Z), {zi(2), zi(3)});
    REQUIRE(top);
    CHECK(top->verify());

    CHECK_FALSE(cover_check(basic_open(zi(6)), {zi(2), zi(3)})); // 2 not in sqrt<6>

    auto six = cover_check(basic_open(zi(6)), {zi(6), zi(18)});
    REQUIRE(six);
    CHECK(six->verify());

    // empty cover of the bottom element
    auto empty = cover_check(lat_bottom(Z), {});
    REQUIRE(empty);
    CHECK(empty->verify());
    CHECK(cover_check(basic_open(zi(0)), {}).has_value());
}

TEST_CASE("compatibility of families over a cover") {
    auto cover = cover_check(lat_top(Z), {zi(2), zi(3)});
    REQUIRE(cover);
    LocRingPtr at2 = LocRing::at(zi(2)), at3 = LocRing::at(zi(3));

    // 14/2 and 21/3 both present the global 7
    auto good = check_compatible(*cover, {LocElem{at2, zi(14), 1}, LocElem{at3, zi(21), 1}});
    REQUIRE(good);
    CHECK(good->verify());

    // 1/2 and 1/3 disagree in Z[1/6]
    CHECK_FALSE(check_compatible(*cover, {LocElem{at2, zi(1), 1}, LocElem{at3, zi(1), 1}}));

    // constant families are always compatible
    CHECK_NOTHROW(constant_family(*cover, zi(123)));

    // section living in the wrong localization is a usage error
    CHECK_THROWS_AS(check_compatible(*cover, {LocElem{at3, zi(1), 0}, LocElem{at3, zi(1), 0}}),
                    UsageError);
}

TEST_CASE("compatibility is symmetric and representation-independent") {
    auto cover = cover_check(lat_top(Z), {zi(2), zi(3)});
    auto cover_swapped = cover_check(lat_top(Z), {zi(3), zi(2)});
    REQUIRE(cover);
    REQUIRE(cover_swapped);
    Rng rng(606);
    for (int i = 0; i < 100; ++i) {
        Elem r = random_elem(rng, Z);
        LocElem a{LocRing::at(zi(2)), mul(r, pow(zi(2), 2)), 2}; // r rewritten
        LocElem b{LocRing::at(zi(3)), r, 0};
        bool ab = check_compatible(*cover, {a, b}).has_value();
        bool ba = check_compatible(*cover_swapped, {b, a}).has_value();
        CHECK(ab);
        CHECK(ab == ba);

        // a loc_eq-preserving rewrite of one section never changes the answer
        LocElem b2{b.loc, mul(b.num, zi(3)), 1};
        CHECK(check_compatible(*cover, {a, b2}).has_value() == ab);
    }
}

TEST_CASE("restriction to the product localization") {
    LocHom h = restriction_to_product(zi(2), zi(3));
    CHECK(h.target->den == zi(6));
    CHECK(h.k == 1);
    CHECK(h.c == zi(3));
    LocElem moved = apply_hom(h, LocElem{LocRing::at(zi(2)), zi(1), 1});
    CHECK(moved.num == zi(3));
    CHECK(moved.exp == 1); // 1/2 -> 3/6
}
