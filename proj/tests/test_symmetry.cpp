#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromasym/symmetry.hpp"

using namespace chromasym;
using enum GroupElement;

TEST_CASE("composition table is the Klein four-group") {
    CHECK(compose(RefH, RefV) == Rot);
    CHECK(compose(RefV, RefH) == Rot);
    CHECK(compose(Rot, Rot) == E);
    for (GroupElement g : all_elements()) {
        CHECK(compose(E, g) == g);
        CHECK(compose(g, E) == g);
        CHECK(compose(g, g) == E);  // self-inverse
    }
    for (GroupElement a : all_elements())
        for (GroupElement b : all_elements()) {
            CHECK(compose(a, b) == compose(b, a));
            for (GroupElement c : all_elements())
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
}

TEST_CASE("coordinate action basics") {
    const Dims d{4, 4};
    CHECK(map_coord(Rot, {0, 0}, d) == PixelCoord{3, 3});
    CHECK(map_coord(RefH, {1, 0}, d) == PixelCoord{1, 3});
    CHECK(map_coord(RefV, {1, 0}, d) == PixelCoord{2, 0});
    CHECK(map_coord(E, {2, 1}, d) == PixelCoord{2, 1});
    CHECK_THROWS_AS(map_coord(Rot, {0, 0}, Dims{5, 4}), std::invalid_argument);
}

TEST_CASE("action is an involution and a homomorphism on a 6x8 grid") {
    const Dims d{6, 8};
    for (int y = 0; y < d.height; ++y)
        for (int x = 0; x < d.width; ++x) {
            const PixelCoord p{x, y};
            for (GroupElement g : all_elements())
                CHECK(map_coord(g, map_coord(g, p, d), d) == p);
            for (GroupElement a : all_elements())
                for (GroupElement b : all_elements())
                    CHECK(map_coord(compose(a, b), p, d) ==
                          map_coord(a, map_coord(b, p, d), d));
        }
}

TEST_CASE("section assignment") {
    const Dims d{4, 4};
    CHECK(section_of({0, 0}, d) == Section::NW);
    CHECK(section_of({2, 0}, d) == Section::NE);
    CHECK(section_of({0, 2}, d) == Section::SW);
    CHECK(section_of({3, 3}, d) == Section::SE);
    CHECK_THROWS_AS(section_of({0, 0}, Dims{4, 6 + 1}), std::invalid_argument);
}

TEST_CASE("section action matches the coordinate action on 8x8") {
    const Dims d{8, 8};
    for (int y = 0; y < d.height; ++y)
        for (int x = 0; x < d.width; ++x) {
            const PixelCoord p{x, y};
            for (GroupElement g : all_elements())
                CHECK(section_of(map_coord(g, p, d), d) ==
                      section_apply(g, section_of(p, d)));
        }
    // Rot swaps diagonally, RefH north/south, RefV east/west
    CHECK(section_apply(Rot, Section::NW) == Section::SE);
    CHECK(section_apply(Rot, Section::NE) == Section::SW);
    CHECK(section_apply(RefH, Section::NW) == Section::SW);
    CHECK(section_apply(RefH, Section::NE) == Section::SE);
    CHECK(section_apply(RefV, Section::NW) == Section::NE);
    CHECK(section_apply(RefV, Section::SW) == Section::SE);
}

TEST_CASE("element names") {
    CHECK(parse_element("rot") == Rot);
    CHECK(parse_element("REFH") == RefH);
    CHECK(parse_element("RefV") == RefV);
    CHECK(parse_element("e") == E);
    CHECK(!parse_element("r0t").has_value());
    for (GroupElement g : all_elements())
        CHECK(parse_element(element_name(g)) == g);
}
