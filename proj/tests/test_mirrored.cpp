#include <doctest.h>

#include <algorithm>

#include "geobound/mirrored.hpp"

using namespace geobound;

TEST_CASE("mirrored complex stratum counts") {
    MirroredComplex S = build_mirrored();
    CHECK(S.strata3.size() == 16);
    CHECK(S.strata2.size() == 32);
    CHECK(S.cusps.size() == 24);

    for (const Label& s : S.strata3) {
        CHECK(S.strata2_of(s).size() == 4);
        CHECK(S.cusps_of(s).size() == 6);
    }
    for (const Label& v : S.cusps)
        CHECK(S.strata3_of_cusp(v).size() == 4);
}

TEST_CASE("label incidence agrees with lattice incidence") {
    MirroredComplex S = build_mirrored();
    const FaceLattice& lat = S.lattice();
    for (const Label& s : S.strata3) {
        uint32_t fmask = lat.facets()[lat.facet_index(s)];
        for (const Label& v : S.cusps) {
            bool by_label = v.refines(s);
            bool by_mask = (fmask >> cusp_vertex(lat, v)) & 1u;
            CHECK(by_label == by_mask);
        }
        for (const Label& t : S.strata2) {
            uint32_t tmask = stratum2_mask(lat, t);
            CHECK(t.refines(s) == ((tmask & fmask) == tmask));
        }
    }
}

TEST_CASE("cusp square of (+,+,0,0)") {
    MirroredComplex S = build_mirrored();
    CuspSquare sq = cusp_square(S, Label{{1, 1, 0, 0}});
    CHECK(sq.sides == std::array<Label, 4>{Label{{1, 1, 1, 1}}, Label{{1, 1, 1, -1}},
                                           Label{{1, 1, -1, -1}}, Label{{1, 1, -1, 1}}});
    CHECK(sq.side_colors == std::array<FacetColor, 4>{FacetColor::Red, FacetColor::Blue,
                                                      FacetColor::Red, FacetColor::Blue});
    CHECK(sq.corners == std::array<Label, 4>{Label{{1, 1, 1, 0}}, Label{{1, 1, 0, -1}},
                                             Label{{1, 1, -1, 0}}, Label{{1, 1, 0, 1}}});
}

TEST_CASE("cusp square blue sides of (+,-,0,0)") {
    MirroredComplex S = build_mirrored();
    CuspSquare sq = cusp_square(S, Label{{1, -1, 0, 0}});
    std::vector<Label> blue;
    for (int k = 0; k < 4; ++k)
        if (sq.side_colors[k] == FacetColor::Blue)
            blue.push_back(sq.sides[k]);
    std::sort(blue.begin(), blue.end());
    CHECK(blue == std::vector<Label>{Label{{1, -1, -1, -1}}, Label{{1, -1, 1, 1}}});
}

TEST_CASE("every cusp square alternates two red and two blue sides") {
    MirroredComplex S = build_mirrored();
    for (const Label& v : S.cusps) {
        CuspSquare sq = cusp_square(S, v);
        int red = 0;
        for (int k = 0; k < 4; ++k) {
            red += sq.side_colors[k] == FacetColor::Red;
            CHECK(sq.side_colors[k] != sq.side_colors[(k + 1) % 4]);
        }
        CHECK(red == 2);
    }
    CHECK_THROWS(cusp_square(S, Label{{1, 1, 1, 0}}));
}

TEST_CASE("cell-level quotient of the mirrored complex") {
    MirroredComplex S = build_mirrored();
    CHECK(S.cells.quotient_count(0) == 24);     // one cusp per vertex
    CHECK(S.cells.quotient_count(1) == 96);     // every edge lies on a green facet
    CHECK(S.cells.quotient_count(2) == 128);    // 64 mirrored + 64 red-blue slots
    CHECK(S.cells.quotient_count(3) == 40);     // 8 green classes + 32 boundary slots
    CHECK(S.cells.top_cell_count() == 2);
    CHECK(S.cells.boundary_facet_slots().size() == 32);

    // Two 4-balls glued along 8 disjoint 3-balls: chi = 2 - 8.
    CHECK(S.cells.euler_excluding_vertices() == -6);
}
