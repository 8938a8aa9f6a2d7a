#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "geobound/correspondence.hpp"
#include "geobound/lattice.hpp"

using namespace geobound;

TEST_CASE("24-cell face vector and colors") {
    FaceLattice lat = build_24cell();
    CHECK(lat.face_counts() == std::array<int, 4>{24, 96, 96, 24});

    int red = 0, green = 0, blue = 0;
    for (FacetColor c : lat.facet_colors) {
        red += c == FacetColor::Red;
        green += c == FacetColor::Green;
        blue += c == FacetColor::Blue;
    }
    CHECK(red == 8);
    CHECK(green == 8);
    CHECK(blue == 8);

    CHECK(lat.facet_colors[lat.facet_index(Label{{1, 1, 1, 1}})] == FacetColor::Red);
    CHECK(lat.facet_colors[lat.facet_index(Label{{1, 1, 1, -1}})] == FacetColor::Blue);
    CHECK(lat.facet_colors[lat.facet_index(Label{{1, 0, 0, 0}})] == FacetColor::Green);
}

TEST_CASE("vertex (1,1,0,0) lies on exactly its six expected facets") {
    FaceLattice lat = build_24cell();
    int v = lat.vertex_index(Vec4{1, 1, 0, 0});
    REQUIRE(v >= 0);

    std::set<Label> found;
    for (size_t f = 0; f < lat.facets().size(); ++f)
        if ((lat.facets()[f] >> v) & 1u)
            found.insert(lat.facet_labels[f]);

    std::set<Label> expected{Label{{1, 0, 0, 0}},  Label{{0, 1, 0, 0}},
                             Label{{1, 1, 1, 1}},  Label{{1, 1, -1, -1}},
                             Label{{1, 1, 1, -1}}, Label{{1, 1, -1, 1}}};
    CHECK(found == expected);
}

TEST_CASE("every vertex lies on six facets, two of each color") {
    FaceLattice lat = build_24cell();
    for (int v = 0; v < 24; ++v) {
        int red = 0, green = 0, blue = 0;
        for (size_t f = 0; f < lat.facets().size(); ++f)
            if ((lat.facets()[f] >> v) & 1u) {
                red += lat.facet_colors[f] == FacetColor::Red;
                green += lat.facet_colors[f] == FacetColor::Green;
                blue += lat.facet_colors[f] == FacetColor::Blue;
            }
        CHECK(red == 2);
        CHECK(green == 2);
        CHECK(blue == 2);
    }
}

TEST_CASE("every 2-face separates two facets of different colors") {
    FaceLattice lat = build_24cell();
    for (uint32_t tri : lat.faces[2]) {
        auto fs = lat.facets_containing(tri);
        REQUIRE(fs.size() == 2);
        CHECK(lat.facet_colors[fs[0]] != lat.facet_colors[fs[1]]);
    }
}

TEST_CASE("within each red/blue facet the opposite-facet colors checkerboard") {
    FaceLattice lat = build_24cell();
    for (size_t f = 0; f < lat.facets().size(); ++f) {
        if (lat.facet_colors[f] == FacetColor::Green)
            continue;
        uint32_t fmask = lat.facets()[f];

        // The eight triangles of the octahedral facet, keyed by the color of
        // the facet on their other side: four green and four of the other
        // red/blue color.
        std::map<uint32_t, FacetColor> opposite;
        for (uint32_t tri : lat.faces[2]) {
            if ((tri & fmask) != tri)
                continue;
            for (int g : lat.facets_containing(tri))
                if (static_cast<size_t>(g) != f)
                    opposite[tri] = lat.facet_colors[g];
        }
        REQUIRE(opposite.size() == 8);
        int green = 0;
        for (auto& [tri, color] : opposite) {
            CHECK(color != lat.facet_colors[f]);
            green += color == FacetColor::Green;
        }
        CHECK(green == 4);

        // Adjacent triangles across an edge of the facet alternate.
        for (uint32_t e : lat.faces[1]) {
            if ((e & fmask) != e)
                continue;
            std::vector<uint32_t> at_edge;
            for (auto& [tri, color] : opposite)
                if ((e & tri) == e)
                    at_edge.push_back(tri);
            REQUIRE(at_edge.size() == 2);
            CHECK(opposite[at_edge[0]] != opposite[at_edge[1]]);
        }
    }
}

TEST_CASE("the lattice is closed under intersection of faces") {
    FaceLattice lat = build_24cell();
    std::set<uint32_t> all;
    for (int d = 0; d < 4; ++d)
        all.insert(lat.faces[d].begin(), lat.faces[d].end());
    for (uint32_t a : lat.facets())
        for (uint32_t b : all) {
            uint32_t h = a & b;
            if (h != 0)
                CHECK(all.count(h) == 1);
        }
}

TEST_CASE("octahedron lattice, checkerboard coloring") {
    FaceLattice octa = build_octahedron();
    CHECK(octa.face_counts()[0] == 6);
    CHECK(octa.face_counts()[1] == 12);
    CHECK(octa.face_counts()[2] == 8);

    // Independent counts: adjacent vertices are at squared distance 2 and
    // the triangles are the pairwise-adjacent triples.
    int adj_pairs = 0, triples = 0;
    auto d2 = [&](int a, int b) {
        int s = 0;
        for (int c = 0; c < 4; ++c)
            s += (octa.vertices[a][c] - octa.vertices[b][c]) *
                 (octa.vertices[a][c] - octa.vertices[b][c]);
        return s;
    };
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            if (d2(a, b) == 2)
                ++adj_pairs;
            for (int c = b + 1; c < 6; ++c)
                if (d2(a, b) == 2 && d2(a, c) == 2 && d2(b, c) == 2)
                    ++triples;
        }
    CHECK(adj_pairs == 12);
    CHECK(triples == 8);

    int red = 0;
    for (FacetColor c : octa.facet_colors)
        red += c == FacetColor::Red;
    CHECK(red == 4);

    for (uint32_t e : octa.faces[1]) {
        auto fs = octa.facets_containing(e);
        REQUIRE(fs.size() == 2);
        CHECK(octa.facet_colors[fs[0]] != octa.facet_colors[fs[1]]);
    }
}

TEST_CASE("shared 2-face of two facet labels") {
    CHECK(shared_2face(Label{{1, 1, 1, 1}}, Label{{1, 1, 1, -1}}) == Label{{1, 1, 1, 0}});
    CHECK(!shared_2face(Label{{1, 1, 1, 1}}, Label{{1, 1, -1, -1}}));
    CHECK(shared_2face(Label{{1, -1, 1, -1}}, Label{{1, -1, -1, -1}}) ==
          Label{{1, -1, 0, -1}});
    CHECK_THROWS(shared_2face(Label{{1, 1, 1, 0}}, Label{{1, 1, 1, 1}}));

    // The named triangle is the actual facet intersection in the lattice.
    FaceLattice lat = build_24cell();
    for (size_t i = 0; i < lat.facets().size(); ++i)
        for (size_t j = i + 1; j < lat.facets().size(); ++j) {
            if (lat.facet_colors[i] == FacetColor::Green ||
                lat.facet_colors[j] == FacetColor::Green)
                continue;
            auto l = shared_2face(lat.facet_labels[i], lat.facet_labels[j]);
            uint32_t common = lat.facets()[i] & lat.facets()[j];
            if (l) {
                CHECK(std::popcount(common) == 3);
                CHECK(stratum2_mask(lat, *l) == common);
            } else {
                CHECK(std::popcount(common) < 3);
            }
        }
}

TEST_CASE("facet labels are equivariant under the symmetry group") {
    FaceLattice lat = build_24cell();
    for (const SignedPerm& m : coordinate_symmetry_group())
        for (size_t f = 0; f < lat.facets().size(); ++f) {
            int fi = lat.face_index(3, lat.map_mask(m, lat.facets()[f]));
            REQUIRE(fi >= 0);    // symmetries permute the facets
            CHECK(lat.facet_labels[fi] == m.apply(lat.facet_labels[f]));
        }
}

TEST_CASE("symmetries preserve the color partition") {
    FaceLattice lat = build_24cell();
    for (const SignedPerm& m : coordinate_symmetry_group()) {
        // Green goes to green; red/blue are preserved or swapped uniformly.
        std::set<std::pair<int, int>> transitions;
        for (size_t f = 0; f < lat.facets().size(); ++f) {
            int fi = lat.face_index(3, lat.map_mask(m, lat.facets()[f]));
            transitions.insert({static_cast<int>(lat.facet_colors[f]),
                                static_cast<int>(lat.facet_colors[fi])});
        }
        for (auto [from, to] : transitions)
            if (from == static_cast<int>(FacetColor::Green))
                CHECK(to == from);
        bool red_to_red = transitions.count({static_cast<int>(FacetColor::Red),
                                             static_cast<int>(FacetColor::Red)}) > 0;
        bool red_to_blue = transitions.count({static_cast<int>(FacetColor::Red),
                                              static_cast<int>(FacetColor::Blue)}) > 0;
        CHECK(red_to_red != red_to_blue);
    }
}

TEST_CASE("octahedron-tetrahedron correspondence") {
    BlockCorrespondence bc = octahedron_tetrahedron_correspondence();
    CHECK(bc.vertex_of_edge.size() == 6);

    std::set<int> reds(bc.red_face_of_vertex.begin(), bc.red_face_of_vertex.end());
    std::set<int> blues(bc.blue_face_of_face.begin(), bc.blue_face_of_face.end());
    CHECK(reds.size() == 4);
    CHECK(blues.size() == 4);
    for (int f : reds)
        CHECK(bc.octa.facet_colors[f] == FacetColor::Red);
    for (int f : blues)
        CHECK(bc.octa.facet_colors[f] == FacetColor::Blue);

    // Incidence preservation over all 6 x 4 edge/face pairs.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                bool on_tetra = BlockCorrespondence::tetra_edge_on_face(i, j, k);
                uint32_t blue = bc.octa.facets()[bc.blue_face_of_face[k]];
                bool on_octa = (blue >> bc.vertex_of_edge.at({i, j})) & 1u;
                CHECK(on_tetra == on_octa);
            }
}

TEST_CASE("block symmetry group has order 24") {
    CHECK(block_symmetry_order() == 24);

    // Independent recount: vertex bijections of the octahedron preserving
    // the face set number 48, of which 24 preserve the coloring.
    FaceLattice octa = build_octahedron();
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    int symmetries = 0, color_preserving = 0;
    do {
        bool ok = true, colors = true;
        for (size_t f = 0; f < octa.facets().size() && ok; ++f) {
            uint32_t img = 0;
            for (int v = 0; v < 6; ++v)
                if (octa.facets()[f] & (1u << v))
                    img |= 1u << p[v];
            int fi = octa.face_index(2, img);
            if (fi < 0)
                ok = false;
            else
                colors = colors && octa.facet_colors[fi] == octa.facet_colors[f];
        }
        symmetries += ok;
        color_preserving += ok && colors;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(symmetries == 48);
    CHECK(color_preserving == 24);
}
