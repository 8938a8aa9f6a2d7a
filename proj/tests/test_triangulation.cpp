#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "geobound/quotient.hpp"
#include "geobound/triangulation.hpp"

using namespace geobound;

namespace {

// Independent edge-class oracle: transitive closure of the identification
// relation by boolean matrix powering, no union-find involved.
std::vector<int> closure_valences(const Triangulation& t) {
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto idx = [&](int tet, int u, int v) {
        if (u > v)
            std::swap(u, v);
        for (int k = 0; k < 6; ++k)
            if (pairs[k][0] == u && pairs[k][1] == v)
                return tet * 6 + k;
        return -1;
    };
    int n = 6 * t.n;
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        rel[i][i] = true;
    for (int tet = 0; tet < t.n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.adj[tet][f];
            for (int k = 0; k < 6; ++k) {
                int u = pairs[k][0], v = pairs[k][1];
                if (u == f || v == f)
                    continue;
                int a = tet * 6 + k;
                int b = idx(g.tet, g.map[u], g.map[v]);
                rel[a][b] = rel[b][a] = true;
            }
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (rel[i][k])
                for (int j = 0; j < n; ++j)
                    if (rel[k][j])
                        rel[i][j] = true;

    std::vector<bool> seen(n, false);
    std::vector<int> valences;
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        int size = 0;
        for (int j = 0; j < n; ++j)
            if (rel[i][j]) {
                seen[j] = true;
                ++size;
            }
        valences.push_back(size);
    }
    std::sort(valences.begin(), valences.end());
    return valences;
}

Triangulation small_fold() {
    // One tetrahedron folded along the opposite edges {0,1} and {2,3}.
    return from_text("tets 1\nglue 1.0 1.1 023\nglue 1.2 1.3 012\n");
}

} // namespace

TEST_CASE("doubled tetrahedron") {
    Triangulation t = doubled_tetrahedron();

    auto orient = check_orientable(t);
    REQUIRE(orient.has_value());
    CHECK((*orient)[0] * (*orient)[1] == -1);    // copies carry opposite orientations

    auto classes = edge_classes(t);
    CHECK(valence_multiset(classes) == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(closure_valences(t) == std::vector<int>{2, 2, 2, 2, 2, 2});

    MTInvariants inv = mt_invariants(t);
    CHECK(inv.cusp_count == 6);
    CHECK(inv.octahedron_count == 4);
    for (const auto& dims : inv.torus_dims)
        CHECK(dims == std::array<int, 2>{2, 2});

    PresentationSummary p = presentation_summary(t);
    CHECK(p.genus == 3);
    CHECK(p.framed_components == 3);
    CHECK(p.framing == 0);
    CHECK(p.unframed_components == 6);
}

TEST_CASE("single-tetrahedron fold triangulation") {
    Triangulation t = small_fold();
    CHECK(check_orientable(t).has_value());
    CHECK(valence_multiset(edge_classes(t)) == std::vector<int>{1, 1, 4});
    CHECK(closure_valences(t) == std::vector<int>{1, 1, 4});

    PresentationSummary p = presentation_summary(t);
    CHECK(p.genus == 2);
    CHECK(p.framed_components == 2);
    CHECK(p.unframed_components == 3);

    MTInvariants inv = mt_invariants(t);
    CHECK(inv.cusp_count == 3);
    CHECK(inv.octahedron_count == 2);
    CHECK(inv.torus_dims == std::vector<std::array<int, 2>>{{1, 2}, {1, 2}, {4, 2}});
}

TEST_CASE("orientation-preserving self-gluing is non-orientable") {
    // Faces 0 and 1 glued by an even vertex bijection (a 3-cycle).
    Triangulation t;
    t.n = 1;
    t.adj.resize(1);
    t.adj[0][0] = Triangulation::Gluing{0, {1, 2, 0, 3}};
    t.adj[0][1] = Triangulation::Gluing{0, {2, 0, 1, 3}};
    t.adj[0][2] = Triangulation::Gluing{0, {0, 1, 3, 2}};
    t.adj[0][3] = Triangulation::Gluing{0, {0, 1, 3, 2}};
    t.check_valid();
    CHECK(!check_orientable(t).has_value());
}

TEST_CASE("an edge identified with itself reversed is non-manifold") {
    // Fold along {0,1} as usual, but reverse the second fold on {0,1}.
    Triangulation t;
    t.n = 1;
    t.adj.resize(1);
    t.adj[0][0] = Triangulation::Gluing{0, {1, 0, 2, 3}};
    t.adj[0][1] = Triangulation::Gluing{0, {1, 0, 2, 3}};
    t.adj[0][2] = Triangulation::Gluing{0, {1, 0, 3, 2}};    // sends (0,1) to (1,0)
    t.adj[0][3] = Triangulation::Gluing{0, {1, 0, 3, 2}};
    t.check_valid();
    CHECK_THROWS_AS(edge_classes(t), std::runtime_error);
    CHECK_THROWS_AS(mt_invariants(t), std::runtime_error);
}

TEST_CASE("extracted large triangulation and its invariants") {
    MirroredComplex S = build_mirrored();
    QuotientComplex R = build_R(S);
    const BoundaryComponent* large = nullptr;
    auto comps = boundary_components(R);
    for (const auto& c : comps)
        if (!c.is_small())
            large = &c;
    REQUIRE(large);

    Triangulation t = extract_triangulation(*large);
    CHECK(t.n == 4);
    CHECK(t.face_numbered);
    CHECK(check_orientable(t).has_value());
    CHECK(valence_multiset(edge_classes(t)) == std::vector<int>{2, 2, 2, 2, 4, 4, 4, 4});
    CHECK(closure_valences(t) == std::vector<int>{2, 2, 2, 2, 4, 4, 4, 4});

    MTInvariants inv = mt_invariants(t);
    CHECK(inv.cusp_count == 8);
    CHECK(inv.octahedron_count == 8);
    CHECK(inv.torus_dims ==
          std::vector<std::array<int, 2>>{{2, 2}, {2, 2}, {2, 2}, {2, 2},
                                          {4, 2}, {4, 2}, {4, 2}, {4, 2}});

    PresentationSummary p = presentation_summary(t);
    CHECK(p.genus == 5);
    CHECK(p.framed_components == 5);
    CHECK(p.unframed_components == 8);

    SUBCASE("face-numbered edges are exactly the valence-2 classes") {
        auto classes = edge_classes(t);
        auto small = small_cusp_edge_classes(t);
        CHECK(small.size() == 4);
        std::set<int> small_set(small.begin(), small.end());
        for (int i = 0; i < static_cast<int>(classes.size()); ++i)
            CHECK(classes[i].valence() == (small_set.count(i) ? 2 : 4));
    }

    SUBCASE("matches the reference encoding") {
        Triangulation ref = reference_large_triangulation();
        auto iso = isomorphic(t, ref);
        REQUIRE(iso.has_value());
        CHECK(verify_isomorphism(*iso, t, ref));
    }

    SUBCASE("numbering is lost through the text format") {
        Triangulation round = from_text(to_text(t));
        CHECK(!round.face_numbered);
        CHECK_THROWS_AS(small_cusp_edge_classes(round), std::runtime_error);
    }
}

TEST_CASE("isomorphism search") {
    Triangulation dbl = doubled_tetrahedron();
    Triangulation fold = small_fold();
    Triangulation ref = reference_large_triangulation();

    auto self_iso = isomorphic(ref, ref);
    REQUIRE(self_iso.has_value());
    CHECK(verify_isomorphism(*self_iso, ref, ref));

    CHECK(!isomorphic(ref, dbl).has_value());     // different sizes
    CHECK(!isomorphic(dbl, fold).has_value());    // different sizes
    CHECK(isomorphic(fold, small_fold()).has_value());

    // A doubled tetrahedron with relabeled vertices stays isomorphic.
    Triangulation relabeled;
    relabeled.n = 2;
    relabeled.adj.resize(2);
    const std::array<int, 4> rho{2, 3, 1, 0};
    std::array<int, 4> rho_inv{};
    for (int i = 0; i < 4; ++i)
        rho_inv[rho[i]] = i;
    for (int f = 0; f < 4; ++f) {
        relabeled.adj[0][f] = Triangulation::Gluing{1, rho};
        relabeled.adj[1][rho[f]] = Triangulation::Gluing{0, rho_inv};
    }
    relabeled.check_valid();
    auto iso = isomorphic(dbl, relabeled);
    REQUIRE(iso.has_value());
    CHECK(verify_isomorphism(*iso, dbl, relabeled));
}

TEST_CASE("validation rejects malformed triangulations") {
    Triangulation t;
    t.n = 1;
    t.adj.resize(1);
    CHECK_THROWS_AS(t.check_valid(), std::runtime_error);    // faces unglued

    // Non-involutive pairing.
    Triangulation u = doubled_tetrahedron();
    u.adj[1][0].map = {0, 2, 1, 3};
    CHECK_THROWS_AS(u.check_valid(), std::runtime_error);

    // A face glued to itself.
    Triangulation w;
    w.n = 1;
    w.adj.resize(1);
    for (int f = 0; f < 4; ++f)
        w.adj[0][f] = Triangulation::Gluing{0, {0, 1, 2, 3}};
    CHECK_THROWS_AS(w.check_valid(), std::runtime_error);
}
