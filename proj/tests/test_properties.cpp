#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "geobound/checks.hpp"
#include "geobound/triangulation.hpp"

using namespace geobound;

namespace {

int perm4_sign(const std::array<int, 4>& p) {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

Triangulation random_triangulation(std::mt19937& rng, int n) {
    std::vector<std::pair<int, int>> faces;
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            faces.push_back({t, f});
    std::shuffle(faces.begin(), faces.end(), rng);

    Triangulation t;
    t.n = n;
    t.adj.resize(n);
    for (size_t i = 0; i < faces.size(); i += 2) {
        auto [t1, f1] = faces[i];
        auto [t2, f2] = faces[i + 1];
        std::array<int, 3> src{}, dst{};
        int a = 0, b = 0;
        for (int v = 0; v < 4; ++v) {
            if (v != f1)
                src[a++] = v;
            if (v != f2)
                dst[b++] = v;
        }
        std::shuffle(dst.begin(), dst.end(), rng);
        std::array<int, 4> map{};
        map[f1] = f2;
        for (int k = 0; k < 3; ++k)
            map[src[k]] = dst[k];
        std::array<int, 4> inv{};
        for (int v = 0; v < 4; ++v)
            inv[map[v]] = v;
        t.adj[t1][f1] = Triangulation::Gluing{t2, map};
        t.adj[t2][f2] = Triangulation::Gluing{t1, inv};
    }
    return t;
}

} // namespace

TEST_CASE("randomized triangulations: valences, links, orientation, isomorphism") {
    std::mt19937 rng(20260809);
    int manifold = 0, nonmanifold = 0, orientable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Triangulation t = random_triangulation(rng, n);
        t.check_valid();

        PresentationSummary ps = presentation_summary(t);
        CHECK(ps.genus == n + 1);
        CHECK(ps.framed_components - 1 == n);
        CHECK(ps.framing == 0);

        try {
            auto classes = edge_classes(t);
            int total = 0;
            for (const auto& c : classes)
                total += c.valence();
            CHECK(total == 6 * n);
            CHECK(ps.unframed_components == static_cast<int>(classes.size()));
            ++manifold;
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).rfind("non-manifold edge", 0) == 0);
            ++nonmanifold;
        }

        auto orient = check_orientable(t);
        if (orient) {
            ++orientable;
            for (int tet = 0; tet < t.n; ++tet)
                for (int f = 0; f < 4; ++f) {
                    const auto& g = t.adj[tet][f];
                    CHECK((*orient)[tet] * (*orient)[g.tet] * perm4_sign(g.map) == -1);
                }
        }

        auto self_iso = isomorphic(t, t);
        REQUIRE(self_iso.has_value());
        CHECK(verify_isomorphism(*self_iso, t, t));

        // Witnesses invert: the inverse bijection is an isomorphism back.
        Isomorphism inv;
        inv.tet_image.assign(n, -1);
        inv.vertex_maps.assign(n, {0, 1, 2, 3});
        for (int tet = 0; tet < n; ++tet) {
            inv.tet_image[self_iso->tet_image[tet]] = tet;
            for (int v = 0; v < 4; ++v)
                inv.vertex_maps[self_iso->tet_image[tet]][self_iso->vertex_maps[tet][v]] = v;
        }
        CHECK(verify_isomorphism(inv, t, t));
    }
    // The sample must exercise both verdicts.
    CHECK(manifold > 0);
    CHECK(nonmanifold > 0);
    CHECK(orientable > 0);
}

TEST_CASE("pipeline reports are deterministic and all-green") {
    Report a = run_pipeline();
    Report b = run_pipeline();
    CHECK(a.all_pass());
    CHECK(a.checks.size() == 14);
    CHECK(a.fingerprint == b.fingerprint);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a) == render_json(b));

    // The report carries the volume lines verbatim.
    CHECK(render_text(a).find("M = 8 * v_O ~ 29.3109") != std::string::npos);
    CHECK(render_text(a).find("X = 2 * v_24 ~ 26.3189") != std::string::npos);
}

TEST_CASE("fault injection: a corrupted pairing rule fails the 2-strata check") {
    PipelineOptions options;
    options.corrupt_pairing = true;
    Report r = run_pipeline(options);
    CHECK(!r.all_pass());
    bool found = false;
    for (const CheckResult& c : r.checks)
        if (c.id == "r-2strata-killed") {
            found = true;
            CHECK(!c.pass);
        }
    CHECK(found);
}

TEST_CASE("check listing is stable") {
    auto checks = list_checks();
    REQUIRE(checks.size() == 14);
    CHECK(checks.front().first == "cell24-face-vector");
    CHECK(checks.back().first == "report-determinism");
}
