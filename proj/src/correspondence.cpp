#include "geobound/correspondence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geobound {

namespace {

// Tetrahedron with vertices at alternating cube corners; the midpoint of
// edge {i,j} is then a vertex of the octahedron of build_octahedron().
const std::array<Vec4, 4> kTetra = {Vec4{1, 1, 1, 0}, Vec4{1, -1, -1, 0},
                                    Vec4{-1, 1, -1, 0}, Vec4{-1, -1, 1, 0}};

Vec4 edge_midpoint(int i, int j) {
    Vec4 m;
    for (int c = 0; c < 4; ++c)
        m[c] = (kTetra[i][c] + kTetra[j][c]) / 2;
    return m;
}

// All vertex bijections of the octahedron preserving the face set.
std::vector<std::array<int, 6>> octa_symmetries(const FaceLattice& octa) {
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    std::vector<std::array<int, 6>> out;
    std::sort(p.begin(), p.end());
    do {
        bool ok = true;
        for (uint32_t face : octa.facets()) {
            uint32_t img = 0;
            for (int v = 0; v < 6; ++v)
                if (face & (1u << v))
                    img |= 1u << p[v];
            if (octa.face_index(2, img) < 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

uint32_t face_image(const std::array<int, 6>& p, uint32_t face) {
    uint32_t img = 0;
    for (int v = 0; v < 6; ++v)
        if (face & (1u << v))
            img |= 1u << p[v];
    return img;
}

} // namespace

BlockCorrespondence octahedron_tetrahedron_correspondence() {
    BlockCorrespondence bc;
    bc.octa = build_octahedron();

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            int idx = bc.octa.vertex_index(edge_midpoint(i, j));
            if (idx < 0)
                throw std::runtime_error("tetrahedron edge midpoint is not an octahedron vertex");
            bc.vertex_of_edge[{i, j}] = idx;
        }

    // Truncating at vertex i exposes the triangle of the midpoints of the
    // three edges at i; it must be red.
    for (int i = 0; i < 4; ++i) {
        uint32_t mask = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) {
                auto key = std::minmax(i, j);
                mask |= 1u << bc.vertex_of_edge.at({key.first, key.second});
            }
        int f = bc.octa.face_index(2, mask);
        if (f < 0 || bc.octa.facet_colors[f] != FacetColor::Red)
            throw std::runtime_error("vertex truncation face missing or not red");
        bc.red_face_of_vertex[i] = f;
    }

    // Tetrahedron face k (opposite vertex k) keeps the triangle of the
    // midpoints of its three edges; it must be blue.
    for (int k = 0; k < 4; ++k) {
        uint32_t mask = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (i != k && j != k)
                    mask |= 1u << bc.vertex_of_edge.at({i, j});
        int f = bc.octa.face_index(2, mask);
        if (f < 0 || bc.octa.facet_colors[f] != FacetColor::Blue)
            throw std::runtime_error("tetrahedron face triangle missing or not blue");
        bc.blue_face_of_face[k] = f;
    }

    // Bijectivity of each table.
    std::set<int> reds(bc.red_face_of_vertex.begin(), bc.red_face_of_vertex.end());
    std::set<int> blues(bc.blue_face_of_face.begin(), bc.blue_face_of_face.end());
    std::set<int> mids;
    for (auto& [e, v] : bc.vertex_of_edge)
        mids.insert(v);
    if (reds.size() != 4 || blues.size() != 4 || mids.size() != 6)
        throw std::runtime_error("correspondence tables are not bijections");

    // Incidence: edge {i,j} on face k iff the midpoint vertex lies on the
    // blue face of k.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                bool tet_side = BlockCorrespondence::tetra_edge_on_face(i, j, k);
                uint32_t blue = bc.octa.facets()[bc.blue_face_of_face[k]];
                bool octa_side = (blue >> bc.vertex_of_edge.at({i, j})) & 1u;
                if (tet_side != octa_side)
                    throw std::runtime_error("correspondence breaks incidence");
            }
    return bc;
}

int block_symmetry_order() {
    BlockCorrespondence bc = octahedron_tetrahedron_correspondence();
    const FaceLattice& octa = bc.octa;

    auto all_syms = octa_symmetries(octa);
    std::vector<std::array<int, 6>> color_preserving;
    for (const auto& p : all_syms) {
        bool ok = true;
        for (int f = 0; f < 8 && ok; ++f) {
            int fi = octa.face_index(2, face_image(p, octa.facets()[f]));
            ok = octa.facet_colors[fi] == octa.facet_colors[f];
        }
        if (ok)
            color_preserving.push_back(p);
    }
    if (all_syms.size() != 48)
        throw std::runtime_error("octahedron symmetry count is not 48");

    // Each vertex permutation of the tetrahedron induces, via the edge
    // table, a vertex bijection of the octahedron. Collect the images.
    std::set<std::array<int, 6>> induced;
    std::array<int, 4> sigma{0, 1, 2, 3};
    do {
        std::array<int, 6> p{};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                auto key = std::minmax(sigma[i], sigma[j]);
                p[bc.vertex_of_edge.at({i, j})] =
                    bc.vertex_of_edge.at({key.first, key.second});
            }
        induced.insert(p);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::set<std::array<int, 6>> colorset(color_preserving.begin(), color_preserving.end());
    if (induced != colorset)
        throw std::runtime_error(
            "tetrahedron symmetries do not match the color-preserving octahedron symmetries");
    return static_cast<int>(induced.size());
}

} // namespace geobound
