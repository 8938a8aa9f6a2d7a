#include "geobound/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geobound {

namespace {

std::vector<Vec4> mask_vertices(const std::vector<Vec4>& verts, uint32_t mask) {
    std::vector<Vec4> out;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        if (mask & (1u << i))
            out.push_back(verts[i]);
    return out;
}

[[noreturn]] void construction_error(const std::string& what, int expected, int got) {
    std::ostringstream os;
    os << what << ": expected " << expected << ", got " << got;
    throw std::runtime_error(os.str());
}

// Closes the facet vertex sets under pairwise intersection and grades every
// face by exact affine rank.
FaceLattice build_from_facets(std::vector<Vec4> vertices, int facet_dim,
                              const std::vector<uint32_t>& facet_masks,
                              std::vector<Label> labels,
                              std::vector<FacetColor> colors) {
    FaceLattice lat;
    lat.facet_dim = facet_dim;
    lat.vertices = std::move(vertices);

    // Facets sorted by mask, with labels and colors carried along.
    std::vector<int> order(facet_masks.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return facet_masks[a] < facet_masks[b]; });
    for (int i : order) {
        lat.faces[facet_dim].push_back(facet_masks[i]);
        lat.facet_labels.push_back(labels[i]);
        lat.facet_colors.push_back(colors[i]);
    }

    std::vector<uint32_t> all(facet_masks.begin(), facet_masks.end());
    std::set<uint32_t> seen(all.begin(), all.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            uint32_t h = all[i] & all[j];
            if (h != 0 && seen.insert(h).second)
                all.push_back(h);
        }

    // Everything past the facets is a proper face of lower dimension.
    for (size_t k = facet_masks.size(); k < all.size(); ++k) {
        uint32_t mask = all[k];
        int rank = affine_rank(mask_vertices(lat.vertices, mask));
        if (rank >= facet_dim)
            construction_error("intersection face rank", facet_dim - 1, rank);
        lat.faces[rank].push_back(mask);
    }
    for (int d = 0; d < facet_dim; ++d)
        std::sort(lat.faces[d].begin(), lat.faces[d].end());

    for (uint32_t fm : lat.facets()) {
        int rank = affine_rank(mask_vertices(lat.vertices, fm));
        if (rank != facet_dim)
            construction_error("facet rank", facet_dim, rank);
    }
    return lat;
}

} // namespace

std::array<int, 4> FaceLattice::face_counts() const {
    std::array<int, 4> c{};
    for (int d = 0; d < 4; ++d)
        c[d] = static_cast<int>(faces[d].size());
    return c;
}

int FaceLattice::vertex_index(const Vec4& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
        return -1;
    return static_cast<int>(it - vertices.begin());
}

int FaceLattice::face_index(int dim, uint32_t mask) const {
    const auto& fs = faces[dim];
    auto it = std::lower_bound(fs.begin(), fs.end(), mask);
    if (it == fs.end() || *it != mask)
        return -1;
    return static_cast<int>(it - fs.begin());
}

int FaceLattice::facet_index(const Label& l) const {
    for (int i = 0; i < static_cast<int>(facet_labels.size()); ++i)
        if (facet_labels[i] == l)
            return i;
    return -1;
}

std::vector<Vec4> FaceLattice::face_vertices(uint32_t mask) const {
    return mask_vertices(vertices, mask);
}

std::vector<int> FaceLattice::facets_containing(uint32_t mask) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(facets().size()); ++i)
        if ((facets()[i] & mask) == mask)
            out.push_back(i);
    return out;
}

uint32_t FaceLattice::map_mask(const SignedPerm& m, uint32_t mask) const {
    uint32_t out = 0;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        if (!(mask & (1u << i)))
            continue;
        int j = vertex_index(m.apply(vertices[i]));
        if (j < 0)
            throw std::runtime_error("isometry does not preserve the vertex set");
        out |= 1u << j;
    }
    return out;
}

FaceLattice build_24cell() {
    std::vector<Vec4> verts;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {-1, 1})
                for (int sj : {-1, 1}) {
                    Vec4 v{0, 0, 0, 0};
                    v[i] = si;
                    v[j] = sj;
                    verts.push_back(v);
                }
    std::sort(verts.begin(), verts.end());
    if (verts.size() != 24)
        construction_error("24-cell vertex count", 24, static_cast<int>(verts.size()));

    // Facet normals, doubled: ±2 e_i (green) and (±1,±1,±1,±1) (red/blue).
    // Each facet is {v : <n,v> = 2}, and the normal's sign pattern is the
    // facet label.
    std::vector<Vec4> normals;
    for (int i = 0; i < 4; ++i)
        for (int s : {-1, 1}) {
            Vec4 n{0, 0, 0, 0};
            n[i] = 2 * s;
            normals.push_back(n);
        }
    for (int m = 0; m < 16; ++m) {
        Vec4 n;
        for (int i = 0; i < 4; ++i)
            n[i] = (m >> i) & 1 ? -1 : 1;
        normals.push_back(n);
    }

    std::vector<uint32_t> facet_masks;
    std::vector<Label> labels;
    std::vector<FacetColor> colors;
    for (const Vec4& n : normals) {
        uint32_t mask = 0;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            if (dot(n, verts[i]) == 2)
                mask |= 1u << i;
        if (std::popcount(mask) != 6)
            construction_error("facet vertex count", 6, std::popcount(mask));
        Label l;
        for (int i = 0; i < 4; ++i)
            l.e[i] = n[i] > 0 ? 1 : (n[i] < 0 ? -1 : 0);
        facet_masks.push_back(mask);
        labels.push_back(l);
        colors.push_back(label_color(l));
    }

    FaceLattice lat = build_from_facets(std::move(verts), 3, facet_masks,
                                        std::move(labels), std::move(colors));

    const std::array<int, 4> expect{24, 96, 96, 24};
    for (int d = 0; d < 4; ++d)
        if (lat.face_counts()[d] != expect[d])
            construction_error("24-cell face count (dim " + std::to_string(d) + ")",
                               expect[d], lat.face_counts()[d]);
    int euler = 0;
    for (int d = 0; d < 4; ++d)
        euler += (d % 2 ? -1 : 1) * lat.face_counts()[d];
    if (euler != 0)
        construction_error("24-cell boundary Euler characteristic", 0, euler);

    std::array<int, 3> per_color{};
    for (FacetColor c : lat.facet_colors)
        ++per_color[static_cast<int>(c)];
    for (int c = 0; c < 3; ++c)
        if (per_color[c] != 8)
            construction_error("facets of one color", 8, per_color[c]);
    return lat;
}

FaceLattice build_octahedron() {
    std::vector<Vec4> verts;
    for (int i = 0; i < 3; ++i)
        for (int s : {-1, 1}) {
            Vec4 v{0, 0, 0, 0};
            v[i] = s;
            verts.push_back(v);
        }
    std::sort(verts.begin(), verts.end());

    std::vector<uint32_t> facet_masks;
    std::vector<Label> labels;
    std::vector<FacetColor> colors;
    for (int m = 0; m < 8; ++m) {
        Vec4 n{0, 0, 0, 0};
        for (int i = 0; i < 3; ++i)
            n[i] = (m >> i) & 1 ? -1 : 1;
        uint32_t mask = 0;
        for (int i = 0; i < static_cast<int>(verts.size()); ++i)
            if (dot(n, verts[i]) == 1)
                mask |= 1u << i;
        if (std::popcount(mask) != 3)
            construction_error("octahedron face vertex count", 3, std::popcount(mask));
        Label l;
        for (int i = 0; i < 4; ++i)
            l.e[i] = n[i];
        facet_masks.push_back(mask);
        labels.push_back(l);
        colors.push_back(l.minus_count() % 2 == 0 ? FacetColor::Red : FacetColor::Blue);
    }

    FaceLattice lat = build_from_facets(std::move(verts), 2, facet_masks,
                                        std::move(labels), std::move(colors));
    const std::array<int, 3> expect{6, 12, 8};
    for (int d = 0; d < 3; ++d)
        if (lat.face_counts()[d] != expect[d])
            construction_error("octahedron face count (dim " + std::to_string(d) + ")",
                               expect[d], lat.face_counts()[d]);
    return lat;
}

std::optional<Label> shared_2face(const Label& f1, const Label& f2) {
    if (f1.zero_count() != 0 || f2.zero_count() != 0)
        throw std::invalid_argument("shared_2face requires red/blue facet labels");
    int differ = -1;
    for (int i = 0; i < 4; ++i)
        if (f1.e[i] != f2.e[i]) {
            if (differ >= 0)
                return std::nullopt;
            differ = i;
        }
    if (differ < 0)
        return std::nullopt;
    return f1.with_entry(differ, 0);
}

uint32_t stratum2_mask(const FaceLattice& cell, const Label& l) {
    int p = l.zero_position();
    int fp = cell.facet_index(l.with_entry(p, 1));
    int fm = cell.facet_index(l.with_entry(p, -1));
    if (fp < 0 || fm < 0)
        throw std::runtime_error("stratum label " + l.str() + " has no bounding facets");
    uint32_t mask = cell.facets()[fp] & cell.facets()[fm];
    if (cell.face_index(2, mask) < 0)
        throw std::runtime_error("stratum label " + l.str() + " is not a 2-face");
    return mask;
}

int cusp_vertex(const FaceLattice& cell, const Label& l) {
    if (l.zero_count() != 2)
        throw std::invalid_argument("cusp label " + l.str() + " must have two zeros");
    Vec4 v{l.e[0], l.e[1], l.e[2], l.e[3]};
    int idx = cell.vertex_index(v);
    if (idx < 0)
        throw std::runtime_error("cusp label " + l.str() + " names no vertex");
    return idx;
}

} // namespace geobound
