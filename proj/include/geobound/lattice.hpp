#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "geobound/exact.hpp"
#include "geobound/label.hpp"
#include "geobound/signed_perm.hpp"

namespace geobound {

// Face lattice of a convex polytope whose facets are known analytically as
// hyperplane sections of the vertex set. Faces are canonically identified by
// their vertex sets, stored as bitmasks over the (sorted) vertex list; the
// lattice is the closure of the facet vertex sets under intersection, graded
// by exact affine rank.
struct FaceLattice {
    int facet_dim = 3;
    std::vector<Vec4> vertices;                     // sorted
    std::array<std::vector<uint32_t>, 4> faces;     // faces[k]: sorted masks
    std::vector<Label> facet_labels;                // parallel to faces[facet_dim]
    std::vector<FacetColor> facet_colors;

    const std::vector<uint32_t>& facets() const { return faces[facet_dim]; }

    std::array<int, 4> face_counts() const;

    int vertex_index(const Vec4& v) const;          // -1 when absent
    int face_index(int dim, uint32_t mask) const;   // -1 when absent
    int facet_index(const Label& l) const;          // -1 when absent

    std::vector<Vec4> face_vertices(uint32_t mask) const;

    // Facet indices whose vertex set contains the given face.
    std::vector<int> facets_containing(uint32_t mask) const;

    // Image of a vertex set under an isometry; throws if some image point is
    // not a vertex of the polytope.
    uint32_t map_mask(const SignedPerm& m, uint32_t mask) const;
};

// The 24-cell: convex hull of the permutations of (±1,±1,0,0). Facets lie on
// the 24 hyperplanes x_i = ±1 and ±x_1±x_2±x_3±x_4 = 2, labeled by the sign
// pattern of the (doubled) normal and colored green / red / blue: coordinate
// hyperplanes are green, sign hyperplanes are red for an even number of
// minuses and blue for an odd number. Throws a construction error naming the
// failed count if any structural check fails.
FaceLattice build_24cell();

// The octahedron: convex hull of (±1,0,0), (0,±1,0), (0,0,±1) (embedded in
// R^4 with last coordinate zero). Its 8 triangles lie on ±x_1±x_2±x_3 = 1
// and carry the red/blue checkerboard coloring by parity of minus signs.
FaceLattice build_octahedron();

// One-zero label of the triangle shared by two red/blue facets, when their
// labels differ in exactly one position; empty otherwise. Inputs must have
// no zero entries.
std::optional<Label> shared_2face(const Label& f1, const Label& f2);

// Vertex set of the triangle named by a one-zero label: the intersection of
// the two facets obtained by filling the zero with + and with -.
uint32_t stratum2_mask(const FaceLattice& cell, const Label& l);

// Vertex index of the cusp named by a two-zero label.
int cusp_vertex(const FaceLattice& cell, const Label& l);

} // namespace geobound
