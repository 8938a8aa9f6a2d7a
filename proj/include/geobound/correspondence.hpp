#pragma once

#include <map>
#include <utility>

#include "geobound/lattice.hpp"

namespace geobound {

// Combinatorial equivalence between the strata of a tetrahedron and of the
// octahedron obtained by truncating it at the edge midpoints:
//   vertices of T <-> red faces of O,
//   edges of T    <-> vertices of O,
//   faces of T    <-> blue faces of O.
// Tetrahedron vertices are 0..3; face k is the face opposite vertex k.
struct BlockCorrespondence {
    FaceLattice octa;
    std::array<int, 4> red_face_of_vertex{};               // octa face index
    std::map<std::pair<int, int>, int> vertex_of_edge;     // {i<j} -> octa vertex
    std::array<int, 4> blue_face_of_face{};                // octa face index

    // True iff the tetrahedron edge {i,j} lies on tetrahedron face k.
    static bool tetra_edge_on_face(int i, int j, int k) { return k != i && k != j; }
};

// Builds the correspondence tables and verifies that they are bijections
// consistent with incidence. Throws on any failure.
BlockCorrespondence octahedron_tetrahedron_correspondence();

// Order of the common symmetry group: enumerates the color-preserving
// combinatorial symmetries of the octahedron, matches them one-to-one with
// the 24 vertex permutations of the tetrahedron through the correspondence
// tables, and returns the common order. Throws if the matching fails.
int block_symmetry_order();

} // namespace geobound
