#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace geobound {

// A set of tetrahedra with a complete set of simplicial face pairings.
// Tetrahedra have vertices 0..3; face f is the face opposite vertex f. Each
// pairing is stored on both sides as a full vertex bijection `map` with
// map[f] = glued face of the partner tetrahedron, and the two sides carry
// inverse bijections. Faces may be glued to faces of the same tetrahedron
// but never to themselves.
struct Triangulation {
    struct Gluing {
        int tet = -1;
        std::array<int, 4> map{0, 1, 2, 3};
    };

    int n = 0;
    std::vector<std::array<Gluing, 4>> adj;     // adj[tet][face]

    // Set when faces carry the zero-position numbering assigned during
    // boundary-component extraction (face index f = numbered face f+1).
    bool face_numbered = false;

    // Throws unless every one of the 4n faces is glued exactly once, no face
    // is glued to itself, and the pairings are involutive.
    void check_valid() const;
};

// Orientation assignment (+1/-1 per tetrahedron) under which every face
// pairing is orientation-reversing, or nullopt when none exists. A pairing
// with vertex bijection psi between tetrahedra oriented o and o' reverses
// orientation iff o * o' * sign(psi) = -1; the doubled tetrahedron (two
// copies glued by the identity on every face) is orientable under this
// convention and anchors it.
std::optional<std::vector<int>> check_orientable(const Triangulation& t);

struct EdgeSlot {
    int tet;
    int u, v;   // vertex pair, u < v

    auto operator<=>(const EdgeSlot&) const = default;
};

struct EdgeClass {
    std::vector<EdgeSlot> slots;    // sorted

    int valence() const { return static_cast<int>(slots.size()); }
    bool contains(int tet, int u, int v) const;
};

// Identification classes of the 6n edge slots under the face pairings, each
// verified to have an edge link closing into a single cycle of length equal
// to the valence. Throws "non-manifold edge" when a link splits into several
// cycles or an edge is identified with itself reversed.
std::vector<EdgeClass> edge_classes(const Triangulation& t);

std::vector<int> valence_multiset(const std::vector<EdgeClass>& classes);

// Invariants of the block manifold built from a triangulation: one cusp per
// edge class with a flat torus section of dimensions valence x 2, and a
// volume of 2n octahedra. Requires orientability and manifold edge links.
struct MTInvariants {
    int cusp_count = 0;
    std::vector<std::array<int, 2>> torus_dims;     // sorted (valence, 2)
    int octahedron_count = 0;
};

MTInvariants mt_invariants(const Triangulation& t);

// Surgery presentation summary: a genus-(n+1) handlebody, n+1 zero-framed
// link components, and one unframed component per edge class.
struct PresentationSummary {
    int genus = 0;
    int framed_components = 0;
    int framing = 0;
    int unframed_components = 0;
};

PresentationSummary presentation_summary(const Triangulation& t);

// Indices (into edge_classes) of the classes containing an edge adjacent to
// faces {0,1} or {2,3}. Requires the extraction face numbering; asserts that
// these are exactly the valence-2 classes. Throws when numbering is absent.
std::vector<int> small_cusp_edge_classes(const Triangulation& t);

struct Isomorphism {
    std::vector<int> tet_image;
    std::vector<std::array<int, 4>> vertex_maps;
};

// Backtracking search for a simplicial bijection commuting with the face
// pairings; returns a witness or nullopt.
std::optional<Isomorphism> isomorphic(const Triangulation& a, const Triangulation& b);

bool verify_isomorphism(const Isomorphism& iso, const Triangulation& a,
                        const Triangulation& b);

// Two tetrahedra glued by the identity on all four faces.
Triangulation doubled_tetrahedron();

// Hand-coded four-tetrahedron triangulation of the large boundary manifold:
// tetrahedra in a cycle t1 -F- t2 -G- t3 -F- t4 -G- t1, where F glues faces
// 0 and 1 swapping vertices 2,3 and G glues faces 2 and 3 swapping vertices
// 0,1. Used as an independent reference for the extracted triangulation.
Triangulation reference_large_triangulation();

// Text format, bit-exact:
//   tets <n>
//   glue <tet>.<face> <tet'>.<face'> <v0v1v2>
// with tetrahedra 1-indexed, faces/vertices 0-indexed, fields separated by
// single spaces, lines newline-terminated. <v0v1v2> lists the images of the
// source face's vertices in ascending source order. Each pairing appears
// once, with the lexicographically smaller (tet, face) side as source,
// sorted by source.
std::string to_text(const Triangulation& t);
Triangulation from_text(const std::string& text);    // throws on parse errors

} // namespace geobound
