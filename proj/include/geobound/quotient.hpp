#pragma once

#include <map>
#include <string>
#include <vector>

#include "geobound/cells.hpp"
#include "geobound/mirrored.hpp"
#include "geobound/triangulation.hpp"

namespace geobound {

// A facet-pairing scheme entry: the isometry `map` carries the 3-stratum
// labeled `src` onto the one labeled `dst`, applied within each copy.
struct PairingRule {
    Label src;
    Label dst;
    SignedPerm map;
};

// Blue pairings defining the quotient R:
//   ±(+,+,-,+) -> ±(+,+,+,-) via F,
//   ±(+,-,+,+) -> ±(-,+,+,+) via G.
std::vector<PairingRule> standard_blue_rules();

// Red pairings closing off the small boundary components to form X:
//   (+,+,+,+) -> (-,-,+,+) and (-,-,-,-) -> (+,+,-,-) via K.
std::vector<PairingRule> standard_red_rules();

// The mirrored complex together with facet pairings and the orbit structure
// they generate on strata and cusps.
struct QuotientComplex {
    MirroredComplex S;
    std::vector<PairingRule> blue_rules;
    std::vector<PairingRule> red_rules;             // empty for R
    GluedCells cells;                               // full cell-level quotient

    std::vector<std::vector<Label>> cusp_orbits;    // orbits sorted, members sorted
    std::vector<std::vector<Label>> strata2_orbits;

    // Directed action per paired stratum label (inverse stored for targets).
    std::map<Label, SignedPerm> blue_action;
    std::map<Label, SignedPerm> red_action;

    std::vector<int> cusp_orbit_sizes() const;      // sorted ascending
    std::vector<int> strata2_orbit_sizes() const;
    std::vector<Label> fixed_cusps() const;         // singleton orbits
};

// Applies a blue pairing scheme to the mirrored complex. Validates that the
// scheme covers all eight blue 3-strata exactly once, is involution-like and
// fixed-point-free, that every map carries its source stratum (and each of
// its 2-strata and cusps) onto the target, and that every gluing - mirror
// and pairing alike - is orientation-reversing. Throws on any violation.
QuotientComplex build_R(const MirroredComplex& S,
                        const std::vector<PairingRule>& rules = standard_blue_rules());

// Glues the four small boundary components of R in two K-pairs and checks
// that K matches them isometrically (it conjugates the self-gluings of each
// small block onto those of its image). Exactly one boundary component must
// remain. Throws on any violation.
QuotientComplex build_X(const QuotientComplex& R);

// Flat cusp cross-sections of R, computed by gluing the cusp squares along
// their blue sides. Every component must be a cylinder (chi = 0, two red
// boundary circles) of width one; lengths count unit squares and the circle
// factor has length two. Throws "cusp gluing inconsistent" when a blue side
// is unmatched or matched twice.
struct CuspShape {
    enum class Kind { CylinderCrossCircle, Torus };
    Kind kind = Kind::CylinderCrossCircle;
    int length = 0;     // unit squares around the cylinder
    int width = 1;
    int circle = 2;     // length of the S^1 factor, up to homothety
};

std::vector<CuspShape> cusp_shapes_R(const QuotientComplex& R);    // sorted by length

// One triangle-level gluing between boundary blocks, induced by the pairing
// of the blue facet containing the triangle.
struct TriangleGluing {
    Label src_block, src_tri;
    Label dst_block, dst_tri;
    SignedPerm map;
};

struct BoundaryComponent {
    std::vector<Label> blocks;              // red 3-stratum labels, sorted
    std::vector<TriangleGluing> gluings;    // each unordered pair once
    bool is_small() const { return blocks.size() == 1; }
};

// Connected components of the unpaired red 3-strata under the induced
// triangle gluings, sorted by their smallest block label.
std::vector<BoundaryComponent> boundary_components(const QuotientComplex& q);

// One tetrahedron per block, faces numbered by the zero position of the
// corresponding 2-stratum label; gluings carry the unique vertex bijection
// induced by the cusp correspondence. Throws if any gluing fails to map face
// numbers consistently.
Triangulation extract_triangulation(const BoundaryComponent& c);

// Octahedral cell complex of a boundary component: each block contributes
// its two octahedron copies, glued along mirror and pairing identifications
// restricted to the component. Ideal vertex classes are the component's
// cusps.
struct ComponentCells {
    int octahedra = 0;
    int triangles = 0;
    int edges = 0;
    int cusps = 0;      // ideal vertex classes

    int euler() const { return -edges + triangles - octahedra; }
};

ComponentCells component_cells(const QuotientComplex& q, const BoundaryComponent& c);

// Double of X along its remaining boundary: two copies of X's gluing scheme
// on four polytope copies, plus identity gluings of the boundary facets.
GluedCells build_double(const QuotientComplex& X);

// Volumes as exact cell counts with a numeric rendering.
inline constexpr double kOctahedronVolume = 3.66386237670887606;    // 8 Lobachevsky(pi/4)
double cell24_volume();                                             // 4 pi^2 / 3

struct Volume {
    int cell_count = 0;
    double unit = 0.0;

    double value() const { return cell_count * unit; }
};

Volume component_volume(const BoundaryComponent& c);
Volume ambient_volume(const QuotientComplex& X);    // 24-cell count

std::string render_volume(const char* name, const char* unit_symbol, const Volume& v);

} // namespace geobound
