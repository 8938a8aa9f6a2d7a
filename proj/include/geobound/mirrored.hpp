#pragma once

#include <memory>
#include <vector>

#include "geobound/cells.hpp"
#include "geobound/label.hpp"
#include "geobound/lattice.hpp"

namespace geobound {

// Two oppositely oriented copies of the 24-cell glued along their green
// facets by the identity. Boundary strata are tracked by label: sixteen
// 3-strata (doubled red/blue octahedra, one per sign label), thirty-two
// 2-strata (doubled red-blue triangles, one per one-zero label) and
// twenty-four cusps (one per vertex).
struct MirroredComplex {
    std::shared_ptr<const FaceLattice> cell;    // the 24-cell
    std::vector<Label> strata3;                 // 16, sorted
    std::vector<Label> strata2;                 // 32, sorted
    std::vector<Label> cusps;                   // 24, sorted
    GluedCells cells;                           // 2 copies, green mirror gluings

    const FaceLattice& lattice() const { return *cell; }

    std::vector<Label> strata2_of(const Label& s3) const;
    std::vector<Label> cusps_of(const Label& s3) const;
    std::vector<Label> strata3_of_cusp(const Label& cusp) const;

    int strata2_index(const Label& l) const;
    int cusp_index(const Label& l) const;
};

// Builds the mirrored complex and checks its stratum structure: 16 boundary
// 3-strata, 32 boundary 2-strata, 24 cusps; every 3-stratum carries 4
// boundary 2-strata and 6 cusps; every cusp section is a flat square times a
// circle. Throws a construction error on any count mismatch.
MirroredComplex build_mirrored();

// Cross-section square of one cusp: the four incident red/blue facets in
// cyclic order (colors alternating), with the shared 2-strata as corners.
// corners[k] sits between sides[k] and sides[(k+1) % 4].
struct CuspSquare {
    Label cusp;
    std::array<Label, 4> sides;
    std::array<FacetColor, 4> side_colors;
    std::array<Label, 4> corners;
};

// Throws if the label does not have exactly two zero entries.
CuspSquare cusp_square(const MirroredComplex& S, const Label& cusp);

} // namespace geobound
