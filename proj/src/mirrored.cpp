#include "geobound/mirrored.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace geobound {

namespace {

[[noreturn]] void construction_error(const std::string& what, int expected, int got) {
    std::ostringstream os;
    os << "mirrored complex: " << what << ": expected " << expected << ", got " << got;
    throw std::runtime_error(os.str());
}

} // namespace

std::vector<Label> MirroredComplex::strata2_of(const Label& s3) const {
    std::vector<Label> out;
    for (const Label& t : strata2)
        if (t.refines(s3))
            out.push_back(t);
    return out;
}

std::vector<Label> MirroredComplex::cusps_of(const Label& s3) const {
    std::vector<Label> out;
    for (const Label& v : cusps)
        if (v.refines(s3))
            out.push_back(v);
    return out;
}

std::vector<Label> MirroredComplex::strata3_of_cusp(const Label& cusp) const {
    std::vector<Label> out;
    for (const Label& s : strata3)
        if (cusp.refines(s))
            out.push_back(s);
    return out;
}

int MirroredComplex::strata2_index(const Label& l) const {
    auto it = std::lower_bound(strata2.begin(), strata2.end(), l);
    if (it == strata2.end() || *it != l)
        return -1;
    return static_cast<int>(it - strata2.begin());
}

int MirroredComplex::cusp_index(const Label& l) const {
    auto it = std::lower_bound(cusps.begin(), cusps.end(), l);
    if (it == cusps.end() || *it != l)
        return -1;
    return static_cast<int>(it - cusps.begin());
}

MirroredComplex build_mirrored() {
    MirroredComplex S;
    S.cell = std::make_shared<const FaceLattice>(build_24cell());
    S.strata3 = sign_labels();
    S.strata2 = stratum2_labels();
    S.cusps = cusp_labels();

    const FaceLattice& lat = *S.cell;

    // Cell layer: two copies glued along the green facets by the identity.
    std::vector<FacetGluing> gluings;
    for (int f = 0; f < static_cast<int>(lat.facets().size()); ++f)
        if (lat.facet_colors[f] == FacetColor::Green)
            gluings.push_back(FacetGluing{0, f, 1, f, SignedPerm{}});
    if (gluings.size() != 8)
        construction_error("green facet count", 8, static_cast<int>(gluings.size()));
    for (const FacetGluing& g : gluings)
        if (!orientation_reversing(g.map, /*cross_copy=*/true))
            throw std::runtime_error("mirror gluing is not orientation-reversing");
    S.cells = GluedCells(S.cell, 2, std::move(gluings));

    if (static_cast<int>(S.strata3.size()) != 16)
        construction_error("boundary 3-strata", 16, static_cast<int>(S.strata3.size()));
    if (static_cast<int>(S.strata2.size()) != 32)
        construction_error("boundary 2-strata", 32, static_cast<int>(S.strata2.size()));
    if (static_cast<int>(S.cusps.size()) != 24)
        construction_error("cusps", 24, static_cast<int>(S.cusps.size()));

    // Labels must name actual faces of the lattice.
    for (const Label& s : S.strata3)
        if (lat.facet_index(s) < 0)
            throw std::runtime_error("3-stratum label names no facet: " + s.str());
    for (const Label& t : S.strata2)
        stratum2_mask(lat, t);
    for (const Label& v : S.cusps)
        cusp_vertex(lat, v);

    // Each boundary 3-stratum is a Minsky block: 4 boundary 2-strata and
    // 6 cusps, matching the facet's red-blue triangles and vertices.
    for (const Label& s : S.strata3) {
        auto tris = S.strata2_of(s);
        auto vs = S.cusps_of(s);
        if (tris.size() != 4)
            construction_error("2-strata of a block", 4, static_cast<int>(tris.size()));
        if (vs.size() != 6)
            construction_error("cusps of a block", 6, static_cast<int>(vs.size()));
        uint32_t fmask = lat.facets()[lat.facet_index(s)];
        for (const Label& t : tris)
            if ((stratum2_mask(lat, t) & fmask) != stratum2_mask(lat, t))
                throw std::runtime_error("2-stratum label incidence disagrees with the lattice");
        for (const Label& v : vs)
            if (!((fmask >> cusp_vertex(lat, v)) & 1u))
                throw std::runtime_error("cusp label incidence disagrees with the lattice");
    }

    // Cell-layer cross checks: vertex classes = cusps, and the boundary is
    // carried by the 32 red/blue facet slots.
    if (S.cells.quotient_count(0) != 24)
        construction_error("cusp classes in the cell layer", 24, S.cells.quotient_count(0));
    if (static_cast<int>(S.cells.boundary_facet_slots().size()) != 32)
        construction_error("boundary facet slots", 32,
                           static_cast<int>(S.cells.boundary_facet_slots().size()));

    // Cusp sections are a flat unit square times a circle: every vertex lies
    // on exactly two green facets (mirrored into the circle factor) and its
    // four red/blue facets close into an alternating square.
    for (const Label& v : S.cusps) {
        uint32_t vbit = 1u << cusp_vertex(lat, v);
        int greens = 0;
        for (int f = 0; f < static_cast<int>(lat.facets().size()); ++f)
            if ((lat.facets()[f] & vbit) && lat.facet_colors[f] == FacetColor::Green)
                ++greens;
        if (greens != 2)
            construction_error("green facets at a cusp", 2, greens);
        cusp_square(S, v);
    }
    return S;
}

CuspSquare cusp_square(const MirroredComplex& S, const Label& cusp) {
    if (cusp.zero_count() != 2)
        throw std::invalid_argument("cusp label " + cusp.str() + " must have two zeros");
    int zi = -1, zj = -1;
    for (int i = 0; i < 4; ++i)
        if (cusp.e[i] == 0)
            (zi < 0 ? zi : zj) = i;

    // Walk the four sign fills in Gray-code order so consecutive sides share
    // a triangle; colors then alternate with the parity of minus signs.
    static const int fills[4][2] = {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};
    CuspSquare sq;
    sq.cusp = cusp;
    for (int k = 0; k < 4; ++k) {
        Label side = cusp.with_entry(zi, fills[k][0]).with_entry(zj, fills[k][1]);
        sq.sides[k] = side;
        sq.side_colors[k] = label_color(side);
    }
    for (int k = 0; k < 4; ++k) {
        auto corner = shared_2face(sq.sides[k], sq.sides[(k + 1) % 4]);
        if (!corner)
            throw std::runtime_error("cusp square sides are not adjacent");
        sq.corners[k] = *corner;
        if (S.strata2_index(*corner) < 0)
            throw std::runtime_error("cusp square corner is not a 2-stratum");
    }
    for (int k = 0; k < 4; ++k)
        if (sq.side_colors[k] == sq.side_colors[(k + 1) % 4])
            throw std::runtime_error("cusp square colors do not alternate");
    return sq;
}

} // namespace geobound
