#pragma once

#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "geobound/lattice.hpp"
#include "geobound/union_find.hpp"

namespace geobound {

// Identifies one facet of one polytope copy with a facet of another (or the
// same) copy via an isometry mapping the first onto the second.
struct FacetGluing {
    int src_copy = 0;
    int src_facet = 0;
    int dst_copy = 0;
    int dst_facet = 0;
    SignedPerm map;
};

// A disjoint union of copies of a polytope with facet gluings, quotiented at
// the level of cells: every face of a glued facet is identified with its
// image. Cell counts of each dimension come from a union-find over
// (copy, face) slots.
class GluedCells {
public:
    GluedCells() = default;
    GluedCells(std::shared_ptr<const FaceLattice> base, int copies,
               std::vector<FacetGluing> gluings);

    const FaceLattice& base() const { return *base_; }
    int copies() const { return copies_; }
    const std::vector<FacetGluing>& gluings() const { return gluings_; }

    int slot(int dim, int copy, int face_idx) const;
    int quotient_count(int dim) const;     // dim 0..facet_dim
    int top_cell_count() const { return copies_; }

    // (copy, facet) pairs untouched by every gluing.
    std::vector<std::pair<int, int>> boundary_facet_slots() const;

    // Alternating sum of quotient cell counts over dimensions >= 1,
    // including the top cells. Ideal vertex classes are excluded: all cusp
    // sections in play are flat manifolds of zero Euler characteristic, so
    // coning them would change the sum by exactly the number of cusps.
    int euler_excluding_vertices() const;

    const UnionFind& uf(int dim) const { return uf_[dim]; }

private:
    std::shared_ptr<const FaceLattice> base_;
    int copies_ = 0;
    std::vector<FacetGluing> gluings_;
    std::array<UnionFind, 4> uf_;
};

} // namespace geobound
