#include "geobound/cells.hpp"

#include <set>
#include <stdexcept>

namespace geobound {

GluedCells::GluedCells(std::shared_ptr<const FaceLattice> base, int copies,
                       std::vector<FacetGluing> gluings)
    : base_(std::move(base)), copies_(copies), gluings_(std::move(gluings)) {
    const FaceLattice& lat = *base_;
    for (int d = 0; d <= lat.facet_dim; ++d)
        uf_[d] = UnionFind(copies_ * static_cast<int>(lat.faces[d].size()));

    for (const FacetGluing& g : gluings_) {
        uint32_t src_mask = lat.facets()[g.src_facet];
        uint32_t dst_mask = lat.facets()[g.dst_facet];
        if (lat.map_mask(g.map, src_mask) != dst_mask)
            throw std::runtime_error("facet gluing map does not carry source onto target");
        // Identify every face of the glued facet with its image.
        for (int d = 0; d <= lat.facet_dim; ++d)
            for (int i = 0; i < static_cast<int>(lat.faces[d].size()); ++i) {
                uint32_t m = lat.faces[d][i];
                if ((m & src_mask) != m)
                    continue;
                int j = lat.face_index(d, lat.map_mask(g.map, m));
                if (j < 0)
                    throw std::runtime_error("gluing image is not a face of the polytope");
                uf_[d].unite(slot(d, g.src_copy, i), slot(d, g.dst_copy, j));
            }
    }
}

int GluedCells::slot(int dim, int copy, int face_idx) const {
    return copy * static_cast<int>(base_->faces[dim].size()) + face_idx;
}

int GluedCells::quotient_count(int dim) const {
    return uf_[dim].class_count();
}

std::vector<std::pair<int, int>> GluedCells::boundary_facet_slots() const {
    std::set<std::pair<int, int>> glued;
    for (const FacetGluing& g : gluings_) {
        glued.insert({g.src_copy, g.src_facet});
        glued.insert({g.dst_copy, g.dst_facet});
    }
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < copies_; ++c)
        for (int f = 0; f < static_cast<int>(base_->facets().size()); ++f)
            if (!glued.count({c, f}))
                out.push_back({c, f});
    return out;
}

int GluedCells::euler_excluding_vertices() const {
    int chi = 0;
    for (int d = 1; d <= base_->facet_dim; ++d)
        chi += (d % 2 ? -1 : 1) * quotient_count(d);
    chi += (base_->facet_dim % 2 ? 1 : -1) * copies_;
    return chi;
}

} // namespace geobound
