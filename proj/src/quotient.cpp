#include "geobound/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "geobound/union_find.hpp"

namespace geobound {

std::vector<PairingRule> standard_blue_rules() {
    Label f_src{{1, 1, -1, 1}};
    Label g_src{{1, -1, 1, 1}};
    return {
        PairingRule{f_src, map_F().apply(f_src), map_F()},
        PairingRule{f_src.negated(), map_F().apply(f_src.negated()), map_F()},
        PairingRule{g_src, map_G().apply(g_src), map_G()},
        PairingRule{g_src.negated(), map_G().apply(g_src.negated()), map_G()},
    };
}

std::vector<PairingRule> standard_red_rules() {
    Label a{{1, 1, 1, 1}};
    Label b{{-1, -1, -1, -1}};
    return {
        PairingRule{a, map_K().apply(a), map_K()},
        PairingRule{b, map_K().apply(b), map_K()},
    };
}

std::vector<int> QuotientComplex::cusp_orbit_sizes() const {
    std::vector<int> sizes;
    for (const auto& o : cusp_orbits)
        sizes.push_back(static_cast<int>(o.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> QuotientComplex::strata2_orbit_sizes() const {
    std::vector<int> sizes;
    for (const auto& o : strata2_orbits)
        sizes.push_back(static_cast<int>(o.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<Label> QuotientComplex::fixed_cusps() const {
    std::vector<Label> out;
    for (const auto& o : cusp_orbits)
        if (o.size() == 1)
            out.push_back(o.front());
    return out;
}

namespace {

// Validates one pairing scheme over the strata it touches: every map must
// carry its source stratum (with all incident 2-strata and cusps) onto the
// target, every touched stratum must be covered exactly once, and no stratum
// may be paired with itself.
void validate_rules(const MirroredComplex& S, const std::vector<PairingRule>& rules,
                    FacetColor color, size_t expected_cover, const char* what) {
    std::map<Label, int> covered;
    for (const PairingRule& rule : rules) {
        if (label_color(rule.src) != color || label_color(rule.dst) != color)
            throw std::runtime_error(std::string(what) + " pairing touches a facet of the wrong color");
        if (rule.src == rule.dst)
            throw std::runtime_error(std::string(what) + " pairing fixes a stratum");
        if (rule.map.apply(rule.src) != rule.dst)
            throw std::runtime_error(std::string(what) + " pairing map does not carry source label to target");
        if (!orientation_reversing(rule.map, /*cross_copy=*/false))
            throw std::runtime_error(std::string(what) + " pairing map is not orientation-reversing");
        for (const Label& t : S.strata2_of(rule.src))
            if (!rule.map.apply(t).refines(rule.dst))
                throw std::runtime_error(std::string(what) + " pairing misplaces a 2-stratum");
        for (const Label& v : S.cusps_of(rule.src))
            if (!rule.map.apply(v).refines(rule.dst))
                throw std::runtime_error(std::string(what) + " pairing misplaces a cusp");
        // The rule acts identically on both copies; for the two per-copy
        // maps to assemble into one map of the doubled stratum they must be
        // compatible with the mirror identification, i.e. carry green
        // facets to green facets.
        const FaceLattice& lat = S.lattice();
        for (size_t f = 0; f < lat.facets().size(); ++f)
            if (lat.facet_colors[f] == FacetColor::Green) {
                int fi = lat.face_index(3, lat.map_mask(rule.map, lat.facets()[f]));
                if (fi < 0 || lat.facet_colors[fi] != FacetColor::Green)
                    throw std::runtime_error(std::string(what) +
                                             " pairing is incompatible with the mirror gluing");
            }
        ++covered[rule.src];
        ++covered[rule.dst];
    }
    if (covered.size() != expected_cover)
        throw std::runtime_error(std::string(what) + " pairing rule is incomplete");
    for (auto& [l, count] : covered)
        if (count != 1)
            throw std::runtime_error(std::string(what) + " pairing covers " + l.str() + " twice");
}

std::map<Label, SignedPerm> directed_action(const std::vector<PairingRule>& rules) {
    std::map<Label, SignedPerm> action;
    for (const PairingRule& rule : rules) {
        action[rule.src] = rule.map;
        action[rule.dst] = rule.map.inverse();
    }
    return action;
}

std::vector<std::vector<Label>> orbits_of(const std::vector<Label>& labels,
                                          const std::map<Label, SignedPerm>& actions) {
    UnionFind uf(static_cast<int>(labels.size()));
    auto index = [&](const Label& l) {
        auto it = std::lower_bound(labels.begin(), labels.end(), l);
        if (it == labels.end() || *it != l)
            throw std::logic_error("label outside its stratum set: " + l.str());
        return static_cast<int>(it - labels.begin());
    };
    for (auto& [stratum, map] : actions)
        for (int i = 0; i < static_cast<int>(labels.size()); ++i)
            if (labels[i].refines(stratum))
                uf.unite(i, index(map.apply(labels[i])));
    std::vector<std::vector<Label>> orbits;
    for (const auto& cls : uf.classes()) {
        std::vector<Label> orbit;
        for (int i : cls)
            orbit.push_back(labels[i]);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

GluedCells glue_cells(const MirroredComplex& S, const std::vector<PairingRule>& blue,
                      const std::vector<PairingRule>& red) {
    const FaceLattice& lat = S.lattice();
    std::vector<FacetGluing> gluings = S.cells.gluings();
    for (const auto* rules : {&blue, &red})
        for (const PairingRule& rule : *rules)
            for (int copy = 0; copy < 2; ++copy)
                gluings.push_back(FacetGluing{copy, lat.facet_index(rule.src),
                                              copy, lat.facet_index(rule.dst), rule.map});
    return GluedCells(S.cell, 2, std::move(gluings));
}

} // namespace

QuotientComplex build_R(const MirroredComplex& S, const std::vector<PairingRule>& rules) {
    validate_rules(S, rules, FacetColor::Blue, 8, "blue");

    QuotientComplex q;
    q.S = S;
    q.blue_rules = rules;
    q.blue_action = directed_action(rules);
    q.cells = glue_cells(q.S, q.blue_rules, {});
    q.cusp_orbits = orbits_of(q.S.cusps, q.blue_action);
    q.strata2_orbits = orbits_of(q.S.strata2, q.blue_action);
    return q;
}

std::vector<CuspShape> cusp_shapes_R(const QuotientComplex& R) {
    std::vector<CuspShape> shapes;
    for (const auto& orbit : R.cusp_orbits) {
        // Square complex of this cusp class: one square per cusp in the
        // orbit, glued along blue sides by the pairing maps.
        std::vector<CuspSquare> squares;
        std::map<Label, int> square_of;
        for (const Label& v : orbit) {
            square_of[v] = static_cast<int>(squares.size());
            squares.push_back(cusp_square(R.S, v));
        }
        int k = static_cast<int>(squares.size());

        auto side_slot = [](int sq, int side) { return sq * 4 + side; };
        UnionFind sides(4 * k), corners(4 * k);

        auto side_index = [&](int sq, const Label& facet) {
            for (int s = 0; s < 4; ++s)
                if (squares[sq].sides[s] == facet)
                    return s;
            throw std::runtime_error("cusp gluing inconsistent: side not found");
        };
        auto corner_index = [&](int sq, const Label& tri) {
            for (int c = 0; c < 4; ++c)
                if (squares[sq].corners[c] == tri)
                    return c;
            throw std::runtime_error("cusp gluing inconsistent: corner not found");
        };

        for (int sq = 0; sq < k; ++sq)
            for (int s = 0; s < 4; ++s) {
                if (squares[sq].side_colors[s] != FacetColor::Blue)
                    continue;
                auto it = R.blue_action.find(squares[sq].sides[s]);
                if (it == R.blue_action.end())
                    throw std::runtime_error("cusp gluing inconsistent: blue side unpaired");
                const SignedPerm& m = it->second;
                Label v2 = m.apply(squares[sq].cusp);
                auto sit = square_of.find(v2);
                if (sit == square_of.end())
                    throw std::runtime_error("cusp gluing inconsistent: image cusp outside orbit");
                int sq2 = sit->second;
                int s2 = side_index(sq2, m.apply(squares[sq].sides[s]));
                sides.unite(side_slot(sq, s), side_slot(sq2, s2));
                // side s runs between corners s-1 and s.
                for (int c : {(s + 3) % 4, s})
                    corners.unite(side_slot(sq, c),
                                  side_slot(sq2, corner_index(sq2, m.apply(squares[sq].corners[c]))));
            }

        // Every blue side must be matched with exactly one other blue side;
        // red sides stay boundary edges.
        std::map<int, std::vector<int>> side_classes;
        for (int i = 0; i < 4 * k; ++i)
            side_classes[sides.find(i)].push_back(i);
        int side_class_count = 0;
        for (auto& [root, members] : side_classes) {
            ++side_class_count;
            bool blue = squares[members[0] / 4].side_colors[members[0] % 4] == FacetColor::Blue;
            size_t expected = blue ? 2 : 1;
            for (int m : members)
                if ((squares[m / 4].side_colors[m % 4] == FacetColor::Blue) != blue)
                    throw std::runtime_error("cusp gluing inconsistent: mixed-color side class");
            if (members.size() != expected)
                throw std::runtime_error("cusp gluing inconsistent: blue side matched " +
                                         std::to_string(members.size() - 1) + " times");
        }

        // chi = V - E + F must vanish and the red boundary must form exactly
        // two circles: the class is a flat cylinder of width one.
        int corner_classes = corners.class_count();
        int chi = corner_classes - side_class_count + k;
        if (chi != 0)
            throw std::runtime_error("cusp section is not flat: chi = " + std::to_string(chi));

        std::map<int, int> corner_degree;    // red-side endpoints per corner class
        UnionFind boundary(4 * k);           // corner classes linked by red sides
        for (int sq = 0; sq < k; ++sq)
            for (int s = 0; s < 4; ++s) {
                if (squares[sq].side_colors[s] != FacetColor::Red)
                    continue;
                int a = corners.find(side_slot(sq, (s + 3) % 4));
                int b = corners.find(side_slot(sq, s));
                ++corner_degree[a];
                ++corner_degree[b];
                boundary.unite(a, b);
            }
        for (auto& [corner, deg] : corner_degree)
            if (deg != 2)
                throw std::runtime_error("cusp boundary is not a union of circles");
        std::set<int> circles;
        for (int sq = 0; sq < k; ++sq)
            for (int s = 0; s < 4; ++s)
                if (squares[sq].side_colors[s] == FacetColor::Red)
                    circles.insert(boundary.find(corners.find(side_slot(sq, s))));
        if (circles.size() != 2)
            throw std::runtime_error("cusp section is not a cylinder: " +
                                     std::to_string(circles.size()) + " boundary circles");

        shapes.push_back(CuspShape{CuspShape::Kind::CylinderCrossCircle, k, 1, 2});
    }
    std::sort(shapes.begin(), shapes.end(),
              [](const CuspShape& a, const CuspShape& b) { return a.length < b.length; });
    return shapes;
}

namespace {

// Blue facet adjacent to a 2-stratum: fill the zero so the label has an odd
// number of minus signs.
Label blue_side(const Label& tri) {
    int p = tri.zero_position();
    Label plus = tri.with_entry(p, 1);
    return label_color(plus) == FacetColor::Blue ? plus : tri.with_entry(p, -1);
}

Label red_side(const Label& tri) {
    int p = tri.zero_position();
    Label plus = tri.with_entry(p, 1);
    return label_color(plus) == FacetColor::Red ? plus : tri.with_entry(p, -1);
}

} // namespace

std::vector<BoundaryComponent> boundary_components(const QuotientComplex& q) {
    // Unpaired red strata carry the boundary.
    std::vector<Label> blocks;
    for (const Label& s : q.S.strata3)
        if (label_color(s) == FacetColor::Red && !q.red_action.count(s))
            blocks.push_back(s);

    auto block_index = [&](const Label& l) {
        auto it = std::lower_bound(blocks.begin(), blocks.end(), l);
        if (it == blocks.end() || *it != l)
            throw std::runtime_error("triangle gluing leaves the boundary blocks");
        return static_cast<int>(it - blocks.begin());
    };

    UnionFind uf(static_cast<int>(blocks.size()));
    std::vector<TriangleGluing> gluings;
    for (const Label& o : blocks)
        for (const Label& t : q.S.strata2_of(o)) {
            const SignedPerm& m = q.blue_action.at(blue_side(t));
            Label t2 = m.apply(t);
            Label o2 = red_side(t2);
            uf.unite(block_index(o), block_index(o2));
            if (std::tie(o, t) <= std::tie(o2, t2))
                gluings.push_back(TriangleGluing{o, t, o2, t2, m});
        }

    std::map<int, BoundaryComponent> by_root;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        by_root[uf.find(i)].blocks.push_back(blocks[i]);
    for (const TriangleGluing& g : gluings)
        by_root[uf.find(block_index(g.src_block))].gluings.push_back(g);

    std::vector<BoundaryComponent> out;
    for (auto& [root, comp] : by_root) {
        std::sort(comp.gluings.begin(), comp.gluings.end(),
                  [](const TriangleGluing& a, const TriangleGluing& b) {
                      return std::tie(a.src_block, a.src_tri) < std::tie(b.src_block, b.src_tri);
                  });
        out.push_back(std::move(comp));
    }
    return out;
}

Triangulation extract_triangulation(const BoundaryComponent& c) {
    std::map<Label, int> tet_of;
    for (int i = 0; i < static_cast<int>(c.blocks.size()); ++i)
        tet_of[c.blocks[i]] = i;

    Triangulation t;
    t.n = static_cast<int>(c.blocks.size());
    t.adj.resize(t.n);
    t.face_numbered = true;

    for (const TriangleGluing& g : c.gluings) {
        int p = g.src_tri.zero_position();
        int q = g.dst_tri.zero_position();
        std::array<int, 4> psi;
        for (int k = 0; k < 4; ++k)
            psi[k] = g.map.position_image(k);
        if (psi[p] != q)
            throw std::runtime_error("triangle gluing does not respect face numbering");

        int a = tet_of.at(g.src_block);
        int b = tet_of.at(g.dst_block);
        std::array<int, 4> inv;
        for (int k = 0; k < 4; ++k)
            inv[psi[k]] = k;
        t.adj[a][p] = Triangulation::Gluing{b, psi};
        t.adj[b][q] = Triangulation::Gluing{a, inv};
    }
    t.check_valid();
    return t;
}

QuotientComplex build_X(const QuotientComplex& R) {
    std::vector<PairingRule> red = standard_red_rules();
    validate_rules(R.S, red, FacetColor::Red, 4, "red");

    // The red rules must glue exactly the small boundary components of R,
    // and K must match them isometrically: conjugation by K carries the
    // self-gluings of each small block onto those of its image.
    auto comps = boundary_components(R);
    std::map<Label, const BoundaryComponent*> small_of;
    for (const auto& comp : comps)
        if (comp.is_small())
            small_of[comp.blocks.front()] = &comp;
    for (const PairingRule& rule : red) {
        if (!small_of.count(rule.src) || !small_of.count(rule.dst))
            throw std::runtime_error("K-pairing does not target the small boundary components");
        const BoundaryComponent* src = small_of.at(rule.src);
        const BoundaryComponent* dst = small_of.at(rule.dst);
        for (const TriangleGluing& g : src->gluings) {
            Label img_tri = rule.map.apply(g.src_tri);
            SignedPerm conj = compose(rule.map, compose(g.map, rule.map.inverse()));
            bool found = false;
            for (const TriangleGluing& h : dst->gluings) {
                if (h.src_tri == img_tri && compose(h.map, conj.inverse()).is_identity())
                    found = true;
                if (h.dst_tri == img_tri && compose(h.map, conj).is_identity())
                    found = true;
            }
            if (!found)
                throw std::runtime_error("K does not match the small components isometrically");
        }
    }

    QuotientComplex X;
    X.S = R.S;
    X.blue_rules = R.blue_rules;
    X.red_rules = red;
    X.blue_action = R.blue_action;
    X.red_action = directed_action(red);
    X.cells = glue_cells(X.S, X.blue_rules, X.red_rules);

    std::map<Label, SignedPerm> all_actions = X.blue_action;
    all_actions.insert(X.red_action.begin(), X.red_action.end());
    X.cusp_orbits = orbits_of(X.S.cusps, all_actions);
    X.strata2_orbits = orbits_of(X.S.strata2, all_actions);
    return X;
}

// The component's complex is a disjoint union of octahedra, two per block,
// so cell slots are (block, copy, face of the block's facet): a lattice face
// shared by two block facets is two distinct cells unless a gluing
// identifies them.
ComponentCells component_cells(const QuotientComplex& q, const BoundaryComponent& c) {
    const FaceLattice& lat = q.S.lattice();
    int nb = static_cast<int>(c.blocks.size());

    std::vector<uint32_t> block_masks;
    std::map<Label, int> block_index;
    for (int i = 0; i < nb; ++i) {
        block_masks.push_back(lat.facets()[lat.facet_index(c.blocks[i])]);
        block_index[c.blocks[i]] = i;
    }

    std::vector<uint32_t> green_masks;
    for (size_t f = 0; f < lat.facets().size(); ++f)
        if (lat.facet_colors[f] == FacetColor::Green)
            green_masks.push_back(lat.facets()[f]);

    // Dense slots (block, face) per dimension; copies double them.
    std::array<std::map<std::pair<int, int>, int>, 3> dense;
    std::array<int, 3> per_copy{};
    for (int d = 0; d < 3; ++d)
        for (int i = 0; i < static_cast<int>(lat.faces[d].size()); ++i)
            for (int b = 0; b < nb; ++b)
                if ((lat.faces[d][i] & block_masks[b]) == lat.faces[d][i])
                    dense[d][{b, i}] = per_copy[d]++;

    std::array<UnionFind, 3> uf;
    for (int d = 0; d < 3; ++d)
        uf[d] = UnionFind(2 * per_copy[d]);
    auto slot = [&](int d, int copy, int idx) { return copy * per_copy[d] + idx; };

    for (int d = 0; d < 3; ++d)
        for (const auto& [key, idx] : dense[d]) {
            auto [b, i] = key;
            uint32_t mask = lat.faces[d][i];

            // Mirror identification: the block's two octahedra are glued
            // along every face lying in a green facet.
            for (uint32_t gm : green_masks)
                if ((mask & gm) == mask) {
                    uf[d].unite(slot(d, 0, idx), slot(d, 1, idx));
                    break;
                }

            // Pairing identification: faces lying in a paired blue facet are
            // carried to the image block, within each copy.
            for (const auto& [blue, map] : q.blue_action) {
                uint32_t bm = lat.facets()[lat.facet_index(blue)];
                if ((mask & bm) != mask)
                    continue;
                Label target_block = map.apply(c.blocks[b]);
                auto bit = block_index.find(target_block);
                if (bit == block_index.end())
                    throw std::runtime_error("component gluing leaves the component");
                int j = lat.face_index(d, lat.map_mask(map, mask));
                auto it = dense[d].find({bit->second, j});
                if (it == dense[d].end())
                    throw std::runtime_error("component gluing misses the image block");
                for (int copy = 0; copy < 2; ++copy)
                    uf[d].unite(slot(d, copy, idx), slot(d, copy, it->second));
            }
        }

    ComponentCells cc;
    cc.octahedra = 2 * nb;
    cc.triangles = uf[2].class_count();
    cc.edges = uf[1].class_count();
    cc.cusps = uf[0].class_count();
    return cc;
}

GluedCells build_double(const QuotientComplex& X) {
    std::vector<FacetGluing> gluings;
    for (int half = 0; half < 2; ++half)
        for (const FacetGluing& g : X.cells.gluings())
            gluings.push_back(FacetGluing{g.src_copy + 2 * half, g.src_facet,
                                          g.dst_copy + 2 * half, g.dst_facet, g.map});
    for (const auto& [copy, facet] : X.cells.boundary_facet_slots())
        gluings.push_back(FacetGluing{copy, facet, copy + 2, facet, SignedPerm{}});
    return GluedCells(X.S.cell, 4, std::move(gluings));
}

double cell24_volume() {
    return 4.0 * std::numbers::pi * std::numbers::pi / 3.0;
}

Volume component_volume(const BoundaryComponent& c) {
    return Volume{2 * static_cast<int>(c.blocks.size()), kOctahedronVolume};
}

Volume ambient_volume(const QuotientComplex& X) {
    return Volume{X.cells.top_cell_count(), cell24_volume()};
}

std::string render_volume(const char* name, const char* unit_symbol, const Volume& v) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s = %d * %s ~ %.4f", name, v.cell_count,
                  unit_symbol, v.value());
    return buf;
}

} // namespace geobound
