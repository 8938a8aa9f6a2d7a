#include "geobound/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "geobound/union_find.hpp"

namespace geobound {

namespace {

int perm_sign(const std::array<int, 4>& p) {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

std::array<int, 4> perm_inverse(const std::array<int, 4>& p) {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i)
        inv[p[i]] = i;
    return inv;
}

std::array<int, 4> perm_compose(const std::array<int, 4>& outer,
                                const std::array<int, 4>& inner) {
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i)
        r[i] = outer[inner[i]];
    return r;
}

bool is_permutation(const std::array<int, 4>& p) {
    std::array<bool, 4> seen{};
    for (int v : p) {
        if (v < 0 || v > 3 || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

// Edge slots within one tetrahedron, ordered.
constexpr int kEdgePairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int edge_slot_index(int u, int v) {
    if (u > v)
        std::swap(u, v);
    for (int k = 0; k < 6; ++k)
        if (kEdgePairs[k][0] == u && kEdgePairs[k][1] == v)
            return k;
    throw std::logic_error("bad edge pair");
}

} // namespace

void Triangulation::check_valid() const {
    if (n <= 0 || static_cast<int>(adj.size()) != n)
        throw std::runtime_error("triangulation has no tetrahedra");
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = adj[t][f];
            if (g.tet < 0 || g.tet >= n)
                throw std::runtime_error("face left unglued");
            if (!is_permutation(g.map))
                throw std::runtime_error("gluing map is not a vertex bijection");
            if (g.tet == t && g.map[f] == f)
                throw std::runtime_error("face glued to itself");
            const Gluing& back = adj[g.tet][g.map[f]];
            if (back.tet != t || perm_compose(back.map, g.map) != std::array<int, 4>{0, 1, 2, 3})
                throw std::runtime_error("pairing is not involutive");
        }
}

std::optional<std::vector<int>> check_orientable(const Triangulation& t) {
    t.check_valid();
    std::vector<int> orient(t.n, 0);
    for (int seed = 0; seed < t.n; ++seed) {
        if (orient[seed] != 0)
            continue;
        orient[seed] = 1;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.adj[a][f];
                // Reversal requires o * o' * sign(psi) = -1.
                int need = -perm_sign(g.map) * orient[a];
                if (orient[g.tet] == 0) {
                    orient[g.tet] = need;
                    stack.push_back(g.tet);
                } else if (orient[g.tet] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    return orient;
}

namespace {

// Identification classes without the manifold link check; these exist for
// every well-formed triangulation.
std::vector<EdgeClass> raw_edge_classes(const Triangulation& t) {
    t.check_valid();
    UnionFind uf(6 * t.n);
    for (int a = 0; a < t.n; ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.adj[a][f];
            for (int k = 0; k < 6; ++k) {
                int u = kEdgePairs[k][0], v = kEdgePairs[k][1];
                if (u == f || v == f)
                    continue;    // edge not on this face
                uf.unite(a * 6 + k, g.tet * 6 + edge_slot_index(g.map[u], g.map[v]));
            }
        }

    std::vector<EdgeClass> classes;
    for (const auto& cls : uf.classes()) {
        EdgeClass ec;
        for (int slot : cls)
            ec.slots.push_back(EdgeSlot{slot / 6, kEdgePairs[slot % 6][0], kEdgePairs[slot % 6][1]});
        classes.push_back(std::move(ec));
    }
    return classes;
}

} // namespace

std::vector<EdgeClass> edge_classes(const Triangulation& t) {
    std::vector<EdgeClass> classes = raw_edge_classes(t);

    // Walk the link of each class as a directed state machine: the state is
    // (tetrahedron, directed edge, exit face) and each step crosses one face
    // gluing. The step map is a permutation of states moving forward around
    // the link circles, so the walk returns to its start in exactly
    // `valence` steps iff the link is a single circle and the carried edge
    // direction comes back unflipped. Fewer steps mean several circles; 2x
    // means the edge is identified with itself reversed.
    for (const EdgeClass& ec : classes) {
        const EdgeSlot& start = ec.slots.front();
        int out0 = -1;
        for (int f = 0; f < 4; ++f)
            if (f != start.u && f != start.v) {
                out0 = f;
                break;
            }
        int tet = start.tet, u = start.u, v = start.v, out = out0;
        int steps = 0;
        const int limit = 2 * ec.valence() + 1;
        do {
            const auto& g = t.adj[tet][out];
            int enter = g.map[out];
            int nu = g.map[u], nv = g.map[v];
            tet = g.tet;
            u = nu;
            v = nv;
            out = 6 - nu - nv - enter;
            ++steps;
        } while (!(tet == start.tet && u == start.u && v == start.v && out == out0) &&
                 steps < limit);
        if (steps != ec.valence())
            throw std::runtime_error(
                "non-manifold edge: link is not a single cycle (valence " +
                std::to_string(ec.valence()) + ", cycle " + std::to_string(steps) + ")");
    }
    return classes;
}

std::vector<int> valence_multiset(const std::vector<EdgeClass>& classes) {
    std::vector<int> v;
    for (const EdgeClass& ec : classes)
        v.push_back(ec.valence());
    std::sort(v.begin(), v.end());
    return v;
}

bool EdgeClass::contains(int tet, int u, int v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(slots.begin(), slots.end(), EdgeSlot{tet, u, v});
}

MTInvariants mt_invariants(const Triangulation& t) {
    if (!check_orientable(t))
        throw std::runtime_error("triangulation is not orientable");
    auto classes = edge_classes(t);

    MTInvariants inv;
    inv.cusp_count = static_cast<int>(classes.size());
    for (const EdgeClass& ec : classes)
        inv.torus_dims.push_back({ec.valence(), 2});
    std::sort(inv.torus_dims.begin(), inv.torus_dims.end());
    inv.octahedron_count = 2 * t.n;
    return inv;
}

PresentationSummary presentation_summary(const Triangulation& t) {
    PresentationSummary p;
    p.genus = t.n + 1;
    p.framed_components = t.n + 1;
    p.framing = 0;
    // One unframed component per edge class; defined whether or not the
    // links are manifold, so the raw classes are used.
    p.unframed_components = static_cast<int>(raw_edge_classes(t).size());
    return p;
}

std::vector<int> small_cusp_edge_classes(const Triangulation& t) {
    if (!t.face_numbered)
        throw std::runtime_error("triangulation carries no face numbering");
    auto classes = edge_classes(t);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        bool hit = false;
        for (int tet = 0; tet < t.n && !hit; ++tet)
            // Edges adjacent to faces {0,1} and {2,3} have vertex pairs
            // {2,3} and {0,1} respectively.
            hit = classes[i].contains(tet, 2, 3) || classes[i].contains(tet, 0, 1);
        if (hit)
            out.push_back(i);
    }
    for (int i : out)
        if (classes[i].valence() != 2)
            throw std::runtime_error("face-numbered edge class has unexpected valence");
    return out;
}

namespace {

// Extends a partial isomorphism by propagation from a seeded tetrahedron;
// returns false on any conflict.
bool propagate(const Triangulation& a, const Triangulation& b, int seed,
               std::vector<int>& tet_image, std::vector<std::array<int, 4>>& vmaps,
               std::vector<bool>& used) {
    std::vector<int> stack{seed};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = a.adj[s][f];
            const auto& h = b.adj[tet_image[s]][vmaps[s][f]];
            // Commutation forces the image of the neighbour:
            // vmap' = h.map o vmap o g.map^-1.
            std::array<int, 4> forced =
                perm_compose(h.map, perm_compose(vmaps[s], perm_inverse(g.map)));
            if (tet_image[g.tet] < 0) {
                if (used[h.tet])
                    return false;
                tet_image[g.tet] = h.tet;
                used[h.tet] = true;
                vmaps[g.tet] = forced;
                stack.push_back(g.tet);
            } else if (tet_image[g.tet] != h.tet || vmaps[g.tet] != forced) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

std::optional<Isomorphism> isomorphic(const Triangulation& a, const Triangulation& b) {
    a.check_valid();
    b.check_valid();
    if (a.n != b.n)
        return std::nullopt;

    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    // Backtrack over the seed assignment of each connected component of `a`.
    struct State {
        std::vector<int> tet_image;
        std::vector<std::array<int, 4>> vmaps;
        std::vector<bool> used;
    };

    std::function<bool(State&)> solve = [&](State& st) -> bool {
        int seed = -1;
        for (int i = 0; i < a.n; ++i)
            if (st.tet_image[i] < 0) {
                seed = i;
                break;
            }
        if (seed < 0)
            return true;
        for (int target = 0; target < b.n; ++target) {
            if (st.used[target])
                continue;
            for (const auto& pm : perms) {
                State trial = st;
                trial.tet_image[seed] = target;
                trial.used[target] = true;
                trial.vmaps[seed] = pm;
                if (propagate(a, b, seed, trial.tet_image, trial.vmaps, trial.used) &&
                    solve(trial)) {
                    st = trial;
                    return true;
                }
            }
        }
        return false;
    };

    State st;
    st.tet_image.assign(a.n, -1);
    st.vmaps.assign(a.n, {0, 1, 2, 3});
    st.used.assign(b.n, false);
    if (!solve(st))
        return std::nullopt;
    Isomorphism iso{st.tet_image, st.vmaps};
    if (!verify_isomorphism(iso, a, b))
        throw std::logic_error("isomorphism witness failed verification");
    return iso;
}

bool verify_isomorphism(const Isomorphism& iso, const Triangulation& a,
                        const Triangulation& b) {
    if (static_cast<int>(iso.tet_image.size()) != a.n || a.n != b.n)
        return false;
    std::vector<bool> hit(b.n, false);
    for (int t : iso.tet_image) {
        if (t < 0 || t >= b.n || hit[t])
            return false;
        hit[t] = true;
    }
    for (int t = 0; t < a.n; ++t) {
        if (!is_permutation(iso.vertex_maps[t]))
            return false;
        for (int f = 0; f < 4; ++f) {
            const auto& g = a.adj[t][f];
            const auto& h = b.adj[iso.tet_image[t]][iso.vertex_maps[t][f]];
            if (h.tet != iso.tet_image[g.tet])
                return false;
            if (perm_compose(h.map, iso.vertex_maps[t]) !=
                perm_compose(iso.vertex_maps[g.tet], g.map))
                return false;
        }
    }
    return true;
}

Triangulation doubled_tetrahedron() {
    Triangulation t;
    t.n = 2;
    t.adj.resize(2);
    for (int f = 0; f < 4; ++f) {
        t.adj[0][f] = Triangulation::Gluing{1, {0, 1, 2, 3}};
        t.adj[1][f] = Triangulation::Gluing{0, {0, 1, 2, 3}};
    }
    t.check_valid();
    return t;
}

Triangulation reference_large_triangulation() {
    Triangulation t;
    t.n = 4;
    t.adj.resize(4);
    const std::array<int, 4> f_map{0, 1, 3, 2};    // swaps vertices 2,3
    const std::array<int, 4> g_map{1, 0, 2, 3};    // swaps vertices 0,1
    auto pair = [&t](int a, int b, int face, const std::array<int, 4>& m) {
        t.adj[a][face] = Triangulation::Gluing{b, m};
        t.adj[b][m[face]] = Triangulation::Gluing{a, perm_inverse(m)};
    };
    // F glues the faces numbered 0 and 1, G the faces numbered 2 and 3,
    // around the cycle t0 -F- t1 -G- t2 -F- t3 -G- t0.
    pair(0, 1, 0, f_map);
    pair(0, 1, 1, f_map);
    pair(2, 3, 0, f_map);
    pair(2, 3, 1, f_map);
    pair(1, 2, 2, g_map);
    pair(1, 2, 3, g_map);
    pair(3, 0, 2, g_map);
    pair(3, 0, 3, g_map);
    t.face_numbered = true;
    t.check_valid();
    return t;
}

std::string to_text(const Triangulation& t) {
    t.check_valid();
    std::ostringstream os;
    os << "tets " << t.n << "\n";
    for (int tet = 0; tet < t.n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.adj[tet][f];
            if (std::pair(g.tet, g.map[f]) < std::pair(tet, f))
                continue;    // partner side already emitted
            os << "glue " << tet + 1 << "." << f << " " << g.tet + 1 << "." << g.map[f] << " ";
            for (int v = 0; v < 4; ++v)
                if (v != f)
                    os << g.map[v];
            os << "\n";
        }
    return os.str();
}

Triangulation from_text(const std::string& text) {
    std::istringstream is(text);
    std::string keyword;
    Triangulation t;
    if (!(is >> keyword >> t.n) || keyword != "tets" || t.n <= 0)
        throw std::runtime_error("triangulation text: missing or malformed header");
    t.adj.resize(t.n);

    std::vector<std::array<bool, 4>> seen(t.n, {false, false, false, false});
    auto parse_side = [&](const std::string& s) {
        auto dotpos = s.find('.');
        if (dotpos == std::string::npos)
            throw std::runtime_error("triangulation text: malformed face reference " + s);
        int tet = std::stoi(s.substr(0, dotpos)) - 1;
        int face = std::stoi(s.substr(dotpos + 1));
        if (tet < 0 || tet >= t.n || face < 0 || face > 3)
            throw std::runtime_error("triangulation text: face reference out of range " + s);
        return std::pair(tet, face);
    };

    std::string a, b, images;
    while (is >> keyword) {
        if (keyword != "glue")
            throw std::runtime_error("triangulation text: unexpected token " + keyword);
        if (!(is >> a >> b >> images) || images.size() != 3)
            throw std::runtime_error("triangulation text: malformed glue line");
        auto [t1, f1] = parse_side(a);
        auto [t2, f2] = parse_side(b);
        std::array<int, 4> map{};
        map[f1] = f2;
        int k = 0;
        for (int v = 0; v < 4; ++v) {
            if (v == f1)
                continue;
            int img = images[k++] - '0';
            if (img < 0 || img > 3)
                throw std::runtime_error("triangulation text: bad vertex image");
            map[v] = img;
        }
        if (!is_permutation(map))
            throw std::runtime_error("triangulation text: images do not form a bijection");
        if (seen[t1][f1] || seen[t2][f2])
            throw std::runtime_error("triangulation text: face glued twice");
        seen[t1][f1] = seen[t2][f2] = true;
        t.adj[t1][f1] = Triangulation::Gluing{t2, map};
        t.adj[t2][f2] = Triangulation::Gluing{t1, perm_inverse(map)};
    }
    t.check_valid();
    return t;
}

} // namespace geobound
