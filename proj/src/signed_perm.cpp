#include "geobound/signed_perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geobound {

int dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm inv;
    for (int i = 0; i < 4; ++i) {
        inv.perm[perm[i]] = i;
        inv.sign[perm[i]] = sign[i];
    }
    return inv;
}

int SignedPerm::determinant() const {
    int parity = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (perm[i] > perm[j])
                parity = -parity;
    return parity * sign[0] * sign[1] * sign[2] * sign[3];
}

int SignedPerm::position_image(int p) const {
    for (int i = 0; i < 4; ++i)
        if (perm[i] == p)
            return i;
    throw std::logic_error("signed permutation has no preimage slot");
}

SignedPerm compose(const SignedPerm& outer, const SignedPerm& inner) {
    SignedPerm r;
    for (int i = 0; i < 4; ++i) {
        r.perm[i] = inner.perm[outer.perm[i]];
        r.sign[i] = outer.sign[i] * inner.sign[outer.perm[i]];
    }
    return r;
}

SignedPerm transposition(int i, int j) {
    SignedPerm m;
    std::swap(m.perm[i], m.perm[j]);
    return m;
}

SignedPerm reflection(int axis) {
    SignedPerm m;
    m.sign[axis] = -1;
    return m;
}

SignedPerm map_F() { return transposition(2, 3); }
SignedPerm map_G() { return transposition(0, 1); }

SignedPerm map_K() {
    SignedPerm m = transposition(0, 1);
    m.sign[0] = m.sign[1] = -1;
    return m;
}

const std::vector<SignedPerm>& coordinate_symmetry_group() {
    static const std::vector<SignedPerm> group = [] {
        std::vector<SignedPerm> gens;
        for (int i = 0; i < 4; ++i)
            gens.push_back(reflection(i));
        for (int i = 0; i + 1 < 4; ++i)
            gens.push_back(transposition(i, i + 1));

        std::set<SignedPerm> seen{SignedPerm{}};
        std::vector<SignedPerm> frontier{SignedPerm{}};
        while (!frontier.empty()) {
            std::vector<SignedPerm> next;
            for (const SignedPerm& m : frontier)
                for (const SignedPerm& g : gens) {
                    SignedPerm h = compose(g, m);
                    if (seen.insert(h).second)
                        next.push_back(h);
                }
            frontier = std::move(next);
        }
        return std::vector<SignedPerm>(seen.begin(), seen.end());
    }();
    return group;
}

bool orientation_reversing(const SignedPerm& map, bool cross_copy) {
    int copy_product = cross_copy ? -1 : 1;
    return map.determinant() * copy_product == -1;
}

} // namespace geobound
