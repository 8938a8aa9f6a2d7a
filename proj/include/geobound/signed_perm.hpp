#pragma once

#include <array>
#include <compare>
#include <vector>

#include "geobound/label.hpp"

namespace geobound {

// Integer point of R^4. 24-cell vertices are the permutations of
// (±1,±1,0,0); facet normals are stored doubled so that every hyperplane
// reads <n,v> = 2 with integer arithmetic throughout.
using Vec4 = std::array<int, 4>;

int dot(const Vec4& a, const Vec4& b);

// A signed coordinate permutation: (m v)[i] = sign[i] * v[perm[i]].
// These are all the isometries used anywhere in the construction.
struct SignedPerm {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> sign{1, 1, 1, 1};

    auto operator<=>(const SignedPerm&) const = default;

    Vec4 apply(const Vec4& v) const {
        Vec4 r;
        for (int i = 0; i < 4; ++i)
            r[i] = sign[i] * v[perm[i]];
        return r;
    }

    // Same action on sign tuples; zeros are fixed by the sign flips.
    Label apply(const Label& l) const {
        Label r;
        for (int i = 0; i < 4; ++i)
            r.e[i] = sign[i] * l.e[perm[i]];
        return r;
    }

    SignedPerm inverse() const;

    // Sign of the underlying permutation times the product of the signs.
    int determinant() const;

    // Index where the entry at position p lands under the action.
    int position_image(int p) const;

    bool is_identity() const { return *this == SignedPerm{}; }
};

// outer o inner (inner applied first).
SignedPerm compose(const SignedPerm& outer, const SignedPerm& inner);

SignedPerm transposition(int i, int j);
SignedPerm reflection(int axis);

// The facet-pairing maps of the construction:
//   F(x,y,z,w) = (x,y,w,z)
//   G(x,y,z,w) = (y,x,z,w)
//   K(x,y,z,w) = (-y,-x,z,w)
SignedPerm map_F();
SignedPerm map_G();
SignedPerm map_K();

// Closure of {reflections in x_i = 0} and {coordinate transpositions}
// under composition; 384 elements, sorted.
const std::vector<SignedPerm>& coordinate_symmetry_group();

// A facet pairing reverses orientation iff det(map) times the product of
// the copy orientations is -1 (the two copies of the 24-cell carry
// opposite reference orientations).
bool orientation_reversing(const SignedPerm& map, bool cross_copy);

} // namespace geobound
