#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace geobound {

enum class FacetColor { Red, Green, Blue };

std::string color_name(FacetColor c);

// A 4-tuple over {+,-,0}, stored as {+1,-1,0}. Labels name the strata of
// the mirrored 24-cell complex by the sign pattern of the supporting
// hyperplane normal (facets) or of the vertex itself (cusps):
//   0 zeros  -> red/blue octahedral facet (boundary 3-stratum),
//   1 zero   -> red-blue triangle (boundary 2-stratum),
//   2 zeros  -> vertex of the 24-cell (cusp),
//   3 zeros  -> green facet.
struct Label {
    std::array<int, 4> e{0, 0, 0, 0};

    auto operator<=>(const Label&) const = default;

    int operator[](int i) const { return e[i]; }

    int zero_count() const {
        int z = 0;
        for (int v : e)
            if (v == 0)
                ++z;
        return z;
    }

    int minus_count() const {
        int m = 0;
        for (int v : e)
            if (v < 0)
                ++m;
        return m;
    }

    Label negated() const { return Label{{-e[0], -e[1], -e[2], -e[3]}}; }

    Label with_entry(int pos, int value) const {
        Label l = *this;
        l.e[pos] = value;
        return l;
    }

    // Position of the unique zero entry; throws unless zero_count() == 1.
    int zero_position() const;

    // True when every nonzero entry of *this matches `coarser` at the same
    // position. This is the incidence rule between strata: a stratum lies in
    // a higher-dimensional one exactly when its label refines the other's.
    bool refines(const Label& coarser) const {
        for (int i = 0; i < 4; ++i)
            if (e[i] != 0 && e[i] != coarser.e[i])
                return false;
        return true;
    }

    std::string str() const;
};

// Color of a facet label: green when only one coordinate entry is nonzero,
// otherwise red/blue by the parity of minus signs (even = red).
FacetColor label_color(const Label& l);

// The 16 no-zero labels, the 32 one-zero labels and the 24 two-zero labels,
// each list sorted.
std::vector<Label> sign_labels();
std::vector<Label> stratum2_labels();
std::vector<Label> cusp_labels();

} // namespace geobound
