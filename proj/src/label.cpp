#include "geobound/label.hpp"

#include <algorithm>

namespace geobound {

std::string color_name(FacetColor c) {
    switch (c) {
    case FacetColor::Red: return "red";
    case FacetColor::Green: return "green";
    case FacetColor::Blue: return "blue";
    }
    return "?";
}

int Label::zero_position() const {
    if (zero_count() != 1)
        throw std::invalid_argument("label " + str() + " does not have exactly one zero");
    for (int i = 0; i < 4; ++i)
        if (e[i] == 0)
            return i;
    return -1;
}

std::string Label::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        s += e[i] > 0 ? '+' : (e[i] < 0 ? '-' : '0');
        if (i < 3)
            s += ',';
    }
    s += ')';
    return s;
}

FacetColor label_color(const Label& l) {
    if (l.zero_count() == 3)
        return FacetColor::Green;
    if (l.zero_count() != 0)
        throw std::invalid_argument("label " + l.str() + " is not a facet label");
    return l.minus_count() % 2 == 0 ? FacetColor::Red : FacetColor::Blue;
}

namespace {

std::vector<Label> labels_with_zero_count(int zeros) {
    std::vector<Label> out;
    for (int m = 0; m < 81; ++m) {
        int d = m;
        Label l;
        for (int i = 0; i < 4; ++i) {
            l.e[i] = d % 3 - 1;
            d /= 3;
        }
        if (l.zero_count() == zeros)
            out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Label> sign_labels() { return labels_with_zero_count(0); }
std::vector<Label> stratum2_labels() { return labels_with_zero_count(1); }
std::vector<Label> cusp_labels() { return labels_with_zero_count(2); }

} // namespace geobound
