#pragma once

#include <span>

#include "geobound/signed_perm.hpp"

namespace geobound {

// Dimension of the affine hull of a nonempty point set, computed by
// fraction-free integer elimination on the difference matrix. Pivot is the
// first nonzero entry in column order with ties broken by lowest row index,
// so results are reproducible. Throws on an empty list.
int affine_rank(std::span<const Vec4> points);

struct AffineSpan {
    Vec4 basepoint{};
    int rank = 0;
};

AffineSpan affine_span(std::span<const Vec4> points);

} // namespace geobound
