#include "geobound/exact.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace geobound {

// Fraction-free row reduction of the difference matrix. Entries stay tiny
// (coordinates are in {-2..2}), so int64 never overflows.
int affine_rank(std::span<const Vec4> points) {
    if (points.empty())
        throw std::invalid_argument("empty point set");

    std::vector<std::array<int64_t, 4>> rows;
    rows.reserve(points.size() - 1);
    for (size_t i = 1; i < points.size(); ++i) {
        std::array<int64_t, 4> r;
        for (int c = 0; c < 4; ++c)
            r[c] = points[i][c] - points[0][c];
        rows.push_back(r);
    }

    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][col] == 0)
                continue;
            int64_t a = rows[rank][col];
            int64_t b = rows[r][col];
            for (int c = 0; c < 4; ++c)
                rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
        }
        ++rank;
    }
    return rank;
}

AffineSpan affine_span(std::span<const Vec4> points) {
    return AffineSpan{points.empty() ? Vec4{} : points[0], affine_rank(points)};
}

} // namespace geobound
