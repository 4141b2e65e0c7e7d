#pragma once

#include <algorithm>
#include <vector>

#include "mlf/polygon.hpp"

namespace mlf {

// Monotone chain. Returns the hull as a strictly convex CCW ring whose
// vertices are input points; collinear points on the hull boundary are
// dropped.
inline Ring convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw degeneracy_error("convex hull of fewer than 3 distinct points");
    std::size_t n = pts.size();
    std::vector<Point> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) throw degeneracy_error("convex hull degenerate: input points collinear");
    return h;
}

} // namespace mlf
