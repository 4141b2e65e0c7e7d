#pragma once

#include <random>
#include <vector>

#include "mlf/hull.hpp"
#include "mlf/instance.hpp"

namespace testgen {

using namespace mlf;

inline Ring square(long cx, long cy, long half) {
    return {{cx - half, cy - half}, {cx + half, cy - half}, {cx + half, cy + half},
            {cx - half, cy + half}};
}

inline Ring rect(long x0, long y0, long x1, long y1) {
    return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

// Instance with a rectangular outer region and the given inner polygons.
inline ColoredInstance boxed_instance(const Ring& outer, std::vector<Ring> inners,
                                      std::vector<int> inner_colors, int kappa = 2,
                                      int outer_color = 1) {
    ColoredInstance inst;
    inst.kappa = kappa;
    inst.polygons.push_back(Polygon{outer, {}});
    inst.colors.push_back(outer_color);
    inst.outer_index = 0;
    for (std::size_t i = 0; i < inners.size(); ++i) {
        inst.polygons.push_back(Polygon{inners[i], {}});
        inst.colors.push_back(inner_colors[i]);
    }
    return inst;
}

// Small random convex polygon with integer coordinates, centered near (cx,cy).
inline Ring random_convex(std::mt19937& rng, long cx, long cy, long radius, int max_verts = 5) {
    while (true) {
        std::uniform_int_distribution<long> d(-radius, radius);
        std::uniform_int_distribution<int> nd(3, max_verts);
        int want = nd(rng);
        std::vector<Point> pts;
        for (int i = 0; i < want + 3; ++i) pts.push_back({cx + d(rng), cy + d(rng)});
        try {
            Ring h = convex_hull(pts);
            if (static_cast<int>(h.size()) <= max_verts) return h;
        } catch (const degeneracy_error&) {
        }
    }
}

} // namespace testgen
