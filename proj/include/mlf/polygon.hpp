#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mlf/geometry.hpp"

namespace mlf {

// A ring is a closed polygonal chain; the edge v[n-1] -> v[0] is implicit.
using Ring = std::vector<Point>;

inline Rat ring_signed_area2(const Ring& r) {
    Rat a = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Point& p = r[i];
        const Point& q = r[(i + 1) % r.size()];
        a += cross(p, q);
    }
    return a;
}

inline bool ring_is_ccw(const Ring& r) { return sgn(ring_signed_area2(r)) > 0; }

inline Ring reversed_ring(Ring r) {
    std::reverse(r.begin(), r.end());
    return r;
}

// Simplicity: distinct vertices, no zero-length or folded-back edges, and no
// contact between non-adjacent edges.
inline bool ring_is_simple(const Ring& r) {
    std::size_t n = r.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i] == r[(i + 1) % n]) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point& c = r[j];
            const Point& d = r[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                if (segments_overlap_collinearly(a, b, c, d)) return false;
                // Shared endpoint is fine; any other contact is not.
                const Point& shared = (j == i + 1) ? b : a;
                if (segments_properly_cross(a, b, c, d)) return false;
                if (point_on_open_segment(c, a, b) && c != shared) return false;
                if (point_on_open_segment(d, a, b) && d != shared) return false;
                if (point_on_open_segment(a, c, d) && a != shared) return false;
                if (point_on_open_segment(b, c, d) && b != shared) return false;
            } else {
                if (segments_intersect(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

enum class RingLocation { inside, boundary, outside };

inline RingLocation locate_in_ring(const Point& p, const Ring& r) {
    std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, r[i], r[(i + 1) % n])) return RingLocation::boundary;
    }
    // Exact crossing count of the ray from p toward +x.
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        bool a_above = cmp(a.y, p.y) > 0;
        bool b_above = cmp(b.y, p.y) > 0;
        if (a_above == b_above) continue;
        // x coordinate where edge crosses the horizontal line through p.
        Rat t = (p.y - a.y) / (b.y - a.y);
        Rat xi = a.x + t * (b.x - a.x);
        if (cmp(xi, p.x) > 0) ++crossings;
    }
    return (crossings % 2 == 1) ? RingLocation::inside : RingLocation::outside;
}

inline bool strictly_inside_ring(const Point& p, const Ring& r) {
    return locate_in_ring(p, r) == RingLocation::inside;
}

// Some point strictly inside a simple ring (orientation irrelevant).
inline Point ring_interior_point(const Ring& ring) {
    Ring r = ring;
    if (!ring_is_ccw(r)) r = reversed_ring(r);
    std::size_t n = r.size();
    std::size_t vi = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (r[i] < r[vi]) vi = i;
    const Point& a = r[(vi + n - 1) % n];
    const Point& v = r[vi];
    const Point& c = r[(vi + 1) % n];
    // Farthest reflex vertex inside triangle (a, v, c), if any.
    std::optional<std::size_t> best;
    Rat best_dist = 0; // abs area relative to line a-c
    for (std::size_t i = 0; i < n; ++i) {
        if (i == vi || i == (vi + n - 1) % n || i == (vi + 1) % n) continue;
        const Point& q = r[i];
        if (orientation_sign(a, v, q) >= 0 && orientation_sign(v, c, q) >= 0 &&
            orientation_sign(c, a, q) >= 0) {
            Rat d = abs((c.x - a.x) * (q.y - a.y) - (c.y - a.y) * (q.x - a.x));
            if (!best || cmp(d, best_dist) > 0) {
                best = i;
                best_dist = d;
            }
        }
    }
    if (best) return midpoint(v, r[*best]);
    return midpoint(v, midpoint(a, c));
}

inline bool ring_is_strictly_convex_ccw(const Ring& r) {
    std::size_t n = r.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation_sign(r[i], r[(i + 1) % n], r[(i + 2) % n]) <= 0) return false;
    }
    return true;
}

// Polygon: CCW outer ring, CW holes strictly inside.
struct Polygon {
    Ring outer;
    std::vector<Ring> holes;
};

inline Rat polygon_area2(const Polygon& p) {
    Rat a = abs(ring_signed_area2(p.outer));
    for (const Ring& h : p.holes) a -= abs(ring_signed_area2(h));
    return a;
}

// Location of a point relative to the closed region bounded by the polygon
// (holes removed).
inline RingLocation locate_in_polygon(const Point& pt, const Polygon& p) {
    RingLocation lo = locate_in_ring(pt, p.outer);
    if (lo != RingLocation::inside) return lo;
    for (const Ring& h : p.holes) {
        RingLocation lh = locate_in_ring(pt, h);
        if (lh == RingLocation::boundary) return RingLocation::boundary;
        if (lh == RingLocation::inside) return RingLocation::outside;
    }
    return RingLocation::inside;
}

inline Point polygon_interior_point(const Polygon& p) {
    Point q = ring_interior_point(p.outer);
    if (locate_in_polygon(q, p) == RingLocation::inside) return q;
    // Scan the horizontal line through q for an interior interval. Nudging the
    // line breaks vertex coincidences.
    for (long attempt = 0; attempt < 64; ++attempt) {
        Rat y = q.y + Rat(attempt, 64 + attempt);
        bool degenerate = false;
        std::vector<Rat> xs;
        auto cut = [&](const Ring& r) {
            for (std::size_t i = 0; i < r.size() && !degenerate; ++i) {
                const Point& a = r[i];
                const Point& b = r[(i + 1) % r.size()];
                if (cmp(a.y, y) == 0 || cmp(b.y, y) == 0) {
                    degenerate = true;
                    return;
                }
                if ((cmp(a.y, y) > 0) != (cmp(b.y, y) > 0)) {
                    Rat t = (y - a.y) / (b.y - a.y);
                    xs.push_back(a.x + t * (b.x - a.x));
                }
            }
        };
        cut(p.outer);
        for (const Ring& h : p.holes) cut(h);
        if (degenerate) continue;
        std::sort(xs.begin(), xs.end());
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            Point c{(xs[i] + xs[i + 1]) / 2, y};
            if (locate_in_polygon(c, p) == RingLocation::inside) return c;
        }
    }
    throw degeneracy_error("could not find interior point of polygon");
}

inline std::vector<Point> all_ring_vertices(const Polygon& p) {
    std::vector<Point> v = p.outer;
    for (const Ring& h : p.holes) v.insert(v.end(), h.begin(), h.end());
    return v;
}

// Positive-distance separation test used by instance validation: no boundary
// contact and neither region contains the other.
inline bool polygons_strictly_disjoint(const Polygon& a, const Polygon& b) {
    auto edges = [](const Polygon& p) {
        std::vector<std::pair<Point, Point>> e;
        auto add = [&](const Ring& r) {
            for (std::size_t i = 0; i < r.size(); ++i)
                e.emplace_back(r[i], r[(i + 1) % r.size()]);
        };
        add(p.outer);
        for (const Ring& h : p.holes) add(h);
        return e;
    };
    for (const auto& [p1, q1] : edges(a))
        for (const auto& [p2, q2] : edges(b))
            if (segments_intersect(p1, q1, p2, q2)) return false;
    // No boundary contact: nesting (even inside a hole) is also rejected.
    if (locate_in_ring(a.outer.front(), b.outer) != RingLocation::outside) return false;
    if (locate_in_ring(b.outer.front(), a.outer) != RingLocation::outside) return false;
    return true;
}

} // namespace mlf
