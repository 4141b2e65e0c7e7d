#pragma once

#include <optional>
#include <utility>

#include "mlf/point.hpp"

namespace mlf {

struct Segment {
    Point a, b;
};

// p collinear with [a,b] assumed; true if p lies within the closed span.
inline bool collinear_point_in_span(const Point& p, const Point& a, const Point& b) {
    if (a.x != b.x)
        return (cmp(std::min(a.x, b.x), p.x) <= 0) && (cmp(p.x, std::max(a.x, b.x)) <= 0);
    return (cmp(std::min(a.y, b.y), p.y) <= 0) && (cmp(p.y, std::max(a.y, b.y)) <= 0);
}

inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation_sign(a, b, p) != 0) return false;
    if (a == b) return p == a;
    return collinear_point_in_span(p, a, b);
}

inline bool point_on_open_segment(const Point& p, const Point& a, const Point& b) {
    return point_on_segment(p, a, b) && p != a && p != b;
}

// Proper crossing: the open segments intersect in exactly one point.
inline bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                                    const Point& d) {
    int o1 = orientation_sign(a, b, c);
    int o2 = orientation_sign(a, b, d);
    int o3 = orientation_sign(c, d, a);
    int o4 = orientation_sign(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

// Any shared point, endpoints included.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (segments_properly_cross(a, b, c, d)) return true;
    return point_on_segment(c, a, b) || point_on_segment(d, a, b) ||
           point_on_segment(a, c, d) || point_on_segment(b, c, d);
}

// Collinear segments sharing more than a single point.
inline bool segments_overlap_collinearly(const Point& a, const Point& b, const Point& c,
                                         const Point& d) {
    if (orientation_sign(a, b, c) != 0 || orientation_sign(a, b, d) != 0) return false;
    if (a == b || c == d) return false;
    // Project on the dominant axis of ab.
    auto coord = [&](const Point& p) -> const Rat& { return (a.x != b.x) ? p.x : p.y; };
    Rat lo1 = std::min(coord(a), coord(b)), hi1 = std::max(coord(a), coord(b));
    Rat lo2 = std::min(coord(c), coord(d)), hi2 = std::max(coord(c), coord(d));
    return cmp(std::max(lo1, lo2), std::min(hi1, hi2)) < 0;
}

// Intersection point of the (infinite) lines ab and cd; nullopt when parallel.
inline std::optional<Point> line_intersection(const Point& a, const Point& b, const Point& c,
                                              const Point& d) {
    Point r = b - a, s = d - c;
    Rat den = cross(r, s);
    if (den == 0) return std::nullopt;
    Rat t = cross(c - a, s) / den;
    return Point{a.x + t * r.x, a.y + t * r.y};
}

// Parameter of p along a->b (p assumed on the line, a != b).
inline Rat line_param(const Point& a, const Point& b, const Point& p) {
    if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
    return (p.y - a.y) / (b.y - a.y);
}

inline Point interpolate(const Point& a, const Point& b, const Rat& t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

} // namespace mlf
