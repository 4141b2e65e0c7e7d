#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <ostream>
#include <string>

#include "mlf/rational.hpp"

namespace mlf {

struct Point {
    Rat x, y;

    Point() : x(0), y(0) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic; used for canonical orderings and tie-breaking.
    friend bool operator<(const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return cmp(a.y, b.y) < 0;
    }

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rat& s, const Point& a) { return {s * a.x, s * a.y}; }

    friend std::ostream& operator<<(std::ostream& os, const Point& p) {
        return os << "(" << format_rat(p.x) << ", " << format_rat(p.y) << ")";
    }
};

inline Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

enum class Side { left, right, collinear };

// Exact sign of the cross product of (q-p, r-p).
inline int orientation_sign(const Point& p, const Point& q, const Point& r) {
    Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(det);
}

inline Side orientation(const Point& p, const Point& q, const Point& r) {
    int s = orientation_sign(p, q, r);
    if (s > 0) return Side::left;
    if (s < 0) return Side::right;
    return Side::collinear;
}

inline std::string to_string(Side s) {
    switch (s) {
        case Side::left: return "left";
        case Side::right: return "right";
        default: return "collinear";
    }
}

} // namespace mlf
