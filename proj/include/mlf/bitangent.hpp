#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "mlf/polygon.hpp"

namespace mlf {

struct Bitangent {
    Segment seg;  // maximal segment between extreme contact points
    bool inner;   // polygons on opposite sides of the supporting line
};

namespace detail {

// Canonical coefficients of the (undirected) line through a, b.
inline std::tuple<Rat, Rat, Rat> line_key(const Point& a, const Point& b) {
    Rat A = b.y - a.y, B = a.x - b.x;
    Rat C = A * a.x + B * a.y;
    const Rat& lead = (A != 0) ? A : B;
    return {A / lead, B / lead, C / lead};
}

// Strictly convex CCW ring assumed: local support test at vertex i against
// the line through (p, q).
inline bool supports_at(const Ring& r, std::size_t i, const Point& p, const Point& q,
                        int& strict_side) {
    const Point& prev = r[(i + r.size() - 1) % r.size()];
    const Point& next = r[(i + 1) % r.size()];
    int sp = orientation_sign(p, q, prev);
    int sn = orientation_sign(p, q, next);
    if (sp * sn < 0) return false;
    strict_side = (sp != 0) ? sp : sn;
    return strict_side != 0;
}

} // namespace detail

// All maximal segments whose supporting line touches both convex polygons
// without crossing either interior. Exactly four when A and B are disjoint;
// overlapping inputs yield whatever reduced set remains.
inline std::vector<Bitangent> bitangents(const Ring& A, const Ring& B) {
    struct Cand {
        int side_a, side_b;
        Point pa, pb;
    };
    std::map<std::tuple<Rat, Rat, Rat>, Cand> by_line;
    for (std::size_t i = 0; i < A.size(); ++i) {
        for (std::size_t j = 0; j < B.size(); ++j) {
            const Point& a = A[i];
            const Point& b = B[j];
            if (a == b) continue;
            int sa = 0, sb = 0;
            if (!detail::supports_at(A, i, a, b, sa)) continue;
            if (!detail::supports_at(B, j, a, b, sb)) continue;
            by_line.insert({detail::line_key(a, b), Cand{sa, sb, a, b}});
        }
    }
    std::vector<Bitangent> out;
    for (const auto& [key, c] : by_line) {
        // Collect every contact point of both polygons on this line and span
        // the extremes.
        Point dir = c.pb - c.pa;
        std::vector<Point> contacts;
        bool identical_contacts = true;
        for (const Point& v : A)
            if (orientation_sign(c.pa, c.pb, v) == 0) contacts.push_back(v);
        std::size_t na = contacts.size();
        for (const Point& v : B)
            if (orientation_sign(c.pa, c.pb, v) == 0) {
                bool dup = false;
                for (std::size_t t = 0; t < na; ++t) dup |= (contacts[t] == v);
                identical_contacts &= dup;
                contacts.push_back(v);
            }
        identical_contacts &= (contacts.size() == 2 * na);
        if (identical_contacts) continue; // coincident boundaries, no usable tangent
        Point lo = contacts[0], hi = contacts[0];
        Rat tlo = dot(dir, lo), thi = tlo;
        for (const Point& v : contacts) {
            Rat t = dot(dir, v);
            if (cmp(t, tlo) < 0) { tlo = t; lo = v; }
            if (cmp(t, thi) > 0) { thi = t; hi = v; }
        }
        out.push_back(Bitangent{Segment{lo, hi}, c.side_a != c.side_b});
    }
    return out;
}

} // namespace mlf
