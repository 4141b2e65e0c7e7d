#pragma once

#include <algorithm>
#include <vector>

#include "mlf/polygon.hpp"

namespace mlf {

// A fence is a simple closed polygonal loop in the free space. Vertices are
// stored without repeating the first one.
struct Fence {
    std::vector<Point> vertices;

    // Number of links = number of maximal straight-line segments, counting a
    // run of collinear edges as one.
    int link_count() const {
        std::size_t n = vertices.size();
        if (n < 3) return 0;
        int bends = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vertices[(i + n - 1) % n];
            const Point& b = vertices[i];
            const Point& c = vertices[(i + 1) % n];
            if (orientation_sign(a, b, c) != 0) ++bends;
        }
        return bends;
    }

    bool is_simple() const { return ring_is_simple(vertices); }
};

// Drops duplicate and collinear pass-through vertices.
inline Fence normalized_fence(const Fence& f) {
    std::vector<Point> v;
    for (const Point& p : f.vertices)
        if (v.empty() || !(v.back() == p)) v.push_back(p);
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    std::vector<Point> w;
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[(i + n - 1) % n];
        const Point& b = v[i];
        const Point& c = v[(i + 1) % n];
        if (orientation_sign(a, b, c) != 0) w.push_back(b);
    }
    return Fence{w};
}

// Deterministic representative: lexicographically smallest vertex sequence
// over all rotations and both traversal directions.
inline Fence canonical_fence(const Fence& f) {
    Fence g = normalized_fence(f);
    std::size_t n = g.vertices.size();
    if (n == 0) return g;
    auto seq_less = [&](const std::vector<Point>& a, const std::vector<Point>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    };
    std::vector<Point> best;
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<Point> v = g.vertices;
        if (dir == 1) std::reverse(v.begin(), v.end());
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Point> cand(v.begin() + r, v.end());
            cand.insert(cand.end(), v.begin(), v.begin() + r);
            if (best.empty() || seq_less(cand, best)) best = cand;
        }
    }
    return Fence{best};
}

struct Fencing {
    std::vector<Fence> fences;

    int total_links() const {
        int t = 0;
        for (const Fence& f : fences) t += f.link_count();
        return t;
    }
};

// Winding number of the closed loop around a point not on it.
inline int winding_number(const std::vector<Point>& loop, const Point& p) {
    int w = 0;
    std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = loop[i];
        const Point& b = loop[(i + 1) % n];
        if (cmp(a.y, p.y) <= 0) {
            if (cmp(b.y, p.y) > 0 && orientation_sign(a, b, p) > 0) ++w;
        } else {
            if (cmp(b.y, p.y) <= 0 && orientation_sign(a, b, p) < 0) --w;
        }
    }
    return w;
}

inline bool fence_encloses_point(const Fence& f, const Point& p) {
    return winding_number(f.vertices, p) != 0;
}

} // namespace mlf
