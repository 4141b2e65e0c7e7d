#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "mlf/instance.hpp"

namespace mlf {

// Constrained triangulation of the closed free space. Corners of the input
// polygons are the only vertices; no Steiner points.
struct Triangulation {
    std::vector<Point> vertices;
    std::vector<std::array<int, 3>> triangles; // CCW
    std::vector<std::array<int, 3>> neighbors; // across edge (v[i], v[i+1]), -1 on boundary
    std::set<std::pair<int, int>> boundary_edges;

    int find_vertex(const Point& p) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == p) return static_cast<int>(i);
        return -1;
    }

    std::pair<int, int> edge_key(int a, int b) const { return {std::min(a, b), std::max(a, b)}; }

    Point centroid(int t) const {
        const auto& tr = triangles[t];
        return {(vertices[tr[0]].x + vertices[tr[1]].x + vertices[tr[2]].x) / 3,
                (vertices[tr[0]].y + vertices[tr[1]].y + vertices[tr[2]].y) / 3};
    }
};

namespace detail {

inline bool point_in_free_space_strict(const Point& p, const ColoredInstance& inst) {
    if (locate_in_ring(p, inst.outer_polygon().outer) != RingLocation::inside) return false;
    for (std::size_t i : inst.inner_indices())
        if (locate_in_polygon(p, inst.polygons[i]) != RingLocation::outside) return false;
    return true;
}

} // namespace detail

inline Triangulation triangulate_free_space(const ColoredInstance& inst) {
    if (!inst.has_outer())
        throw precondition_error(
            "free space is unbounded: no outer polygon; emulate one by adding a large "
            "bounding rectangle of the outer color");
    require_valid_instance(inst);

    Triangulation tri;
    std::vector<std::pair<int, int>> boundary;
    auto add_ring = [&](const Ring& r) {
        int base = static_cast<int>(tri.vertices.size());
        for (const Point& p : r) tri.vertices.push_back(p);
        int n = static_cast<int>(r.size());
        for (int i = 0; i < n; ++i) boundary.emplace_back(base + i, base + (i + 1) % n);
    };
    add_ring(inst.outer_polygon().outer);
    for (std::size_t i : inst.inner_indices()) {
        add_ring(inst.polygons[i].outer);
        for (const Ring& h : inst.polygons[i].holes) add_ring(h);
    }
    const auto& V = tri.vertices;
    int nv = static_cast<int>(V.size());

    auto is_boundary = [&](int a, int b) {
        for (auto& [u, v] : boundary)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    };

    // Candidate diagonals: open segment avoids all vertices and boundary
    // edges and runs through free space.
    struct Cand {
        Rat len2;
        int a, b;
    };
    std::vector<Cand> cands;
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            if (V[a] == V[b] || is_boundary(a, b)) continue;
            bool ok = true;
            for (int c = 0; c < nv && ok; ++c)
                if (c != a && c != b && point_on_open_segment(V[c], V[a], V[b])) ok = false;
            for (auto& [u, w] : boundary) {
                if (!ok) break;
                if (u == a || u == b || w == a || w == b) {
                    if (segments_overlap_collinearly(V[a], V[b], V[u], V[w])) ok = false;
                    continue;
                }
                if (segments_properly_cross(V[a], V[b], V[u], V[w]) ||
                    segments_overlap_collinearly(V[a], V[b], V[u], V[w]))
                    ok = false;
            }
            if (ok && !detail::point_in_free_space_strict(midpoint(V[a], V[b]), inst)) ok = false;
            if (ok) {
                Point d = V[b] - V[a];
                cands.push_back({dot(d, d), a, b});
            }
        }
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
        int c = cmp(x.len2, y.len2);
        if (c != 0) return c < 0;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    std::vector<std::pair<int, int>> diagonals;
    for (const Cand& c : cands) {
        bool ok = true;
        for (auto& [u, w] : diagonals) {
            if (u == c.a || u == c.b || w == c.a || w == c.b) {
                if (segments_overlap_collinearly(V[c.a], V[c.b], V[u], V[w])) { ok = false; break; }
                continue;
            }
            if (segments_properly_cross(V[c.a], V[c.b], V[u], V[w])) { ok = false; break; }
        }
        if (ok) diagonals.emplace_back(c.a, c.b);
    }

    // Face extraction: sort directed edges around each vertex by angle, trace
    // each face once; keep CCW faces whose interior lies in free space.
    std::vector<std::vector<int>> adj(nv);
    auto add_edge = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (auto& [u, w] : boundary) add_edge(u, w);
    for (auto& [u, w] : diagonals) add_edge(u, w);

    auto angle_less = [&](int origin, int p, int q) {
        Point dp = V[p] - V[origin], dq = V[q] - V[origin];
        auto half = [](const Point& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; };
        int hp = half(dp), hq = half(dq);
        if (hp != hq) return hp < hq;
        return sgn(cross(dp, dq)) > 0;
    };
    for (int v = 0; v < nv; ++v)
        std::sort(adj[v].begin(), adj[v].end(),
                  [&](int p, int q) { return angle_less(v, p, q); });

    std::map<std::pair<int, int>, int> pos; // directed edge -> index in adj[from]
    for (int v = 0; v < nv; ++v)
        for (std::size_t i = 0; i < adj[v].size(); ++i) pos[{v, adj[v][i]}] = static_cast<int>(i);

    std::set<std::pair<int, int>> used;
    for (int v = 0; v < nv; ++v) {
        for (int w : adj[v]) {
            if (used.count({v, w})) continue;
            std::vector<int> face;
            int a = v, b = w;
            do {
                used.insert({a, b});
                face.push_back(a);
                // Next edge of the face left of (a,b): clockwise successor of
                // (b,a) around b.
                int i = pos[{b, a}];
                int j = (i + static_cast<int>(adj[b].size()) - 1) % static_cast<int>(adj[b].size());
                a = b;
                b = adj[a][j];
            } while (!(a == v && b == w));
            Ring r;
            for (int id : face) r.push_back(V[id]);
            if (sgn(ring_signed_area2(r)) <= 0) continue; // outer or hole-bounding cycle
            Point inside = ring_interior_point(r);
            if (!detail::point_in_free_space_strict(inside, inst)) continue;
            if (face.size() != 3)
                throw degeneracy_error("triangulation produced a non-triangular free face");
            tri.triangles.push_back({face[0], face[1], face[2]});
        }
    }

    for (auto& [u, w] : boundary) tri.boundary_edges.insert(tri.edge_key(u, w));

    // Adjacency across shared edges; every interior edge must pair exactly two
    // triangles.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_tris;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t)
        for (int e = 0; e < 3; ++e) {
            int a = tri.triangles[t][e], b = tri.triangles[t][(e + 1) % 3];
            edge_tris[tri.edge_key(a, b)].push_back({static_cast<int>(t), e});
        }
    tri.neighbors.assign(tri.triangles.size(), {-1, -1, -1});
    for (const auto& [key, owners] : edge_tris) {
        if (tri.boundary_edges.count(key)) {
            if (owners.size() != 1)
                throw degeneracy_error("boundary edge shared by " +
                                       std::to_string(owners.size()) + " triangles");
        } else {
            if (owners.size() != 2)
                throw degeneracy_error("interior edge not shared by exactly two triangles");
            tri.neighbors[owners[0].first][owners[0].second] = owners[1].first;
            tri.neighbors[owners[1].first][owners[1].second] = owners[0].first;
        }
    }

    // Exact area accounting: the triangles must tile the free space.
    Rat free_area = abs(ring_signed_area2(inst.outer_polygon().outer));
    for (std::size_t i : inst.inner_indices()) free_area -= polygon_area2(inst.polygons[i]);
    Rat tri_area = 0;
    for (const auto& t : tri.triangles) {
        Rat a2 = cross(V[t[1]] - V[t[0]], V[t[2]] - V[t[0]]);
        if (sgn(a2) <= 0) throw degeneracy_error("degenerate or misoriented triangle");
        tri_area += a2;
    }
    if (tri_area != free_area)
        throw degeneracy_error("triangulation area mismatch: free space not fully covered");
    return tri;
}

} // namespace mlf
