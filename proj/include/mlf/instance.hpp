#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlf/polygon.hpp"

namespace mlf {

// Colored interior-disjoint polygons. When the unbounded outer polygon Q is
// present it is stored through its complement: polygons[*outer_index].outer is
// the simple ring bounding R^2 \ Q, and the free space lives inside it.
struct ColoredInstance {
    std::vector<Polygon> polygons;
    std::vector<int> colors; // 1..kappa, parallel to polygons
    std::optional<std::size_t> outer_index;
    int kappa = 2;

    bool has_outer() const { return outer_index.has_value(); }

    const Polygon& outer_polygon() const { return polygons[*outer_index]; }

    int outer_color() const { return colors[*outer_index]; }

    std::vector<std::size_t> inner_indices() const {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < polygons.size(); ++i)
            if (!outer_index || i != *outer_index) v.push_back(i);
        return v;
    }

    std::size_t total_corners() const {
        std::size_t n = 0;
        for (const Polygon& p : polygons) {
            n += p.outer.size();
            for (const Ring& h : p.holes) n += h.size();
        }
        return n;
    }
};

// Every problem found, one message each; empty means valid.
inline std::vector<std::string> validate_instance(const ColoredInstance& inst) {
    std::vector<std::string> bad;
    auto note = [&](const std::string& s) { bad.push_back(s); };

    if (inst.kappa < 2) note("color-count: kappa must be at least 2");
    if (inst.polygons.size() != inst.colors.size())
        note("color-count: one color per polygon required");
    for (std::size_t i = 0; i < inst.colors.size(); ++i)
        if (inst.colors[i] < 1 || inst.colors[i] > inst.kappa)
            note("color-range: polygon " + std::to_string(i) + " has color outside 1..kappa");
    if (inst.outer_index && *inst.outer_index >= inst.polygons.size())
        note("outer-index: out of range");

    for (std::size_t i = 0; i < inst.polygons.size(); ++i) {
        const Polygon& p = inst.polygons[i];
        std::string id = "polygon " + std::to_string(i);
        if (p.outer.size() < 3) note("ring-size: " + id + " outer ring has fewer than 3 vertices");
        if (!ring_is_simple(p.outer)) note("ring-simple: " + id + " outer ring is not simple");
        if (!ring_is_ccw(p.outer)) note("ring-orientation: " + id + " outer ring is not CCW");
        for (std::size_t h = 0; h < p.holes.size(); ++h) {
            const Ring& hr = p.holes[h];
            std::string hid = id + " hole " + std::to_string(h);
            if (hr.size() < 3) note("ring-size: " + hid + " has fewer than 3 vertices");
            if (!ring_is_simple(hr)) note("ring-simple: " + hid + " is not simple");
            if (ring_is_ccw(hr)) note("ring-orientation: " + hid + " is not CW");
            for (const Point& v : hr)
                if (locate_in_ring(v, p.outer) != RingLocation::inside) {
                    note("hole-containment: " + hid + " not strictly inside outer ring");
                    break;
                }
            for (std::size_t i2 = 0; i2 < hr.size(); ++i2)
                for (std::size_t j = 0; j < p.outer.size(); ++j)
                    if (segments_intersect(hr[i2], hr[(i2 + 1) % hr.size()], p.outer[j],
                                           p.outer[(j + 1) % p.outer.size()])) {
                        note("hole-containment: " + hid + " touches outer ring");
                        i2 = hr.size() - 1;
                        break;
                    }
        }
        for (std::size_t h1 = 0; h1 < p.holes.size(); ++h1)
            for (std::size_t h2 = h1 + 1; h2 < p.holes.size(); ++h2) {
                Polygon a{reversed_ring(p.holes[h1]), {}};
                Polygon b{reversed_ring(p.holes[h2]), {}};
                if (!polygons_strictly_disjoint(a, b))
                    note("hole-disjoint: " + id + " holes " + std::to_string(h1) + "," +
                         std::to_string(h2) + " are not disjoint");
            }
    }
    if (!bad.empty()) return bad; // geometry below assumes well-formed rings

    auto inner = inst.inner_indices();
    for (std::size_t a = 0; a < inner.size(); ++a)
        for (std::size_t b = a + 1; b < inner.size(); ++b)
            if (!polygons_strictly_disjoint(inst.polygons[inner[a]], inst.polygons[inner[b]]))
                note("interior-disjoint: polygons " + std::to_string(inner[a]) + " and " +
                     std::to_string(inner[b]) + " touch or overlap");

    if (inst.outer_index) {
        const Ring& q = inst.outer_polygon().outer;
        if (!inst.outer_polygon().holes.empty())
            note("outer-shape: outer ring record cannot carry holes");
        for (std::size_t i : inner) {
            const Polygon& p = inst.polygons[i];
            bool ok = true;
            for (const Point& v : all_ring_vertices(p))
                if (locate_in_ring(v, q) != RingLocation::inside) ok = false;
            for (std::size_t e = 0; e < p.outer.size() && ok; ++e)
                for (std::size_t j = 0; j < q.size() && ok; ++j)
                    if (segments_intersect(p.outer[e], p.outer[(e + 1) % p.outer.size()], q[j],
                                           q[(j + 1) % q.size()]))
                        ok = false;
            if (!ok)
                note("outer-containment: polygon " + std::to_string(i) +
                     " not strictly inside the outer region");
        }
    }
    return bad;
}

inline void require_valid_instance(const ColoredInstance& inst) {
    auto bad = validate_instance(inst);
    if (!bad.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& b : bad) msg += "\n  " + b;
        throw validation_error(msg);
    }
}

} // namespace mlf
