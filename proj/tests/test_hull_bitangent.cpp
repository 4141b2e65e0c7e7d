#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mlf/bitangent.hpp"
#include "mlf/hull.hpp"
#include "support/gen.hpp"

using namespace mlf;
using namespace testgen;

namespace {

// Brute-force hull oracle: p is a hull vertex iff it is not in the convex
// hull of the remaining points (checked over all triangles and segments).
bool in_conv_of_others(const Point& p, const std::vector<Point>& pts) {
    std::vector<Point> o;
    for (const Point& q : pts)
        if (!(q == p)) o.push_back(q);
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (o[i] == p) return true;
        for (std::size_t j = i + 1; j < o.size(); ++j) {
            if (point_on_segment(p, o[i], o[j])) return true;
            for (std::size_t k = j + 1; k < o.size(); ++k) {
                int s1 = orientation_sign(o[i], o[j], p);
                int s2 = orientation_sign(o[j], o[k], p);
                int s3 = orientation_sign(o[k], o[i], p);
                if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0))
                    return true;
            }
        }
    }
    return false;
}

// Full-scan tangency predicate used to validate bitangents.
bool line_supports(const Ring& r, const Point& a, const Point& b, int& side) {
    int lo = 0, hi = 0;
    for (const Point& v : r) {
        int s = orientation_sign(a, b, v);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (lo < 0 && hi > 0) return false;
    side = (hi > 0) ? 1 : -1;
    return true;
}

} // namespace

TEST_CASE("convex hull of a triangle is itself") {
    Ring h = convex_hull({{0, 0}, {2, 0}, {0, 2}});
    CHECK(h.size() == 3);
}

TEST_CASE("convex hull drops interior and collinear points") {
    Ring h = convex_hull({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
    CHECK(h.size() == 4);
    Ring h2 = convex_hull({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(h2.size() == 4); // (1,0) lies on an edge
    CHECK(ring_is_strictly_convex_ccw(h2));
}

TEST_CASE("convex hull rejects collinear input") {
    CHECK_THROWS_AS(convex_hull({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), degeneracy_error);
}

TEST_CASE("convex hull matches brute-force halfplane oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(0, 10);
    for (int it = 0; it < 40; ++it) {
        std::vector<Point> pts;
        for (int i = 0; i < 20; ++i) pts.push_back({d(rng), d(rng)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 4) continue;
        Ring h;
        try {
            h = convex_hull(pts);
        } catch (const degeneracy_error&) {
            continue;
        }
        for (const Point& p : pts) {
            bool is_vertex = std::find(h.begin(), h.end(), p) != h.end();
            CHECK(is_vertex == !in_conv_of_others(p, pts));
        }
    }
}

TEST_CASE("bitangents of two separated unit squares") {
    Ring a = square(0, 0, 1);
    Ring b = square(10, 0, 1);
    auto bt = bitangents(a, b);
    REQUIRE(bt.size() == 4);
    int inner = 0;
    for (const auto& t : bt) inner += t.inner ? 1 : 0;
    CHECK(inner == 2);
}

TEST_CASE("coincident squares have no bitangent") {
    Ring a = square(0, 0, 1);
    CHECK(bitangents(a, a).empty());
}

TEST_CASE("two disjoint triangles in general position have exactly 4") {
    Ring a = {{0, 0}, {3, 1}, {1, 3}};
    Ring b = {{10, 2}, {13, 3}, {11, 6}};
    CHECK(bitangents(a, b).size() == 4);
}

TEST_CASE("random disjoint convex pairs: exactly 4, all supporting") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        Ring a = random_convex(rng, 0, 0, 6, 7);
        Ring b = random_convex(rng, 40, 3, 6, 7);
        auto bt = bitangents(a, b);
        REQUIRE(bt.size() == 4);
        int inner_count = 0;
        for (const auto& t : bt) {
            int sa = 0, sb = 0;
            REQUIRE(line_supports(a, t.seg.a, t.seg.b, sa));
            REQUIRE(line_supports(b, t.seg.a, t.seg.b, sb));
            CHECK(t.inner == (sa != sb));
            inner_count += t.inner ? 1 : 0;
        }
        CHECK(inner_count == 2);
    }
}
