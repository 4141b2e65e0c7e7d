#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mlf/geometry.hpp"

using namespace mlf;

TEST_CASE("orientation basic cases") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == Side::left);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == Side::collinear);
    CHECK(orientation({0, 0}, {0, 1}, {1, 1}) == Side::right);
}

TEST_CASE("orientation antisymmetry and translation invariance") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int it = 0; it < 500; ++it) {
        Point p{d(rng), d(rng)}, q{d(rng), d(rng)}, r{d(rng), d(rng)};
        int s = orientation_sign(p, q, r);
        CHECK(orientation_sign(p, r, q) == -s);
        Point t{d(rng), d(rng)};
        CHECK(orientation_sign(p + t, q + t, r + t) == s);
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rat("7/2") == Rat(7, 2));
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("12") == Rat(12));
    CHECK(format_rat(parse_rat("-6/4")) == "-3/2");
    CHECK(format_rat(parse_rat("5")) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), validation_error);
    CHECK_THROWS_AS(parse_rat("x"), validation_error);
}

TEST_CASE("segment predicates") {
    // Proper crossing
    CHECK(segments_properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    // Touching at an endpoint is not proper
    CHECK_FALSE(segments_properly_cross({0, 0}, {2, 2}, {2, 2}, {3, 0}));
    CHECK(segments_intersect({0, 0}, {2, 2}, {2, 2}, {3, 0}));
    // Collinear overlap
    CHECK(segments_overlap_collinearly({0, 0}, {4, 0}, {2, 0}, {6, 0}));
    CHECK_FALSE(segments_overlap_collinearly({0, 0}, {2, 0}, {2, 0}, {6, 0}));
    CHECK_FALSE(segments_overlap_collinearly({0, 0}, {2, 1}, {2, 0}, {6, 0}));

    CHECK(point_on_segment({1, 1}, {0, 0}, {2, 2}));
    CHECK_FALSE(point_on_open_segment({0, 0}, {0, 0}, {2, 2}));

    auto x = line_intersection({0, 0}, {2, 2}, {0, 2}, {2, 0});
    REQUIRE(x.has_value());
    CHECK(*x == Point{1, 1});
    CHECK_FALSE(line_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}).has_value());
}

TEST_CASE("line parameters and interpolation") {
    Point a{1, 1}, b{5, 3};
    Point m = interpolate(a, b, Rat(1, 2));
    CHECK(m == midpoint(a, b));
    CHECK(line_param(a, b, m) == Rat(1, 2));
    CHECK(line_param(a, b, b) == 1);
}
