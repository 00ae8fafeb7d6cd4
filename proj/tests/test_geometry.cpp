#include "fixtures.hpp"

#include "labelflip/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace labelflip;
using fixtures::make_points;

TEST_CASE("orientation is exact at the coordinate bound")
{
    constexpr Coord B = kMaxCoordinate;
    // Doubles cannot tell these apart: the cross product is 1 against terms of 2^60.
    const Point p{-B, -B};
    const Point q{B, B - 1};
    const Point r{B - 2, B - 3};
    CHECK(orientation(p, q, r) == Orientation::CW);
    CHECK(orientation(p, r, q) == Orientation::CCW);
    CHECK(orientation(Point{0, 0}, Point{2, 2}, Point{B, B}) == Orientation::Collinear);
}

TEST_CASE("point set validation")
{
    CHECK_THROWS_AS(PointSet({{0, 0}, {1, 0}}), GeometryError);
    CHECK_THROWS_AS(PointSet({{0, 0}, {1, 0}, {0, 0}}), GeometryError);
    CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {5, 5}, {0, 3}}), GeometryError);
    CHECK_THROWS_AS(PointSet({{0, 0}, {kMaxCoordinate + 1, 0}, {0, 1}}), GeometryError);
    CHECK_NOTHROW(PointSet({{-kMaxCoordinate, 0}, {kMaxCoordinate, 1}, {0, kMaxCoordinate}}));
}

TEST_CASE("hull is counter-clockwise from the smallest index")
{
    const auto ps = make_points({{12, 8}, {10, 0}, {0, 0}, {4, 2}, {2, 9}});
    const std::vector<int> hull(ps->hull().begin(), ps->hull().end());
    CHECK(hull == std::vector<int>{0, 4, 2, 1});
    CHECK_FALSE(ps->is_hull_vertex(3));
    CHECK(ps->is_hull_edge(EdgeId(2, 1)));
    CHECK_FALSE(ps->is_hull_edge(EdgeId(0, 2)));
    CHECK(ps->triangulation_size() == 3 * 5 - 3 - 4);
}

TEST_CASE("triangulation size")
{
    CHECK(fixtures::convex_polygon(7)->triangulation_size() == 11);
    CHECK(fixtures::triangle_with_center()->triangulation_size() == 6);
    CHECK(make_points({{0, 0}, {1, 0}, {0, 1}})->triangulation_size() == 3);
}

TEST_CASE("segment numbering is a bijection in EdgeId order")
{
    const auto ps = fixtures::convex_polygon(9);
    REQUIRE(ps->segment_count() == 36);
    for (std::size_t i = 0; i < ps->segment_count(); ++i) {
        CHECK(ps->segment_index(ps->segment(i)) == i);
        if (i) CHECK(ps->segment(i - 1) < ps->segment(i));
    }
}

TEST_CASE("segments_cross")
{
    const auto ps = fixtures::convex_polygon(4);
    CHECK(segments_cross(EdgeId(0, 2), EdgeId(1, 3), *ps));
    CHECK_FALSE(segments_cross(EdgeId(0, 1), EdgeId(2, 3), *ps));
    CHECK_FALSE(segments_cross(EdgeId(0, 2), EdgeId(0, 3), *ps));
    CHECK_FALSE(segments_cross(EdgeId(0, 2), EdgeId(0, 2), *ps));
}

TEST_CASE("crossing is symmetric and never holds for segments with a common endpoint")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        const auto ps = fixtures::random_points(8, 50, rng);
        for (const EdgeId& e : ps->segments())
            for (const EdgeId& f : ps->segments()) {
                CHECK(segments_cross(e, f, *ps) == segments_cross(f, e, *ps));
                if (e.shares_endpoint(f)) CHECK_FALSE(segments_cross(e, f, *ps));
            }
    }
}

TEST_CASE("empty triangles and convex polygons")
{
    const auto ps = fixtures::triangle_with_center();
    CHECK_FALSE(empty_triangle(0, 1, 2, *ps));
    CHECK(empty_triangle(0, 1, 3, *ps));
    CHECK(empty_triangle(2, 1, 3, *ps));

    const std::array<int, 4> all{0, 1, 2, 3};
    CHECK_FALSE(convex_order(all, *ps).has_value());
    const std::array<int, 3> tri{2, 0, 1};
    CHECK(convex_order(tri, *ps) == std::vector<int>{0, 1, 2});
    CHECK_FALSE(empty_convex_polygon(tri, *ps));

    const auto pent = fixtures::pentagon();
    const std::array<int, 5> shuffled{3, 0, 4, 2, 1};
    CHECK(convex_order(shuffled, *pent) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(empty_convex_polygon(shuffled, *pent));
    const std::array<int, 5> in_order{0, 1, 2, 3, 4};
    const std::array<int, 5> star{0, 2, 4, 1, 3};
    CHECK(is_convex_polygon_in_order(in_order, *pent));
    CHECK_FALSE(is_convex_polygon_in_order(star, *pent));
}

TEST_CASE("convex order agrees with the triangle-containment test")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 200; ++round) {
        const auto ps = fixtures::random_points(6, 40, rng);
        const std::array<int, 5> pick{0, 1, 2, 3, 4};
        bool convex = true;
        for (int v : pick)
            for (int a : pick)
                for (int b : pick)
                    for (int c : pick) {
                        if (v == a || v == b || v == c || !(a < b && b < c)) continue;
                        const auto o = orientation(*ps, a, b, c);
                        if (orientation(*ps, a, b, v) == o && orientation(*ps, b, c, v) == o &&
                            orientation(*ps, c, a, v) == o)
                            convex = false;
                    }
        const auto order = convex_order(pick, *ps);
        CHECK(order.has_value() == convex);
        if (!order) continue;
        CHECK(is_convex_polygon_in_order(*order, *ps));
        bool inside = true;
        for (std::size_t i = 0; i < 5; ++i)
            inside = inside && orientation(*ps, (*order)[i], (*order)[(i + 1) % 5], 5) == Orientation::CCW;
        CHECK(empty_convex_polygon(pick, *ps) == !inside);
    }
}

TEST_CASE("empty quadrilaterals")
{
    const auto ps = fixtures::triangle_with_center();
    // 0-3 and 1-2 do not cross; 3 is inside triangle 012.
    CHECK_FALSE(crossing_pair_is_empty_quad(EdgeId(0, 3), EdgeId(1, 2), *ps));
    const auto quad = fixtures::convex_polygon(4);
    CHECK(crossing_pair_is_empty_quad(EdgeId(0, 2), EdgeId(1, 3), *quad));

    // A point inside the quadrilateral spoils it.
    const auto filled = make_points({{0, 0}, {10, 1}, {11, 11}, {1, 9}, {5, 4}});
    CHECK(segments_cross(EdgeId(0, 2), EdgeId(1, 3), *filled));
    CHECK_FALSE(crossing_pair_is_empty_quad(EdgeId(0, 2), EdgeId(1, 3), *filled));
}

TEST_CASE("edge ids are canonical")
{
    const EdgeId e(7, 2);
    CHECK(e.a == 2);
    CHECK(e.b == 7);
    CHECK(e == EdgeId(2, 7));
    CHECK(e.other(2) == 7);
    CHECK(to_string(e) == "2-7");
    std::set<EdgeId> s{EdgeId(1, 0), EdgeId(0, 1)};
    CHECK(s.size() == 1);
}
