#include "fixtures.hpp"

#include "labelflip/flippaths.hpp"

#include <doctest.h>

#include <algorithm>

using namespace labelflip;

namespace {

bool flips_edge(const FlipSequence& s, const EdgeId& e)
{
    return std::any_of(s.begin(), s.end(), [&](const FlipEvent& ev) { return ev.removed == e; });
}

}  // namespace

TEST_CASE("cancel_backtracks removes flips undone at once")
{
    const FlipEvent a{{0, 2}, {1, 3}};
    const FlipEvent b{{0, 3}, {1, 4}};
    CHECK(cancel_backtracks({}).empty());
    CHECK(cancel_backtracks({a, a.inverse()}).empty());
    CHECK(cancel_backtracks({a, b, b.inverse(), a.inverse()}).empty());
    CHECK(cancel_backtracks({a, b, a.inverse()}) == FlipSequence{a, b, a.inverse()});
    CHECK(cancel_backtracks({b, a, a.inverse(), a}) == FlipSequence{b, a});
}

TEST_CASE("path between equal triangulations is empty")
{
    const auto ps = fixtures::pentagon();
    const Triangulation t = delaunay(ps);
    CHECK(path_between(t, t, {}).empty());
}

TEST_CASE("paths replay, respect pinned edges and are no longer than both Lawson runs")
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 60; ++round) {
        const auto ps = fixtures::random_points(5 + round % 8, 400, rng);
        const Triangulation t1 = fixtures::random_triangulation(ps, rng);

        // Pin a random subset of edges and build t2 around it.
        std::vector<EdgeId> pinned;
        for (const EdgeId& e : t1.edges())
            if (rng() % 5 == 0) pinned.push_back(e);
        std::vector<EdgeId> order(ps->segments().begin(), ps->segments().end());
        std::shuffle(order.begin(), order.end(), rng);
        const Triangulation t2 = complete_triangulation(ps, pinned, order);

        const FlipSequence path = path_between(t1, t2, pinned);
        CHECK(apply_sequence(t1, path) == t2);
        for (const EdgeId& e : pinned) CHECK_FALSE(flips_edge(path, e));
        const std::size_t bound = constrained_delaunay(*ps, pinned, t1).flips.size() +
                                  constrained_delaunay(*ps, pinned, t2).flips.size();
        CHECK(path.size() <= bound);
        CHECK(apply_sequence(t2, inverse(path)) == t1);
    }
}

TEST_CASE("pinned edges must be present on both sides")
{
    const auto ps = fixtures::pentagon();
    const Triangulation fan0(ps, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}});
    const Triangulation fan1(ps, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}, {1, 4}});
    const std::vector<EdgeId> pin{EdgeId(0, 2)};
    CHECK_THROWS_AS(path_between(fan0, fan1, pin), PinnedEdgeError);
    const std::vector<EdgeId> hull{EdgeId(0, 1), EdgeId(3, 4)};
    CHECK(apply_sequence(fan0, path_between(fan0, fan1, hull)) == fan1);
}

TEST_CASE("triangulations over different point sets are rejected")
{
    const Triangulation a = delaunay(fixtures::pentagon());
    const Triangulation b = delaunay(fixtures::convex_polygon(5));
    CHECK_THROWS_AS(path_between(a, b, {}), std::invalid_argument);
}
