#include "labelflip/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace labelflip {

namespace {

using Wide = __int128;

int sign(Wide v) noexcept
{
    return (v > 0) - (v < 0);
}

Wide cross(const Point& p, const Point& q, const Point& r) noexcept
{
    return Wide(q.x - p.x) * Wide(r.y - p.y) - Wide(q.y - p.y) * Wide(r.x - p.x);
}

// Andrew's monotone chain; general position means no collinear hull points.
std::vector<int> convex_hull(const std::vector<Point>& pts)
{
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int l, int r) { return pts[l] < pts[r]; });

    std::vector<int> hull(2 * order.size());
    std::size_t k = 0;
    for (int i : order) {
        while (k >= 2 && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t j = order.size() - 1, lower = k + 1; j-- > 0;) {
        const int i = order[j];
        while (k >= lower && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());
    return hull;
}

}  // namespace

Orientation orientation(const Point& p, const Point& q, const Point& r) noexcept
{
    return static_cast<Orientation>(sign(cross(p, q, r)));
}

Orientation orientation(const PointSet& ps, int p, int q, int r)
{
    return orientation(ps[p], ps[q], ps[r]);
}

std::string to_string(const EdgeId& e)
{
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points))
{
    const std::size_t n = points_.size();
    if (n < 3) throw GeometryError("a point set needs at least 3 points");
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = points_[i];
        if (std::llabs(p.x) > kMaxCoordinate || std::llabs(p.y) > kMaxCoordinate)
            throw GeometryError("point " + std::to_string(i) + " exceeds the coordinate bound 2^30");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points_[i] == points_[j])
                throw GeometryError("points " + std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide");
            for (std::size_t k = j + 1; k < n; ++k)
                if (cross(points_[i], points_[j], points_[k]) == 0)
                    throw GeometryError("points " + std::to_string(i) + ", " + std::to_string(j) +
                                        ", " + std::to_string(k) + " are collinear");
        }

    hull_ = convex_hull(points_);
    on_hull_.assign(n, false);
    for (int v : hull_) on_hull_[static_cast<std::size_t>(v)] = true;

    segments_.reserve(n * (n - 1) / 2);
    for (int a = 0; a < static_cast<int>(n); ++a)
        for (int b = a + 1; b < static_cast<int>(n); ++b) segments_.emplace_back(a, b);
}

bool PointSet::is_hull_edge(const EdgeId& e) const
{
    const std::size_t h = hull_.size();
    for (std::size_t i = 0; i < h; ++i)
        if (EdgeId(hull_[i], hull_[(i + 1) % h]) == e) return true;
    return false;
}

std::size_t PointSet::segment_index(const EdgeId& e) const noexcept
{
    const std::size_t n = size();
    const auto a = static_cast<std::size_t>(e.a);
    const auto b = static_cast<std::size_t>(e.b);
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

bool segments_cross(const EdgeId& e, const EdgeId& f, const PointSet& ps)
{
    // Under general position segments sharing an endpoint cannot overlap.
    if (e == f || e.shares_endpoint(f)) return false;
    const int s1 = static_cast<int>(orientation(ps, e.a, e.b, f.a));
    const int s2 = static_cast<int>(orientation(ps, e.a, e.b, f.b));
    const int s3 = static_cast<int>(orientation(ps, f.a, f.b, e.a));
    const int s4 = static_cast<int>(orientation(ps, f.a, f.b, e.b));
    return s1 * s2 < 0 && s3 * s4 < 0;
}

bool empty_triangle(int a, int b, int c, const PointSet& ps)
{
    const Orientation o = orientation(ps, a, b, c);
    for (int p = 0; p < static_cast<int>(ps.size()); ++p) {
        if (p == a || p == b || p == c) continue;
        if (orientation(ps, a, b, p) == o && orientation(ps, b, c, p) == o &&
            orientation(ps, c, a, p) == o)
            return false;
    }
    return true;
}

bool is_convex_polygon_in_order(std::span<const int> cycle, const PointSet& ps)
{
    const std::size_t k = cycle.size();
    if (k < 3) return false;
    const Orientation o = orientation(ps, cycle[0], cycle[1], cycle[2]);
    // Every other vertex strictly on the same side of every edge; this also
    // rules out self-intersecting (star-shaped) orders.
    for (std::size_t i = 0; i < k; ++i) {
        const int u = cycle[i];
        const int v = cycle[(i + 1) % k];
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i || j == (i + 1) % k) continue;
            if (orientation(ps, u, v, cycle[j]) != o) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> convex_order(std::span<const int> indices, const PointSet& ps)
{
    if (indices.size() < 3) return std::nullopt;
    std::vector<Point> pts;
    pts.reserve(indices.size());
    for (int i : indices) pts.push_back(ps[i]);
    const std::vector<int> hull = convex_hull(pts);
    if (hull.size() != indices.size()) return std::nullopt;
    std::vector<int> cycle;
    cycle.reserve(hull.size());
    for (int h : hull) cycle.push_back(indices[static_cast<std::size_t>(h)]);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    return cycle;
}

bool empty_convex_polygon(std::span<const int> indices, const PointSet& ps)
{
    const auto cycle = convex_order(indices, ps);
    if (!cycle) return false;
    const std::size_t k = cycle->size();
    for (int p = 0; p < static_cast<int>(ps.size()); ++p) {
        if (std::find(cycle->begin(), cycle->end(), p) != cycle->end()) continue;
        bool inside = true;
        for (std::size_t i = 0; i < k && inside; ++i)
            inside = orientation(ps, (*cycle)[i], (*cycle)[(i + 1) % k], p) == Orientation::CCW;
        if (inside) return false;
    }
    return true;
}

bool crossing_pair_is_empty_quad(const EdgeId& e, const EdgeId& f, const PointSet& ps)
{
    if (!segments_cross(e, f, ps)) return false;
    // Crossing diagonals always span a convex quadrilateral; it is the union
    // of the two triangles on either side of e.
    return empty_triangle(e.a, e.b, f.a, ps) && empty_triangle(e.a, e.b, f.b, ps);
}

}  // namespace labelflip
