#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace labelflip {

using Coord = std::int64_t;

// Coordinates are bounded so that every predicate, including the squared
// angle comparison, fits in 256-bit integer arithmetic.
inline constexpr Coord kMaxCoordinate = Coord{1} << 30;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of (q - p) x (r - p), exact.
Orientation orientation(const Point& p, const Point& q, const Point& r) noexcept;

/// A segment between two points of a PointSet, stored with a < b.
struct EdgeId {
    int a = 0;
    int b = 0;

    constexpr EdgeId() = default;
    constexpr EdgeId(int u, int v) noexcept : a(std::min(u, v)), b(std::max(u, v)) {}

    constexpr bool has_endpoint(int v) const noexcept { return a == v || b == v; }
    constexpr bool shares_endpoint(const EdgeId& o) const noexcept
    {
        return has_endpoint(o.a) || has_endpoint(o.b);
    }
    constexpr int other(int v) const noexcept { return v == a ? b : a; }

    friend constexpr auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

std::string to_string(const EdgeId& e);

struct EdgeIdHash {
    std::size_t operator()(const EdgeId& e) const noexcept
    {
        return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(e.a)) << 32) |
                                          std::uint32_t(e.b));
    }
};

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer points in general position: distinct, no three collinear, n >= 3.
class PointSet {
public:
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    std::span<const Point> points() const noexcept { return points_; }

    /// Hull vertices in counter-clockwise order, starting from the lowest index.
    std::span<const int> hull() const noexcept { return hull_; }
    bool is_hull_vertex(int v) const { return on_hull_[static_cast<std::size_t>(v)]; }
    bool is_hull_edge(const EdgeId& e) const;

    /// Number of edges of every triangulation: 3n - 3 - h.
    std::size_t triangulation_size() const noexcept
    {
        return 3 * size() - 3 - hull_.size();
    }

    /// Dense numbering of all n(n-1)/2 segments, ordered like EdgeId.
    std::size_t segment_count() const noexcept { return size() * (size() - 1) / 2; }
    std::size_t segment_index(const EdgeId& e) const noexcept;
    EdgeId segment(std::size_t index) const { return segments_[index]; }
    std::span<const EdgeId> segments() const noexcept { return segments_; }

    bool valid_edge(const EdgeId& e) const noexcept
    {
        return e.a >= 0 && e.a < e.b && static_cast<std::size_t>(e.b) < size();
    }

    friend bool operator==(const PointSet& l, const PointSet& r) { return l.points_ == r.points_; }

private:
    std::vector<Point> points_;
    std::vector<int> hull_;
    std::vector<bool> on_hull_;
    std::vector<EdgeId> segments_;
};

Orientation orientation(const PointSet& ps, int p, int q, int r);

/// True iff the segments meet in a point interior to at least one of them.
bool segments_cross(const EdgeId& e, const EdgeId& f, const PointSet& ps);

/// True iff no point of ps lies strictly inside triangle (a, b, c).
bool empty_triangle(int a, int b, int c, const PointSet& ps);

/// If the indexed points are in convex position, returns them in
/// counter-clockwise order starting from the smallest index.
std::optional<std::vector<int>> convex_order(std::span<const int> indices, const PointSet& ps);

/// True iff the cyclic sequence is a strictly convex polygon in the given
/// order (either orientation).
bool is_convex_polygon_in_order(std::span<const int> cycle, const PointSet& ps);

bool empty_convex_polygon(std::span<const int> indices, const PointSet& ps);

/// e and f cross and their endpoints span an empty convex quadrilateral.
bool crossing_pair_is_empty_quad(const EdgeId& e, const EdgeId& f, const PointSet& ps);

}  // namespace labelflip
