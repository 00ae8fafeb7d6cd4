#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace fixtures {

using labelflip::Orientation;
using labelflip::orientation;

SharedPoints make_points(std::vector<Point> pts)
{
    return std::make_shared<const PointSet>(std::move(pts));
}

SharedPoints convex_polygon(std::size_t n)
{
    std::vector<Point> pts;
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i) pts.push_back({i, i * i});
    return make_points(std::move(pts));
}

SharedPoints pentagon()
{
    return make_points({{0, 0}, {11, 1}, {14, 9}, {6, 14}, {-2, 7}});
}

SharedPoints triangle_with_center()
{
    return make_points({{0, 0}, {10, 1}, {3, 9}, {4, 3}});
}

const std::vector<NamedPoints>& curated_suite()
{
    // One representative of every order type with 4, 5 or 6 points
    // (2, 3 and 16 of them), named by size and hull size.
    static const std::vector<NamedPoints> suite = [] {
        std::vector<NamedPoints> s;
        s.push_back({"n4-h4-a", make_points({{18, 22}, {2, 21}, {3, 1}, {19, 21}})});
        s.push_back({"n4-h3-a", make_points({{23, 23}, {20, 6}, {14, 7}, {1, 0}})});
        s.push_back({"n5-h5-a", make_points({{1, 14}, {22, 1}, {19, 2}, {0, 20}, {11, 18}})});
        s.push_back({"n5-h4-a", make_points({{19, 4}, {19, 10}, {13, 20}, {0, 10}, {6, 13}})});
        s.push_back({"n5-h3-a", make_points({{0, 21}, {17, 7}, {9, 14}, {19, 13}, {8, 15}})});
        s.push_back({"n6-h6-a", make_points({{3, 20}, {7, 9}, {11, 0}, {3, 21}, {16, 21}, {23, 7}})});
        s.push_back({"n6-h5-a", make_points({{7, 20}, {3, 0}, {2, 19}, {3, 8}, {7, 1}, {10, 15}})});
        s.push_back({"n6-h5-b", make_points({{5, 20}, {20, 22}, {19, 7}, {17, 22}, {18, 20}, {5, 5}})});
        s.push_back({"n6-h5-c", make_points({{8, 9}, {13, 23}, {1, 19}, {10, 0}, {22, 17}, {3, 1}})});
        s.push_back({"n6-h4-a", make_points({{15, 16}, {14, 13}, {23, 12}, {2, 12}, {23, 0}, {18, 23}})});
        s.push_back({"n6-h4-b", make_points({{16, 6}, {11, 8}, {6, 16}, {10, 8}, {6, 6}, {14, 19}})});
        s.push_back({"n6-h4-c", make_points({{9, 3}, {6, 21}, {9, 6}, {13, 16}, {15, 7}, {19, 17}})});
        s.push_back({"n6-h4-d", make_points({{12, 14}, {0, 23}, {11, 17}, {6, 13}, {17, 23}, {5, 5}})});
        s.push_back({"n6-h4-e", make_points({{10, 15}, {17, 6}, {4, 22}, {14, 9}, {18, 14}, {13, 11}})});
        s.push_back({"n6-h4-f", make_points({{8, 17}, {12, 2}, {4, 11}, {0, 6}, {19, 11}, {11, 0}})});
        s.push_back({"n6-h3-a", make_points({{13, 18}, {19, 19}, {11, 15}, {2, 19}, {14, 8}, {12, 17}})});
        s.push_back({"n6-h3-b", make_points({{21, 6}, {14, 5}, {15, 10}, {14, 11}, {3, 1}, {19, 18}})});
        s.push_back({"n6-h3-c", make_points({{17, 21}, {23, 23}, {13, 7}, {10, 18}, {2, 19}, {13, 15}})});
        s.push_back({"n6-h3-d", make_points({{6, 0}, {1, 19}, {5, 4}, {23, 12}, {7, 2}, {7, 1}})});
        s.push_back({"n6-h3-e", make_points({{1, 3}, {8, 19}, {17, 9}, {23, 3}, {5, 23}, {11, 7}})});
        s.push_back({"n6-h3-f", make_points({{4, 16}, {22, 17}, {6, 11}, {8, 15}, {16, 10}, {9, 0}})});
        return s;
    }();
    return suite;
}

std::string order_type_signature(const PointSet& ps)
{
    const int n = static_cast<int>(ps.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        for (int mirror : {1, -1}) {
            std::string sig;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int k = j + 1; k < n; ++k) {
                        const int o = static_cast<int>(orientation(ps, perm[i], perm[j], perm[k]));
                        sig += o * mirror > 0 ? '+' : '-';
                    }
            if (best.empty() || sig < best) best = sig;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

namespace {

bool general_position_with(const std::vector<Point>& pts, const Point& p)
{
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) return false;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (orientation(pts[i], pts[j], p) == Orientation::Collinear) return false;
    return true;
}

// Counter-clockwise order of five points if they are in convex position.
bool convex_five(std::array<Point, 5> q, std::array<Point, 5>& ccw)
{
    // A point is a hull vertex iff it is not inside any triangle of the others.
    for (int v = 0; v < 5; ++v)
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) {
                    if (v == a || v == b || v == c) continue;
                    const auto o1 = orientation(q[a], q[b], q[v]);
                    const auto o2 = orientation(q[b], q[c], q[v]);
                    const auto o3 = orientation(q[c], q[a], q[v]);
                    if (o1 == o2 && o2 == o3) return false;
                }
    // Sort around the lowest point.
    std::iter_swap(q.begin(), std::min_element(q.begin(), q.end(), [](const Point& l, const Point& r) {
        return std::pair(l.y, l.x) < std::pair(r.y, r.x);
    }));
    std::sort(q.begin() + 1, q.end(), [&](const Point& l, const Point& r) {
        return orientation(q[0], l, r) == Orientation::CCW;
    });
    ccw = q;
    return true;
}

bool has_empty_pentagon(const std::vector<Point>& pts)
{
    const std::size_t n = pts.size();
    if (n < 5) return false;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - 5, pick.end(), 1);
    do {
        std::array<Point, 5> q{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) q[k++] = pts[i];
        std::array<Point, 5> ccw{};
        if (!convex_five(q, ccw)) continue;
        bool empty = true;
        for (std::size_t i = 0; i < n && empty; ++i) {
            if (pick[i]) continue;
            bool inside = true;
            for (std::size_t e = 0; e < 5 && inside; ++e)
                inside = orientation(ccw[e], ccw[(e + 1) % 5], pts[i]) == Orientation::CCW;
            empty = !inside;
        }
        if (empty) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return false;
}

}  // namespace

SharedPoints random_points(std::size_t n, std::int64_t range, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::int64_t> coord(0, range - 1);
    std::vector<Point> pts;
    while (pts.size() < n) {
        const Point p{coord(rng), coord(rng)};
        if (general_position_with(pts, p)) pts.push_back(p);
    }
    return make_points(std::move(pts));
}

SharedPoints search_pentagon_free(std::size_t n, std::int64_t range, std::uint64_t seed,
                                  std::size_t attempts)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(0, range - 1);
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        std::vector<Point> pts;
        bool stuck = false;
        while (pts.size() < n && !stuck) {
            stuck = true;
            for (int draw = 0; draw < 200 && stuck; ++draw) {
                const Point p{coord(rng), coord(rng)};
                if (!general_position_with(pts, p)) continue;
                pts.push_back(p);
                if (has_empty_pentagon(pts))
                    pts.pop_back();
                else
                    stuck = false;
            }
        }
        if (!stuck) return make_points(std::move(pts));
    }
    return nullptr;
}

std::vector<std::vector<EdgeId>> brute_triangulations(const PointSet& ps)
{
    const auto segments = ps.segments();
    auto crosses = [&](const EdgeId& e, const EdgeId& f) {
        if (e.shares_endpoint(f)) return false;
        const auto s1 = static_cast<int>(orientation(ps, e.a, e.b, f.a));
        const auto s2 = static_cast<int>(orientation(ps, e.a, e.b, f.b));
        const auto s3 = static_cast<int>(orientation(ps, f.a, f.b, e.a));
        const auto s4 = static_cast<int>(orientation(ps, f.a, f.b, e.b));
        return s1 * s2 < 0 && s3 * s4 < 0;
    };

    std::vector<std::vector<EdgeId>> out;
    std::vector<EdgeId> chosen;
    auto compatible = [&](const EdgeId& s) {
        return std::none_of(chosen.begin(), chosen.end(), [&](const EdgeId& c) { return crosses(c, s); });
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == segments.size()) {
            // Maximal: every segment left out crosses a chosen one.
            for (const EdgeId& s : segments)
                if (std::find(chosen.begin(), chosen.end(), s) == chosen.end() && compatible(s)) return;
            out.push_back(chosen);
            return;
        }
        if (compatible(segments[i])) {
            chosen.push_back(segments[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool brute_has_empty_pentagon(const PointSet& ps)
{
    return has_empty_pentagon({ps.points().begin(), ps.points().end()});
}

std::vector<EdgeId> brute_label_walk(const PointSet& ps, const EdgeId& start)
{
    const auto all = brute_triangulations(ps);
    // Two triangulations are one flip apart iff they share all but one edge.
    std::vector<std::vector<std::pair<std::size_t, std::pair<EdgeId, EdgeId>>>> adj(all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            std::vector<EdgeId> only_i, only_j;
            std::set_difference(all[i].begin(), all[i].end(), all[j].begin(), all[j].end(),
                                std::back_inserter(only_i));
            if (only_i.size() != 1) continue;
            std::set_difference(all[j].begin(), all[j].end(), all[i].begin(), all[i].end(),
                                std::back_inserter(only_j));
            adj[i].push_back({j, {only_i[0], only_j[0]}});
            adj[j].push_back({i, {only_j[0], only_i[0]}});
        }

    std::set<std::pair<std::size_t, EdgeId>> seen;
    std::deque<std::pair<std::size_t, EdgeId>> queue;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (std::binary_search(all[i].begin(), all[i].end(), start)) {
            seen.insert({i, start});
            queue.push_back({i, start});
        }
    while (!queue.empty()) {
        const auto [i, e] = queue.front();
        queue.pop_front();
        for (const auto& [j, change] : adj[i]) {
            const EdgeId next = change.first == e ? change.second : e;
            if (seen.insert({j, next}).second) queue.push_back({j, next});
        }
    }
    std::set<EdgeId> visited;
    for (const auto& [i, e] : seen) visited.insert(e);
    return {visited.begin(), visited.end()};
}

std::vector<double> float_angles(const Triangulation& t)
{
    const PointSet& ps = t.points();
    std::vector<double> out;
    for (const auto& tri : t.triangles())
        for (int k = 0; k < 3; ++k) {
            const Point& o = ps[tri[k]];
            const Point& p = ps[tri[(k + 1) % 3]];
            const Point& q = ps[tri[(k + 2) % 3]];
            const double a1 = std::atan2(double(p.y - o.y), double(p.x - o.x));
            const double a2 = std::atan2(double(q.y - o.y), double(q.x - o.x));
            double d = std::fabs(a1 - a2);
            if (d > M_PI) d = 2 * M_PI - d;
            out.push_back(d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t catalan(unsigned k)
{
    std::uint64_t c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

labelflip::LabelledTriangulation random_labelling(const Triangulation& t, std::mt19937_64& rng)
{
    std::vector<labelflip::Label> perm(t.size());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<EdgeId, labelflip::Label>> labels;
    for (std::size_t k = 0; k < t.size(); ++k) labels.emplace_back(t.edges()[k], perm[k]);
    return labelflip::LabelledTriangulation(t, labels);
}

Triangulation random_triangulation(const SharedPoints& ps, std::mt19937_64& rng)
{
    std::vector<EdgeId> order(ps->segments().begin(), ps->segments().end());
    std::shuffle(order.begin(), order.end(), rng);
    return labelflip::complete_triangulation(ps, {}, order);
}

}  // namespace fixtures
