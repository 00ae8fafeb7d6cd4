#include "labelflip/swaps.hpp"

#include "labelflip/flippaths.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace labelflip {

namespace {

std::uint64_t pair_key(const EdgePair& p, const PointSet& ps)
{
    return (std::uint64_t(ps.segment_index(p.first)) << 32) | ps.segment_index(p.second);
}

std::vector<EdgeId> polygon_sides(std::span<const int> cycle)
{
    std::vector<EdgeId> sides;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        sides.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    return sides;
}

// Canonical hub containing `required`: the Delaunay triangulation constrained
// to it.
Triangulation hub_containing(const Triangulation& like, std::vector<EdgeId> required)
{
    std::sort(required.begin(), required.end());
    required.erase(std::unique(required.begin(), required.end()), required.end());
    const Triangulation seed = complete_triangulation(like.shared_points(), required);
    return constrained_delaunay(like.points(), required, seed).triangulation;
}

void append(FlipSequence& out, const FlipSequence& more)
{
    out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

std::vector<EdgePair> pair_neighbors(const EdgePair& p, const QuadrilateralGraph& graph)
{
    const PointSet& ps = graph.points();
    std::vector<EdgePair> out;
    for (const auto& [held, moving] : {std::pair{p.first, p.second}, std::pair{p.second, p.first}})
        for (const EdgeId& g : graph.neighbors(moving))
            if (g != held && !segments_cross(g, held, ps)) out.emplace_back(held, g);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Pentagon> swap_pentagon(const EdgePair& p, const PointSet& ps)
{
    const EdgeId& g = p.first;
    const EdgeId& h = p.second;
    int c = -1;
    if (g.has_endpoint(h.a) && !g.has_endpoint(h.b))
        c = h.a;
    else if (g.has_endpoint(h.b) && !g.has_endpoint(h.a))
        c = h.b;
    if (c < 0) return std::nullopt;
    const int a = g.other(c);
    const int b = h.other(c);
    if (!empty_triangle(c, a, b, ps)) return std::nullopt;

    // Pentagon c, x, a, b, y: fanned from c into three empty triangles.
    const int n = static_cast<int>(ps.size());
    std::vector<int> before_a;
    std::vector<int> after_b;
    for (int v = 0; v < n; ++v) {
        if (v == a || v == b || v == c) continue;
        const std::array<int, 4> qx{c, v, a, b};
        if (is_convex_polygon_in_order(qx, ps) && empty_triangle(c, v, a, ps)) before_a.push_back(v);
        const std::array<int, 4> qy{c, a, b, v};
        if (is_convex_polygon_in_order(qy, ps) && empty_triangle(c, b, v, ps)) after_b.push_back(v);
    }
    for (int x : before_a)
        for (int y : after_b) {
            if (x == y) continue;
            const std::array<int, 5> cycle{c, x, a, b, y};
            if (!is_convex_polygon_in_order(cycle, ps)) continue;
            const auto ordered = convex_order(cycle, ps);
            Pentagon out{};
            std::copy(ordered->begin(), ordered->end(), out.begin());
            return out;
        }
    return std::nullopt;
}

bool is_swap_vertex(const EdgePair& p, const PointSet& ps)
{
    return swap_pentagon(p, ps).has_value();
}

std::optional<PairPath> find_pair_path(const EdgeId& e, const EdgeId& f,
                                       const QuadrilateralGraph& graph, std::size_t budget)
{
    const PointSet& ps = graph.points();
    if (!ps.valid_edge(e) || !ps.valid_edge(f) || e == f || segments_cross(e, f, ps))
        throw std::invalid_argument("pair search needs two distinct non-crossing segments");

    const EdgePair start(e, f);
    if (const auto pent = swap_pentagon(start, ps)) return PairPath{{start}, *pent};

    std::unordered_map<std::uint64_t, EdgePair> parent;
    parent.emplace(pair_key(start, ps), start);
    std::deque<EdgePair> queue{start};
    while (!queue.empty()) {
        const EdgePair p = queue.front();
        queue.pop_front();
        for (const EdgePair& q : pair_neighbors(p, graph)) {
            if (!parent.emplace(pair_key(q, ps), p).second) continue;
            if (parent.size() > budget)
                throw SearchBudgetExceeded("pair search exceeded " + std::to_string(budget) +
                                           " visited pairs");
            if (const auto pent = swap_pentagon(q, ps)) {
                PairPath path{{q}, *pent};
                for (EdgePair cur = q; !(cur == start);) {
                    cur = parent.at(pair_key(cur, ps));
                    path.steps.push_back(cur);
                }
                std::reverse(path.steps.begin(), path.steps.end());
                return path;
            }
            queue.push_back(q);
        }
    }
    return std::nullopt;
}

FlipSequence pentagon_swap_sequence(const Triangulation& t, const Pentagon& pentagon,
                                    const EdgeId& d1, const EdgeId& d2)
{
    const PointSet& ps = t.points();
    for (int v : pentagon)
        if (v < 0 || static_cast<std::size_t>(v) >= ps.size())
            throw PreconditionViolated("pentagon vertex out of range");
    const auto cycle = convex_order(pentagon, ps);
    if (!cycle || !empty_convex_polygon(*cycle, ps))
        throw PreconditionViolated("pentagon is not an empty convex pentagon");
    const std::vector<EdgeId> sides = polygon_sides(*cycle);
    for (const EdgeId& s : sides)
        if (!t.contains(s)) throw PreconditionViolated("pentagon side " + to_string(s) + " missing");
    for (const EdgeId& d : {d1, d2}) {
        const bool corner = std::find(cycle->begin(), cycle->end(), d.a) != cycle->end() &&
                            std::find(cycle->begin(), cycle->end(), d.b) != cycle->end();
        if (!corner || std::find(sides.begin(), sides.end(), d) != sides.end())
            throw PreconditionViolated(to_string(d) + " is not a pentagon diagonal");
        if (!t.contains(d)) throw PreconditionViolated("diagonal " + to_string(d) + " missing");
    }
    if (d1 == d2) throw PreconditionViolated("diagonals must differ");

    // Walk the elementary 5-cycle, always flipping the diagonal that was not
    // just inserted; try both directions and keep the one that transposes.
    for (const EdgeId& first : {d1, d2}) {
        LabelledTriangulation walk = LabelledTriangulation::with_identity_labels(t);
        const Label l1 = walk.label_of(d1);
        const Label l2 = walk.label_of(d2);
        FlipSequence flips;
        EdgeId other = first == d1 ? d2 : d1;
        EdgeId next = first;
        for (int step = 0; step < 5; ++step) {
            const FlipEvent ev = walk.flip(next);
            flips.push_back(ev);
            next = other;
            other = ev.inserted;
        }
        if (!(walk.triangulation() == t)) continue;
        LabelledTriangulation expected = LabelledTriangulation::with_identity_labels(t);
        std::vector<std::pair<EdgeId, Label>> swapped;
        for (const EdgeId& e : t.edges()) {
            Label l = expected.label_of(e);
            if (e == d1) l = l2;
            if (e == d2) l = l1;
            swapped.emplace_back(e, l);
        }
        if (walk == LabelledTriangulation(t, swapped)) return flips;
    }
    throw std::logic_error("no orientation of the pentagon 5-cycle transposes the diagonals");
}

std::optional<ElementarySwap> realize_elementary_swap(const Triangulation& t, const EdgeId& e,
                                                      const EdgeId& f,
                                                      const QuadrilateralGraph& graph,
                                                      std::size_t budget)
{
    if (!t.contains(e) || !t.contains(f) || e == f)
        throw std::invalid_argument("elementary swap needs two distinct edges of the triangulation");
    auto path = find_pair_path(e, f, graph, budget);
    if (!path) return std::nullopt;

    ElementarySwap swap{std::move(*path), {}, {}, {}};
    Triangulation current = t;
    const auto& steps = swap.path.steps;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const EdgePair& from = steps[i - 1];
        const EdgePair& to = steps[i];
        const EdgeId held = to.contains(from.first) ? from.first : from.second;
        const EdgeId moving = held == from.first ? from.second : from.first;
        const EdgeId target = held == to.first ? to.second : to.first;

        // Reach a triangulation holding the empty quadrilateral of moving and
        // target while both tracked edges stay fixed, then flip across it.
        const std::array<int, 4> corners{moving.a, moving.b, target.a, target.b};
        std::vector<EdgeId> required = polygon_sides(*convex_order(corners, t.points()));
        required.push_back(held);
        required.push_back(moving);
        const std::array<EdgeId, 2> pinned{held, moving};
        const FlipSequence moves = path_between(current, hub_containing(current, required), pinned);
        current = apply_sequence(current, moves);
        append(swap.approach, moves);
        const EdgeId inserted = current.flip(moving);
        if (inserted != target) throw std::logic_error("pair path step is not a flip");
        swap.approach.push_back({moving, target});
    }

    const EdgePair& last = steps.back();
    std::vector<EdgeId> required = polygon_sides(swap.path.pentagon);
    required.push_back(last.first);
    required.push_back(last.second);
    const std::array<EdgeId, 2> pinned{last.first, last.second};
    const FlipSequence moves = path_between(current, hub_containing(current, required), pinned);
    current = apply_sequence(current, moves);
    append(swap.approach, moves);

    swap.pentagon_cycle = pentagon_swap_sequence(current, swap.path.pentagon, last.first, last.second);
    swap.flips = swap.approach;
    append(swap.flips, swap.pentagon_cycle);
    append(swap.flips, inverse(swap.approach));
    return swap;
}

std::optional<ElementarySwap> realize_elementary_swap(const LabelledTriangulation& lt,
                                                      const EdgeId& e, const EdgeId& f,
                                                      const QuadrilateralGraph& graph,
                                                      std::size_t budget)
{
    return realize_elementary_swap(lt.triangulation(), e, f, graph, budget);
}

}  // namespace labelflip
