#include "labelflip/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace labelflip {

namespace {

std::vector<EdgeId> edge_vector(const Triangulation& t)
{
    return {t.edges().begin(), t.edges().end()};
}

void check_point_guard(const PointSet& ps, std::size_t limit, const char* what)
{
    if (ps.size() > limit)
        throw TooLarge(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                       ", got n = " + std::to_string(ps.size()));
}

}  // namespace

std::optional<std::size_t> FlipGraph::index_of(const Triangulation& t) const
{
    if (!(t.points() == *ps_)) return std::nullopt;
    const auto it = index_.find(edge_vector(t));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FlipGraph::arc_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& a : arcs_) total += a.size();
    return total;
}

FlipGraph enumerate_triangulations(std::shared_ptr<const PointSet> ps, const OracleLimits& limits)
{
    check_point_guard(*ps, limits.max_points, "triangulation enumeration");

    std::vector<Triangulation> found;
    std::map<std::vector<EdgeId>, std::size_t> seen;
    found.push_back(complete_triangulation(ps, {}));
    seen.emplace(edge_vector(found.front()), 0);
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (const EdgeId& e : found[head].flippable_edges()) {
            Triangulation next = found[head].flipped(e);
            if (!seen.emplace(edge_vector(next), found.size()).second) continue;
            if (found.size() >= limits.max_triangulations)
                throw TooLarge("more than " + std::to_string(limits.max_triangulations) +
                               " triangulations");
            found.push_back(std::move(next));
        }
    }

    // Renumber by edge list so that node ids do not depend on the seed.
    FlipGraph g;
    g.ps_ = std::move(ps);
    std::size_t id = 0;
    std::vector<std::size_t> old_to_new(found.size());
    for (auto& [edges, old] : seen) {
        old_to_new[old] = id;
        old = id++;
    }
    g.index_ = std::move(seen);
    g.nodes_.resize(found.size(), found.front());
    for (std::size_t old = 0; old < found.size(); ++old)
        g.nodes_[old_to_new[old]] = std::move(found[old]);

    g.arcs_.resize(g.nodes_.size());
    for (std::size_t i = 0; i < g.nodes_.size(); ++i)
        for (const EdgeId& e : g.nodes_[i].flippable_edges()) {
            const Triangulation next = g.nodes_[i].flipped(e);
            const std::size_t target = g.index_.at(edge_vector(next));
            g.arcs_[i].push_back({target, {e, *g.nodes_[i].flip_partner(e)}});
        }
    return g;
}

LabelledFlipGraph::LabelledFlipGraph(const LabelledTriangulation& seed, const OracleLimits& limits)
{
    const Triangulation& t0 = seed.triangulation();
    check_point_guard(t0.points(), limits.max_labelled_points, "labelled flip graph search");
    graph_ = std::make_shared<const FlipGraph>(enumerate_triangulations(t0.shared_points(), limits));
    const std::size_t m = t0.size();
    bits_ = std::max(1u, static_cast<unsigned>(std::bit_width(m - 1)));
    if (m * bits_ > 128) throw TooLarge("labellings do not fit the packed state");
    per_node_.assign(graph_->size(), 0);

    // For each arc, where every label of the source lands in the target's
    // edge order.
    std::vector<std::vector<std::vector<std::uint8_t>>> remap(graph_->size());
    for (std::size_t i = 0; i < graph_->size(); ++i) {
        const Triangulation& from = graph_->node(i);
        for (const FlipGraph::Arc& arc : graph_->arcs(i)) {
            const Triangulation& to = graph_->node(arc.target);
            std::vector<std::uint8_t> where(m);
            for (std::size_t k = 0; k < m; ++k) {
                const EdgeId& e = from.edges()[k];
                where[k] = static_cast<std::uint8_t>(
                    *to.position(e == arc.flip.removed ? arc.flip.inserted : e));
            }
            remap[i].push_back(std::move(where));
        }
    }

    std::vector<Key> frontier{pack(*graph_->index_of(t0), seed.labels())};
    states_.emplace(frontier.front(), 0);
    per_node_[frontier.front().node] = 1;
    std::vector<Label> labels(m);
    std::vector<Label> moved(m);
    for (std::uint32_t depth = 1; !frontier.empty(); ++depth) {
        std::vector<Key> next;
        for (const Key& key : frontier) {
            unpack(key, labels);
            const auto& arcs = graph_->arcs(key.node);
            for (std::size_t a = 0; a < arcs.size(); ++a) {
                const auto& where = remap[key.node][a];
                for (std::size_t k = 0; k < m; ++k) moved[where[k]] = labels[k];
                const Key to = pack(arcs[a].target, moved);
                if (!states_.emplace(to, depth).second) continue;
                if (states_.size() > limits.max_labelled_states)
                    throw TooLarge("more than " + std::to_string(limits.max_labelled_states) +
                                   " labelled states");
                ++per_node_[to.node];
                next.push_back(to);
            }
        }
        frontier = std::move(next);
    }
}

LabelledFlipGraph::Key LabelledFlipGraph::pack(std::size_t node, std::span<const Label> labels) const
{
    Key key{static_cast<std::uint32_t>(node), 0, 0};
    unsigned offset = 0;
    for (Label l : labels) {
        const auto v = static_cast<std::uint64_t>(l - 1);
        if (offset < 64) {
            key.lo |= v << offset;
            if (offset + bits_ > 64) key.hi |= v >> (64 - offset);
        } else {
            key.hi |= v << (offset - 64);
        }
        offset += bits_;
    }
    return key;
}

void LabelledFlipGraph::unpack(const Key& key, std::vector<Label>& labels) const
{
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    unsigned offset = 0;
    for (Label& l : labels) {
        std::uint64_t v;
        if (offset < 64) {
            v = key.lo >> offset;
            if (offset + bits_ > 64) v |= key.hi << (64 - offset);
        } else {
            v = key.hi >> (offset - 64);
        }
        l = static_cast<Label>(v & mask) + 1;
        offset += bits_;
    }
}

std::optional<std::size_t> LabelledFlipGraph::distance(const LabelledTriangulation& lt) const
{
    const auto node = graph_->index_of(lt.triangulation());
    if (!node) return std::nullopt;
    const auto it = states_.find(pack(*node, lt.labels()));
    if (it == states_.end()) return std::nullopt;
    return it->second;
}

void LabelledFlipGraph::for_each(
    const std::function<void(std::size_t, std::span<const Label>, std::size_t)>& visit) const
{
    std::vector<Label> labels(graph_->node(0).size());
    for (const auto& [key, depth] : states_) {
        unpack(key, labels);
        visit(key.node, labels, depth);
    }
}

LabelledFlipGraph labelled_reachable(const LabelledTriangulation& seed, const OracleLimits& limits)
{
    return LabelledFlipGraph(seed, limits);
}

namespace {

std::vector<EdgeId> without(const Triangulation& t, const EdgeId& e, const EdgeId& f)
{
    std::vector<EdgeId> out;
    for (const EdgeId& g : t.edges())
        if (g != e && g != f) out.push_back(g);
    return out;
}

// Walks the closed cycle that alternately flips two moving edges.
ElementaryCycle walk_cycle(const FlipGraph& g, std::size_t start, EdgeId first, EdgeId second,
                           ElementaryCycle::Kind kind, std::vector<EdgeId> face)
{
    const std::size_t length = kind == ElementaryCycle::Kind::Quadrilateral ? 4 : 5;
    ElementaryCycle cycle{kind, std::move(face), {start}, {}};
    Triangulation t = g.node(start);
    EdgeId next = first;
    EdgeId other = second;
    for (std::size_t step = 0; step < length; ++step) {
        const EdgeId inserted = t.flip(next);
        cycle.flips.push_back({next, inserted});
        next = other;
        other = inserted;
        if (step + 1 < length) cycle.nodes.push_back(*g.index_of(t));
    }
    if (!(t == g.node(start))) throw std::logic_error("elementary cycle walk did not close");
    return cycle;
}

// Apex of the face on e's side that is not shared with f, if e and f bound a
// common triangle.
std::optional<int> shared_triangle_apex(const Triangulation& t, const EdgeId& e, const EdgeId& f)
{
    if (!e.shares_endpoint(f)) return std::nullopt;
    const int c = e.has_endpoint(f.a) ? f.a : f.b;
    const int apex = f.other(c);
    const auto ap = t.apexes(e);
    if (ap.left == apex || ap.right == apex) return apex;
    return std::nullopt;
}

// Simple cycles of length 3..5, each reported once as a vertex sequence
// starting at its smallest vertex.
std::vector<std::vector<std::size_t>> short_cycles(const FlipGraph& g)
{
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> path;
    std::function<void(std::size_t)> extend = [&](std::size_t v) {
        for (const auto& arc : g.arcs(v)) {
            const std::size_t w = arc.target;
            if (w == path.front() && path.size() >= 3) {
                // Each cycle is met in both directions; keep one.
                if (path[1] < path.back()) found.push_back(path);
                continue;
            }
            if (w <= path.front() || path.size() == 5) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            path.push_back(w);
            extend(w);
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < g.size(); ++s) {
        path = {s};
        extend(s);
    }
    return found;
}

}  // namespace

CycleCensus elementary_cycle_census(std::shared_ptr<const PointSet> ps, const OracleLimits& limits)
{
    CycleCensus census;
    census.graph = std::make_shared<const FlipGraph>(enumerate_triangulations(ps, limits));
    const FlipGraph& g = *census.graph;

    std::set<std::vector<EdgeId>> seen4;
    std::set<std::vector<EdgeId>> seen5;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Triangulation& t = g.node(i);
        const std::vector<EdgeId> flippable = t.flippable_edges();
        for (std::size_t x = 0; x < flippable.size(); ++x)
            for (std::size_t y = x + 1; y < flippable.size(); ++y) {
                const EdgeId& e = flippable[x];
                const EdgeId& f = flippable[y];
                const auto apex = shared_triangle_apex(t, e, f);
                if (!apex) {
                    // Two quadrilaterals without a common triangle.
                    auto face = without(t, e, f);
                    if (seen4.insert(face).second)
                        census.four_cycles.push_back(walk_cycle(
                            g, i, e, f, ElementaryCycle::Kind::Quadrilateral, std::move(face)));
                    continue;
                }
                // Three triangles forming a pentagon: the shared one and the
                // outer faces of e and f.
                const auto ae = t.apexes(e);
                const auto af = t.apexes(f);
                const int outer_e = ae.left == *apex ? ae.right : ae.left;
                const int outer_f = af.left == *apex ? af.right : af.left;
                const std::array<int, 5> corners{e.a, e.b, *apex, outer_e, outer_f};
                if (!convex_order(corners, g.points())) continue;
                auto face = without(t, e, f);
                if (seen5.insert(face).second)
                    census.five_cycles.push_back(walk_cycle(
                        g, i, e, f, ElementaryCycle::Kind::Pentagon, std::move(face)));
            }
    }

    std::set<std::vector<std::size_t>> elementary;
    for (const auto* list : {&census.four_cycles, &census.five_cycles})
        for (const ElementaryCycle& c : *list) {
            auto nodes = c.nodes;
            std::sort(nodes.begin(), nodes.end());
            elementary.insert(std::move(nodes));
        }
    for (const auto& cycle : short_cycles(g)) {
        ++census.short_cycles;
        auto nodes = cycle;
        std::sort(nodes.begin(), nodes.end());
        if (!elementary.contains(nodes)) census.non_elementary.push_back(cycle);
    }
    return census;
}

std::vector<EdgeId> displaced_edges(const FlipGraph& graph, const ElementaryCycle& cycle)
{
    const auto start = LabelledTriangulation::with_identity_labels(graph.node(cycle.nodes.front()));
    const auto end = apply_sequence(start, cycle.flips);
    std::vector<EdgeId> moved;
    for (std::size_t k = 0; k < start.labels().size(); ++k)
        if (start.labels()[k] != end.labels()[k]) moved.push_back(start.triangulation().edges()[k]);
    return moved;
}

DegenerateOrder::DegenerateOrder(std::vector<std::pair<std::size_t, std::size_t>> ties)
    : std::runtime_error(std::to_string(ties.size()) + " pair(s) of triangulations share an angle vector"),
      ties_(std::move(ties))
{
}

ShellingReport verify_shelling(std::shared_ptr<const PointSet> ps, const OracleLimits& limits)
{
    ShellingReport report;
    report.graph = std::make_shared<const FlipGraph>(enumerate_triangulations(ps, limits));
    const FlipGraph& g = *report.graph;

    std::vector<AngleVector> vectors;
    vectors.reserve(g.size());
    for (const Triangulation& t : g.nodes()) vectors.emplace_back(t);
    report.order.resize(g.size());
    std::iota(report.order.begin(), report.order.end(), 0);
    std::stable_sort(report.order.begin(), report.order.end(),
                     [&](std::size_t l, std::size_t r) { return vectors[l] > vectors[r]; });

    std::vector<std::pair<std::size_t, std::size_t>> ties;
    for (std::size_t j = 1; j < report.order.size(); ++j)
        for (std::size_t i = j; i-- > 0 && vectors[report.order[i]] == vectors[report.order[j]];)
            ties.emplace_back(std::min(report.order[i], report.order[j]),
                              std::max(report.order[i], report.order[j]));
    if (!ties.empty()) throw DegenerateOrder(std::move(ties));

    const std::size_t m = g.points().triangulation_size();
    for (std::size_t j = 1; j < report.order.size(); ++j) {
        const Triangulation& tj = g.node(report.order[j]);
        std::vector<std::vector<EdgeId>> meets;
        for (std::size_t i = 0; i < j; ++i) {
            const Triangulation& ti = g.node(report.order[i]);
            std::vector<EdgeId> common;
            std::set_intersection(ti.edges().begin(), ti.edges().end(), tj.edges().begin(),
                                  tj.edges().end(), std::back_inserter(common));
            meets.push_back(std::move(common));
        }
        bool ok = true;
        for (std::size_t a = 0; a < meets.size() && ok; ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < meets.size() && maximal; ++b)
                if (meets[b].size() > meets[a].size() &&
                    std::includes(meets[b].begin(), meets[b].end(), meets[a].begin(),
                                  meets[a].end()))
                    maximal = false;
            if (maximal && meets[a].size() != m - 1) ok = false;
        }
        if (!ok) report.failures.push_back(j);
    }
    report.first_is_delaunay = !report.order.empty() && g.node(report.order.front()) == delaunay(ps);
    return report;
}

bool is_interior_face(std::span<const EdgeId> face, const PointSet& ps)
{
    const int n = static_cast<int>(ps.size());
    for (const EdgeId& e : face)
        if (!ps.valid_edge(e)) throw std::invalid_argument("face contains an invalid segment");
    for (std::size_t i = 0; i < face.size(); ++i)
        for (std::size_t j = i + 1; j < face.size(); ++j)
            if (face[i] == face[j] || segments_cross(face[i], face[j], ps))
                throw std::invalid_argument("face is not a non-crossing set of distinct segments");

    const auto& hull = ps.hull();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const EdgeId side(hull[i], hull[(i + 1) % hull.size()]);
        if (std::find(face.begin(), face.end(), side) == face.end()) return false;
    }

    // An inner point whose edges all fit in a half-plane leaves a reflex
    // corner in the region around it.
    std::vector<std::vector<int>> around(static_cast<std::size_t>(n));
    for (const EdgeId& e : face) {
        around[static_cast<std::size_t>(e.a)].push_back(e.b);
        around[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (int p = 0; p < n; ++p) {
        if (ps.is_hull_vertex(p)) continue;
        const auto& nbrs = around[static_cast<std::size_t>(p)];
        if (nbrs.empty()) return false;
        for (int q : nbrs) {
            const bool spans = std::all_of(nbrs.begin(), nbrs.end(), [&](int r) {
                return r == q || orientation(ps, p, q, r) == Orientation::CCW;
            });
            if (spans) return false;
        }
    }
    return true;
}

bool is_boundary_face_by_enumeration(std::span<const EdgeId> face, const FlipGraph& graph)
{
    for (const Triangulation& t : graph.nodes()) {
        if (!std::all_of(face.begin(), face.end(), [&](const EdgeId& e) { return t.contains(e); }))
            continue;
        for (const EdgeId& e : t.edges())
            if (std::find(face.begin(), face.end(), e) == face.end() && !t.is_flippable(e))
                return true;
    }
    return false;
}

}  // namespace labelflip
