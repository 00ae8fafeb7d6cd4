#include "labelflip/triangulation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>

namespace labelflip {

namespace {

using boost::multiprecision::uint256_t;

std::string edge_list_error(const std::string& what, const EdgeId& e)
{
    return what + " (edge " + to_string(e) + ")";
}

void check_non_crossing(std::span<const EdgeId> edges, const PointSet& ps)
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (segments_cross(edges[i], edges[j], ps))
                throw TriangulationError("edges " + to_string(edges[i]) + " and " +
                                         to_string(edges[j]) + " cross");
}

std::vector<EdgeId> sorted_unique_valid(std::vector<EdgeId> edges, const PointSet& ps)
{
    for (const EdgeId& e : edges)
        if (!ps.valid_edge(e)) throw TriangulationError(edge_list_error("invalid edge", e));
    std::sort(edges.begin(), edges.end());
    const auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) throw TriangulationError(edge_list_error("duplicate edge", *dup));
    return edges;
}

int sign(__int128 v) noexcept
{
    return (v > 0) - (v < 0);
}

unsigned __int128 magnitude(__int128 v) noexcept
{
    return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

uint256_t widen(unsigned __int128 v)
{
    uint256_t r = static_cast<std::uint64_t>(v >> 64);
    r <<= 64;
    r |= static_cast<std::uint64_t>(v);
    return r;
}

}  // namespace

FlipSequence inverse(const FlipSequence& s)
{
    FlipSequence out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(it->inverse());
    return out;
}

FlipError::FlipError(Kind kind, const EdgeId& e)
    : std::invalid_argument(edge_list_error(
          kind == Kind::NotPresent ? "edge not in triangulation" : "edge is not flippable", e)),
      kind_(kind),
      edge_(e)
{
}

SequenceError::SequenceError(std::size_t index, const std::string& what)
    : std::invalid_argument("event " + std::to_string(index) + ": " + what), index_(index)
{
}

bool is_triangulation(std::span<const EdgeId> edges, const PointSet& ps)
{
    if (edges.size() != ps.triangulation_size()) return false;
    std::vector<EdgeId> sorted(edges.begin(), edges.end());
    for (const EdgeId& e : sorted)
        if (!ps.valid_edge(e)) return false;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (segments_cross(sorted[i], sorted[j], ps)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Triangulation

Triangulation::Triangulation(std::shared_ptr<const PointSet> ps, std::vector<EdgeId> edges)
    : ps_(std::move(ps))
{
    if (!ps_) throw TriangulationError("missing point set");
    edges_ = sorted_unique_valid(std::move(edges), *ps_);
    if (edges_.size() != ps_->triangulation_size())
        throw TriangulationError("expected " + std::to_string(ps_->triangulation_size()) +
                                 " edges, got " + std::to_string(edges_.size()));
    check_non_crossing(edges_, *ps_);

    const std::size_t n = ps_->size();
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (const EdgeId& e : edges_) {
        adjacent[e.a][e.b] = true;
        adjacent[e.b][e.a] = true;
    }
    apexes_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const EdgeId& e = edges_[i];
        for (int c = 0; c < static_cast<int>(n); ++c) {
            if (c == e.a || c == e.b || !adjacent[e.a][c] || !adjacent[e.b][c]) continue;
            if (!empty_triangle(e.a, e.b, c, *ps_)) continue;
            if (orientation(*ps_, e.a, e.b, c) == Orientation::CCW)
                apexes_[i].left = c;
            else
                apexes_[i].right = c;
        }
    }
}

std::optional<std::size_t> Triangulation::position(const EdgeId& e) const noexcept
{
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Triangulation::Apexes Triangulation::apexes(const EdgeId& e) const
{
    const auto pos = position(e);
    if (!pos) throw FlipError(FlipError::Kind::NotPresent, e);
    return apexes_[*pos];
}

Triangulation::Apexes& Triangulation::apexes_at(const EdgeId& e)
{
    return apexes_[*position(e)];
}

std::optional<EdgeId> Triangulation::flip_partner(const EdgeId& e) const
{
    const auto pos = position(e);
    if (!pos) return std::nullopt;
    const Apexes& ap = apexes_[*pos];
    if (ap.left == kNoApex || ap.right == kNoApex) return std::nullopt;
    // The quadrilateral is convex iff the endpoints of e lie on opposite
    // sides of the other diagonal.
    if (orientation(*ps_, ap.left, ap.right, e.a) == orientation(*ps_, ap.left, ap.right, e.b))
        return std::nullopt;
    return EdgeId(ap.left, ap.right);
}

bool Triangulation::is_flippable(const EdgeId& e) const
{
    return flip_partner(e).has_value();
}

std::vector<EdgeId> Triangulation::flippable_edges() const
{
    std::vector<EdgeId> out;
    for (const EdgeId& e : edges_)
        if (is_flippable(e)) out.push_back(e);
    return out;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const
{
    std::vector<std::array<int, 3>> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (int c : {apexes_[i].left, apexes_[i].right})
            if (c > edges_[i].b) out.push_back({edges_[i].a, edges_[i].b, c});
    std::sort(out.begin(), out.end());
    return out;
}

void Triangulation::replace_apex(const EdgeId& e, int from, int to)
{
    Apexes& ap = apexes_at(e);
    if (ap.left == from)
        ap.left = to;
    else
        ap.right = to;
}

EdgeId Triangulation::flip(const EdgeId& e)
{
    const auto pos = position(e);
    if (!pos) throw FlipError(FlipError::Kind::NotPresent, e);
    const auto partner = flip_partner(e);
    if (!partner) throw FlipError(FlipError::Kind::NotFlippable, e);

    const int a = e.a;
    const int b = e.b;
    const int c = apexes_[*pos].left;
    const int d = apexes_[*pos].right;
    // Faces abc and abd become acd and bcd.
    replace_apex(EdgeId(a, c), b, d);
    replace_apex(EdgeId(c, b), a, d);
    replace_apex(EdgeId(b, d), a, c);
    replace_apex(EdgeId(d, a), b, c);

    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(*pos));
    apexes_.erase(apexes_.begin() + static_cast<std::ptrdiff_t>(*pos));

    const EdgeId f = *partner;
    Apexes fresh;
    if (orientation(*ps_, f.a, f.b, a) == Orientation::CCW)
        fresh = {a, b};
    else
        fresh = {b, a};
    const auto at = std::lower_bound(edges_.begin(), edges_.end(), f) - edges_.begin();
    edges_.insert(edges_.begin() + at, f);
    apexes_.insert(apexes_.begin() + at, fresh);
    return f;
}

Triangulation Triangulation::flipped(const EdgeId& e) const
{
    Triangulation copy = *this;
    copy.flip(e);
    return copy;
}

Triangulation complete_triangulation(std::shared_ptr<const PointSet> ps,
                                     std::span<const EdgeId> required,
                                     std::span<const EdgeId> candidate_order)
{
    std::vector<EdgeId> edges =
        sorted_unique_valid(std::vector<EdgeId>(required.begin(), required.end()), *ps);
    check_non_crossing(edges, *ps);

    std::vector<bool> present(ps->segment_count(), false);
    for (const EdgeId& e : edges) present[ps->segment_index(e)] = true;

    auto consider = [&](const EdgeId& cand) {
        if (!ps->valid_edge(cand) || present[ps->segment_index(cand)]) return;
        for (const EdgeId& e : edges)
            if (segments_cross(cand, e, *ps)) return;
        edges.push_back(cand);
        present[ps->segment_index(cand)] = true;
    };
    for (const EdgeId& cand : candidate_order) consider(cand);
    for (const EdgeId& cand : ps->segments()) consider(cand);
    return Triangulation(std::move(ps), std::move(edges));
}

// ---------------------------------------------------------------------------
// LabelledTriangulation

LabelledTriangulation::LabelledTriangulation(Triangulation tri, std::vector<Label> labels)
    : tri_(std::move(tri)), labels_(std::move(labels))
{
}

LabelledTriangulation::LabelledTriangulation(Triangulation tri,
                                             std::span<const std::pair<EdgeId, Label>> labels)
    : tri_(std::move(tri))
{
    const std::size_t m = tri_.size();
    if (labels.size() != m)
        throw TriangulationError("labelling has " + std::to_string(labels.size()) +
                                 " entries, triangulation has " + std::to_string(m) + " edges");
    labels_.assign(m, 0);
    std::vector<bool> used(m + 1, false);
    for (const auto& [e, l] : labels) {
        const auto pos = tri_.position(e);
        if (!pos) throw TriangulationError(edge_list_error("labelled edge not in triangulation", e));
        if (labels_[*pos] != 0) throw TriangulationError(edge_list_error("edge labelled twice", e));
        if (l < 1 || static_cast<std::size_t>(l) > m || used[static_cast<std::size_t>(l)])
            throw TriangulationError("label " + std::to_string(l) + " is out of range or repeated");
        used[static_cast<std::size_t>(l)] = true;
        labels_[*pos] = l;
    }
}

LabelledTriangulation LabelledTriangulation::with_identity_labels(Triangulation tri)
{
    std::vector<Label> labels(tri.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Label>(i + 1);
    return LabelledTriangulation(std::move(tri), std::move(labels));
}

Label LabelledTriangulation::label_of(const EdgeId& e) const
{
    const auto pos = tri_.position(e);
    if (!pos) throw FlipError(FlipError::Kind::NotPresent, e);
    return labels_[*pos];
}

EdgeId LabelledTriangulation::edge_of(Label l) const
{
    const auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw std::out_of_range("no edge carries label " + std::to_string(l));
    return tri_.edges()[static_cast<std::size_t>(it - labels_.begin())];
}

FlipEvent LabelledTriangulation::flip(const EdgeId& e)
{
    const auto pos = tri_.position(e);
    if (!pos) throw FlipError(FlipError::Kind::NotPresent, e);
    const Label l = labels_[*pos];
    const EdgeId f = tri_.flip(e);
    labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(*pos));
    labels_.insert(labels_.begin() + static_cast<std::ptrdiff_t>(*tri_.position(f)), l);
    return {e, f};
}

std::pair<LabelledTriangulation, FlipEvent> flip(const LabelledTriangulation& lt, const EdgeId& e)
{
    LabelledTriangulation out = lt;
    const FlipEvent ev = out.flip(e);
    return {std::move(out), ev};
}

namespace {

template <typename T>
T replay(T value, const Triangulation& (*tri_of)(const T&), const FlipSequence& s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        const FlipEvent& ev = s[i];
        const Triangulation& t = tri_of(value);
        if (!t.contains(ev.removed))
            throw SequenceError(i, edge_list_error("removed edge not present", ev.removed));
        const auto partner = t.flip_partner(ev.removed);
        if (!partner) throw SequenceError(i, edge_list_error("edge not flippable", ev.removed));
        if (*partner != ev.inserted)
            throw SequenceError(i, "inserted edge " + to_string(ev.inserted) +
                                       " is not the opposite diagonal " + to_string(*partner));
        value.flip(ev.removed);
    }
    return value;
}

const Triangulation& self(const Triangulation& t)
{
    return t;
}

const Triangulation& underlying(const LabelledTriangulation& lt)
{
    return lt.triangulation();
}

}  // namespace

LabelledTriangulation apply_sequence(const LabelledTriangulation& lt, const FlipSequence& s)
{
    return replay<LabelledTriangulation>(lt, &underlying, s);
}

Triangulation apply_sequence(const Triangulation& t, const FlipSequence& s)
{
    return replay<Triangulation>(t, &self, s);
}

// ---------------------------------------------------------------------------
// Angles

Angle Angle::at(const PointSet& ps, int apex, int from, int to)
{
    const Point& o = ps[apex];
    const __int128 ux = ps[from].x - o.x;
    const __int128 uy = ps[from].y - o.y;
    const __int128 vx = ps[to].x - o.x;
    const __int128 vy = ps[to].y - o.y;
    return {apex, from, to, ux * vx + uy * vy, (ux * ux + uy * uy) * (vx * vx + vy * vy)};
}

std::weak_ordering compare_angles(const Angle& l, const Angle& r)
{
    // Cosine is strictly decreasing on (0, pi): compare cosines, reversed.
    const int sl = sign(l.dot);
    const int sr = sign(r.dot);
    if (sl != sr) return sl > sr ? std::weak_ordering::less : std::weak_ordering::greater;
    if (sl == 0) return std::weak_ordering::equivalent;

    const unsigned __int128 dl = magnitude(l.dot);
    const unsigned __int128 dr = magnitude(r.dot);
    // cos^2(l) vs cos^2(r) as dl^2 * |r| vs dr^2 * |l|, both below 2^252.
    const uint256_t lhs = widen(dl * dl) * widen(static_cast<unsigned __int128>(r.norm_product));
    const uint256_t rhs = widen(dr * dr) * widen(static_cast<unsigned __int128>(l.norm_product));
    if (lhs == rhs) return std::weak_ordering::equivalent;
    const bool cos_l_larger = sl > 0 ? lhs > rhs : lhs < rhs;
    return cos_l_larger ? std::weak_ordering::less : std::weak_ordering::greater;
}

AngleVector::AngleVector(const PointSet& ps, std::span<const std::array<int, 3>> triangles)
{
    angles_.reserve(3 * triangles.size());
    for (const auto& [p, q, r] : triangles) {
        angles_.push_back(Angle::at(ps, p, q, r));
        angles_.push_back(Angle::at(ps, q, r, p));
        angles_.push_back(Angle::at(ps, r, p, q));
    }
    std::sort(angles_.begin(), angles_.end(),
              [](const Angle& l, const Angle& r) { return compare_angles(l, r) < 0; });
}

AngleVector::AngleVector(const Triangulation& t)
    : AngleVector(t.points(), t.triangles())
{
}

std::weak_ordering operator<=>(const AngleVector& l, const AngleVector& r)
{
    const std::size_t k = std::min(l.angles_.size(), r.angles_.size());
    for (std::size_t i = 0; i < k; ++i) {
        const auto c = compare_angles(l.angles_[i], r.angles_[i]);
        if (c != 0) return c;
    }
    return l.angles_.size() <=> r.angles_.size();
}

std::weak_ordering compare_angle_vectors(const Triangulation& t1, const Triangulation& t2)
{
    if (t1 == t2) return std::weak_ordering::equivalent;
    return AngleVector(t1) <=> AngleVector(t2);
}

std::weak_ordering flip_angle_change(const Triangulation& t, const EdgeId& e)
{
    const auto ap = t.apexes(e);
    if (!t.is_flippable(e)) throw FlipError(FlipError::Kind::NotFlippable, e);
    // Angles outside the quadrilateral are shared, so the comparison of the
    // full sorted vectors reduces to the six angles that change.
    const std::array<std::array<int, 3>, 2> before{{{e.a, e.b, ap.left}, {e.a, e.b, ap.right}}};
    const std::array<std::array<int, 3>, 2> after{{{ap.left, ap.right, e.a},
                                                   {ap.left, ap.right, e.b}}};
    return AngleVector(t.points(), after) <=> AngleVector(t.points(), before);
}

// ---------------------------------------------------------------------------
// Constrained Delaunay

DelaunayResult constrained_delaunay(const PointSet& ps, std::span<const EdgeId> constrained,
                                   const Triangulation& start)
{
    if (!(start.points() == ps)) throw ConstraintError("start triangulation is over another point set");
    for (std::size_t i = 0; i < constrained.size(); ++i) {
        if (!ps.valid_edge(constrained[i]))
            throw ConstraintError(edge_list_error("invalid constrained edge", constrained[i]));
        for (std::size_t j = i + 1; j < constrained.size(); ++j)
            if (segments_cross(constrained[i], constrained[j], ps))
                throw ConstraintError("constrained edges " + to_string(constrained[i]) + " and " +
                                      to_string(constrained[j]) + " cross");
        if (!start.contains(constrained[i]))
            throw ConstraintError(edge_list_error("constrained edge missing from start", constrained[i]));
    }

    std::vector<bool> pinned(ps.segment_count(), false);
    for (const EdgeId& e : constrained) pinned[ps.segment_index(e)] = true;

    DelaunayResult result{start, {}};
    Triangulation& t = result.triangulation;
    std::vector<bool> queued(ps.segment_count(), false);
    std::deque<EdgeId> work;
    auto enqueue = [&](const EdgeId& e) {
        const std::size_t i = ps.segment_index(e);
        if (queued[i] || pinned[i]) return;
        queued[i] = true;
        work.push_back(e);
    };
    for (const EdgeId& e : t.edges()) enqueue(e);

    while (!work.empty()) {
        const EdgeId e = work.front();
        work.pop_front();
        queued[ps.segment_index(e)] = false;
        const auto partner = t.flip_partner(e);
        if (!partner) continue;
        const auto change = flip_angle_change(t, e);
        if (change < 0 || (change == 0 && !(*partner < e))) continue;

        const auto ap = t.apexes(e);
        t.flip(e);
        result.flips.push_back({e, *partner});
        enqueue(EdgeId(e.a, ap.left));
        enqueue(EdgeId(ap.left, e.b));
        enqueue(EdgeId(e.b, ap.right));
        enqueue(EdgeId(ap.right, e.a));
    }
    return result;
}

Triangulation delaunay(std::shared_ptr<const PointSet> ps)
{
    const Triangulation start = complete_triangulation(ps, {});
    return constrained_delaunay(*ps, {}, start).triangulation;
}

}  // namespace labelflip
