#pragma once

#include "labelflip/geometry.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace labelflip {

using Label = int;

/// One flip: `removed` is replaced by the other diagonal of its quadrilateral.
struct FlipEvent {
    EdgeId removed;
    EdgeId inserted;

    FlipEvent inverse() const noexcept { return {inserted, removed}; }
    friend bool operator==(const FlipEvent&, const FlipEvent&) = default;
};

using FlipSequence = std::vector<FlipEvent>;

/// The sequence that undoes `s`: reversed, each event inverted.
FlipSequence inverse(const FlipSequence& s);

class TriangulationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class FlipError : public std::invalid_argument {
public:
    enum class Kind { NotPresent, NotFlippable };
    FlipError(Kind kind, const EdgeId& e);
    Kind kind() const noexcept { return kind_; }
    EdgeId edge() const noexcept { return edge_; }

private:
    Kind kind_;
    EdgeId edge_;
};

/// Raised by apply_sequence; `index` is the first event that cannot be applied.
class SequenceError : public std::invalid_argument {
public:
    SequenceError(std::size_t index, const std::string& what);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

bool is_triangulation(std::span<const EdgeId> edges, const PointSet& ps);

/// A maximal non-crossing edge set over a shared PointSet, with an index of
/// the two faces incident to every edge.
class Triangulation {
public:
    static constexpr int kNoApex = -1;

    /// Left and right apex of the faces on either side of edge (a, b), seen
    /// walking from a to b. Hull edges have one side equal to kNoApex.
    struct Apexes {
        int left = kNoApex;
        int right = kNoApex;
    };

    /// Validates that `edges` form a triangulation; throws TriangulationError.
    Triangulation(std::shared_ptr<const PointSet> ps, std::vector<EdgeId> edges);

    const PointSet& points() const noexcept { return *ps_; }
    const std::shared_ptr<const PointSet>& shared_points() const noexcept { return ps_; }

    /// Edges in ascending order.
    std::span<const EdgeId> edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool contains(const EdgeId& e) const noexcept { return position(e).has_value(); }
    std::optional<std::size_t> position(const EdgeId& e) const noexcept;

    Apexes apexes(const EdgeId& e) const;
    bool is_flippable(const EdgeId& e) const;
    std::vector<EdgeId> flippable_edges() const;

    /// The diagonal a flip of e would insert, if e is flippable.
    std::optional<EdgeId> flip_partner(const EdgeId& e) const;

    /// Triangles as ascending index triples, sorted.
    std::vector<std::array<int, 3>> triangles() const;

    /// Returns the triangulation with e flipped; throws FlipError.
    Triangulation flipped(const EdgeId& e) const;

    /// Flips e in place and returns the inserted edge; throws FlipError.
    EdgeId flip(const EdgeId& e);

    friend bool operator==(const Triangulation& l, const Triangulation& r)
    {
        return l.edges_ == r.edges_ && *l.ps_ == *r.ps_;
    }

private:
    Apexes& apexes_at(const EdgeId& e);
    void replace_apex(const EdgeId& e, int from, int to);

    std::shared_ptr<const PointSet> ps_;
    std::vector<EdgeId> edges_;
    std::vector<Apexes> apexes_;
};

/// Completes a non-crossing edge set to a triangulation by greedily adding
/// segments in `candidate_order` (all segments in ascending order if empty).
/// Throws TriangulationError if `required` is not non-crossing.
Triangulation complete_triangulation(std::shared_ptr<const PointSet> ps,
                                     std::span<const EdgeId> required,
                                     std::span<const EdgeId> candidate_order = {});

/// A triangulation whose edges carry the labels 1..m bijectively.
class LabelledTriangulation {
public:
    /// Throws TriangulationError unless the labels are a bijection from the
    /// edges of `tri` onto 1..m.
    LabelledTriangulation(Triangulation tri, std::span<const std::pair<EdgeId, Label>> labels);

    /// Labels 1..m assigned in ascending edge order.
    static LabelledTriangulation with_identity_labels(Triangulation tri);

    const Triangulation& triangulation() const noexcept { return tri_; }
    /// Labels parallel to triangulation().edges().
    std::span<const Label> labels() const noexcept { return labels_; }

    Label label_of(const EdgeId& e) const;
    EdgeId edge_of(Label l) const;

    /// Flips e in place, carrying its label to the new edge.
    FlipEvent flip(const EdgeId& e);

    friend bool operator==(const LabelledTriangulation&, const LabelledTriangulation&) = default;

private:
    LabelledTriangulation(Triangulation tri, std::vector<Label> labels);

    Triangulation tri_;
    std::vector<Label> labels_;
};

std::pair<LabelledTriangulation, FlipEvent> flip(const LabelledTriangulation& lt, const EdgeId& e);

/// Replays `s`; every event must remove a present flippable edge and insert
/// its partner. Throws SequenceError naming the first bad event.
LabelledTriangulation apply_sequence(const LabelledTriangulation& lt, const FlipSequence& s);
Triangulation apply_sequence(const Triangulation& t, const FlipSequence& s);

/// The angle at `apex` between the rays to `from` and `to`.
struct Angle {
    int apex = 0;
    int from = 0;
    int to = 0;
    __int128 dot = 0;           // (from - apex) . (to - apex)
    __int128 norm_product = 0;  // |from - apex|^2 * |to - apex|^2

    static Angle at(const PointSet& ps, int apex, int from, int to);
};

/// Exact comparison of the angle magnitudes, which lie in (0, pi).
std::weak_ordering compare_angles(const Angle& l, const Angle& r);

/// All triangle angles of a triangulation, ascending.
class AngleVector {
public:
    explicit AngleVector(const Triangulation& t);
    /// Angles of the listed triangles only.
    AngleVector(const PointSet& ps, std::span<const std::array<int, 3>> triangles);

    std::span<const Angle> angles() const noexcept { return angles_; }

    friend std::weak_ordering operator<=>(const AngleVector& l, const AngleVector& r);
    friend bool operator==(const AngleVector& l, const AngleVector& r)
    {
        return (l <=> r) == 0;
    }

private:
    std::vector<Angle> angles_;
};

/// Lexicographic comparison of the ascending angle vectors.
std::weak_ordering compare_angle_vectors(const Triangulation& t1, const Triangulation& t2);

/// Effect of flipping e on the angle vector (only the two faces change).
/// Requires e flippable.
std::weak_ordering flip_angle_change(const Triangulation& t, const EdgeId& e);

class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct DelaunayResult {
    Triangulation triangulation;
    FlipSequence flips;
};

/// Lawson flips on unconstrained edges until no flip improves the angle
/// vector. A flip that leaves the angle vector unchanged is taken only when
/// the inserted edge precedes the removed one, which makes the fixed point
/// unique under cocircularity. Throws ConstraintError if constrained edges
/// cross or are missing from `start`.
DelaunayResult constrained_delaunay(const PointSet& ps, std::span<const EdgeId> constrained,
                                   const Triangulation& start);

/// The (unconstrained) Delaunay triangulation.
Triangulation delaunay(std::shared_ptr<const PointSet> ps);

}  // namespace labelflip
