#pragma once

#include "labelflip/triangulation.hpp"

#include <absl/container/flat_hash_map.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace labelflip {

/// Size guards for the exhaustive searches.
struct OracleLimits {
    std::size_t max_points = 12;
    std::size_t max_labelled_points = 7;
    std::size_t max_triangulations = 2'000'000;
    std::size_t max_labelled_states = 12'000'000;
};

class TooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every triangulation of a point set with its flip adjacency. Nodes are
/// numbered in ascending order of their edge lists.
class FlipGraph {
public:
    struct Arc {
        std::size_t target;
        FlipEvent flip;
    };

    const PointSet& points() const noexcept { return *ps_; }
    const std::shared_ptr<const PointSet>& shared_points() const noexcept { return ps_; }

    std::size_t size() const noexcept { return nodes_.size(); }
    const Triangulation& node(std::size_t i) const { return nodes_.at(i); }
    std::span<const Triangulation> nodes() const noexcept { return nodes_; }
    /// Arcs ordered by the removed edge.
    std::span<const Arc> arcs(std::size_t i) const { return arcs_.at(i); }
    std::optional<std::size_t> index_of(const Triangulation& t) const;
    std::size_t arc_count() const noexcept;

private:
    friend FlipGraph enumerate_triangulations(std::shared_ptr<const PointSet>,
                                              const OracleLimits&);

    std::shared_ptr<const PointSet> ps_;
    std::vector<Triangulation> nodes_;
    std::vector<std::vector<Arc>> arcs_;
    std::map<std::vector<EdgeId>, std::size_t> index_;
};

/// Breadth-first search of the flip graph. Throws TooLarge beyond the limits.
FlipGraph enumerate_triangulations(std::shared_ptr<const PointSet> ps,
                                   const OracleLimits& limits = {});

/// The component of the labelled flip graph containing a seed. States are
/// stored as (triangulation node, packed labels in edge order).
class LabelledFlipGraph {
public:
    LabelledFlipGraph(const LabelledTriangulation& seed, const OracleLimits& limits = {});

    const FlipGraph& flip_graph() const noexcept { return *graph_; }
    std::size_t size() const noexcept { return states_.size(); }
    bool contains(const LabelledTriangulation& lt) const { return distance(lt).has_value(); }
    std::optional<std::size_t> distance(const LabelledTriangulation& lt) const;

    /// Number of reachable labellings of flip-graph node i.
    std::size_t labellings_at(std::size_t i) const { return per_node_.at(i); }

    /// Visits every reachable state; labels are parallel to the node's edges.
    void for_each(const std::function<void(std::size_t node, std::span<const Label> labels,
                                           std::size_t distance)>& visit) const;

private:
    struct Key {
        std::uint32_t node;
        std::uint64_t lo;
        std::uint64_t hi;

        friend bool operator==(const Key&, const Key&) = default;
        template <typename H>
        friend H AbslHashValue(H h, const Key& k)
        {
            return H::combine(std::move(h), k.node, k.lo, k.hi);
        }
    };

    Key pack(std::size_t node, std::span<const Label> labels) const;
    void unpack(const Key& key, std::vector<Label>& labels) const;

    std::shared_ptr<const FlipGraph> graph_;
    unsigned bits_ = 1;
    absl::flat_hash_map<Key, std::uint32_t> states_;
    std::vector<std::size_t> per_node_;
};

LabelledFlipGraph labelled_reachable(const LabelledTriangulation& seed,
                                     const OracleLimits& limits = {});

struct ElementaryCycle {
    enum class Kind { Quadrilateral, Pentagon };
    Kind kind;
    std::vector<EdgeId> face;         // edges shared by every triangulation on the cycle
    std::vector<std::size_t> nodes;   // flip-graph nodes in walking order
    FlipSequence flips;               // closed walk starting at nodes.front()
};

struct CycleCensus {
    std::shared_ptr<const FlipGraph> graph;
    std::vector<ElementaryCycle> four_cycles;
    std::vector<ElementaryCycle> five_cycles;
    std::size_t short_cycles = 0;  // simple flip-graph cycles of length 3, 4 or 5
    std::vector<std::vector<std::size_t>> non_elementary;  // short cycles matching no elementary one
};

/// Edges of the cycle's first triangulation whose label changes after one
/// traversal, ascending. Empty for a 4-cycle; the two starting diagonals,
/// exchanged, for a 5-cycle.
std::vector<EdgeId> displaced_edges(const FlipGraph& graph, const ElementaryCycle& cycle);

CycleCensus elementary_cycle_census(std::shared_ptr<const PointSet> ps,
                                    const OracleLimits& limits = {});

class DegenerateOrder : public std::runtime_error {
public:
    DegenerateOrder(std::vector<std::pair<std::size_t, std::size_t>> ties);
    /// Flip-graph node pairs with equal angle vectors.
    const std::vector<std::pair<std::size_t, std::size_t>>& ties() const noexcept
    {
        return ties_;
    }

private:
    std::vector<std::pair<std::size_t, std::size_t>> ties_;
};

struct ShellingReport {
    std::shared_ptr<const FlipGraph> graph;
    std::vector<std::size_t> order;      // nodes by descending angle vector
    std::vector<std::size_t> failures;   // positions j violating the shelling condition
    bool first_is_delaunay = false;

    bool passed() const noexcept { return failures.empty() && first_is_delaunay; }
};

/// Throws DegenerateOrder when two triangulations have equal angle vectors.
ShellingReport verify_shelling(std::shared_ptr<const PointSet> ps,
                               const OracleLimits& limits = {});

/// F contains every hull edge and no point has all its F-edges within a
/// closed half-plane, i.e. every bounded region of the complement is convex.
/// Throws std::invalid_argument if F is not a non-crossing set of segments.
bool is_interior_face(std::span<const EdgeId> face, const PointSet& ps);

/// Boundary by definition: some triangulation containing F has a
/// non-flippable edge outside F.
bool is_boundary_face_by_enumeration(std::span<const EdgeId> face, const FlipGraph& graph);

}  // namespace labelflip
