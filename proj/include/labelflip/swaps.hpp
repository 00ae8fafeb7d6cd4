#pragma once

#include "labelflip/orbits.hpp"
#include "labelflip/triangulation.hpp"

#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace labelflip {

/// An unordered pair of distinct non-crossing segments, stored first < second.
/// Vertex of the double quadrilateral graph.
struct EdgePair {
    EdgeId first;
    EdgeId second;

    EdgePair(const EdgeId& x, const EdgeId& y) noexcept
        : first(std::min(x, y)), second(std::max(x, y))
    {
    }

    bool contains(const EdgeId& e) const noexcept { return first == e || second == e; }
    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Five point indices in counter-clockwise order, starting at the smallest.
using Pentagon = std::array<int, 5>;

/// A path in the double quadrilateral graph ending at a swap vertex.
struct PairPath {
    std::vector<EdgePair> steps;
    Pentagon pentagon{};  // the empty pentagon witnessing the final swap vertex
};

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kUnlimitedBudget = std::numeric_limits<std::size_t>::max();

/// Pairs reached by holding one segment and moving the other to a
/// quadrilateral-graph neighbour that does not cross the held one; ascending.
std::vector<EdgePair> pair_neighbors(const EdgePair& p, const QuadrilateralGraph& graph);

/// The empty convex pentagon having both segments of p as diagonals, if any.
std::optional<Pentagon> swap_pentagon(const EdgePair& p, const PointSet& ps);
bool is_swap_vertex(const EdgePair& p, const PointSet& ps);

/// Breadth-first search from (e, f) to the nearest swap vertex. Returns
/// nullopt when none is reachable; throws SearchBudgetExceeded once more than
/// `budget` pairs have been visited.
std::optional<PairPath> find_pair_path(const EdgeId& e, const EdgeId& f,
                                       const QuadrilateralGraph& graph,
                                       std::size_t budget = kUnlimitedBudget);

/// The five flips around the pentagon's elementary 5-cycle, starting at the
/// triangulation containing diagonals d1 and d2, that exchange the labels of
/// d1 and d2. Throws PreconditionViolated if t does not contain the pentagon
/// sides and both diagonals, or the pentagon is not empty and convex.
FlipSequence pentagon_swap_sequence(const Triangulation& t, const Pentagon& pentagon,
                                    const EdgeId& d1, const EdgeId& d2);

/// An elementary swap sigma * pi * sigma^-1.
struct ElementarySwap {
    PairPath path;
    FlipSequence approach;        // sigma: carries both labels onto the pentagon diagonals
    FlipSequence pentagon_cycle;  // pi
    FlipSequence flips;           // the whole sequence
};

/// Plans the flips that exchange the labels of e and f in t and restore every
/// other label; nullopt when no swap vertex is reachable from (e, f).
std::optional<ElementarySwap> realize_elementary_swap(const Triangulation& t, const EdgeId& e,
                                                      const EdgeId& f,
                                                      const QuadrilateralGraph& graph,
                                                      std::size_t budget = kUnlimitedBudget);

std::optional<ElementarySwap> realize_elementary_swap(const LabelledTriangulation& lt,
                                                      const EdgeId& e, const EdgeId& f,
                                                      const QuadrilateralGraph& graph,
                                                      std::size_t budget = kUnlimitedBudget);

}  // namespace labelflip
