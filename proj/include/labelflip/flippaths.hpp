#pragma once

#include "labelflip/triangulation.hpp"

#include <span>
#include <stdexcept>

namespace labelflip {

class PinnedEdgeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Removes every flip that is immediately undone by the next one.
FlipSequence cancel_backtracks(const FlipSequence& s);

/// A flip sequence from t1 to t2 that never flips a pinned edge. Both sides
/// are driven to the Delaunay triangulation constrained to `pinned`, and the
/// second half is reversed. Throws PinnedEdgeError if a pinned edge is
/// missing from either triangulation.
FlipSequence path_between(const Triangulation& t1, const Triangulation& t2,
                          std::span<const EdgeId> pinned);

}  // namespace labelflip
