#pragma once

#include "labelflip/orbits.hpp"
#include "labelflip/swaps.hpp"
#include "labelflip/triangulation.hpp"

#include <optional>
#include <stdexcept>
#include <variant>

namespace labelflip {

class LabelUniverseMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Some label sits in different orbits in the two labellings.
struct Infeasible {
    Label witness;  // the smallest such label
};

struct Reconfiguration {
    FlipSequence flips;
    std::size_t unlabelled_flips = 0;  // leading flips that match the edge sets
    std::size_t swap_count = 0;        // elementary swaps used to repair labels
};

/// nullopt when every label lies in the same orbit in both labellings.
std::optional<Infeasible> feasible(const LabelledTriangulation& lt1,
                                   const LabelledTriangulation& lt2, const OrbitPartition& orbits);
std::optional<Infeasible> feasible(const LabelledTriangulation& lt1,
                                   const LabelledTriangulation& lt2);

/// A flip sequence taking lt1 to lt2 exactly, or the infeasibility witness.
/// Throws LabelUniverseMismatch for labellings over different point sets,
/// and std::logic_error if an elementary swap between two edges of the same
/// orbit cannot be found.
std::variant<Reconfiguration, Infeasible> reconfigure(const LabelledTriangulation& lt1,
                                                      const LabelledTriangulation& lt2,
                                                      const QuadrilateralGraph& graph);
std::variant<Reconfiguration, Infeasible> reconfigure(const LabelledTriangulation& lt1,
                                                      const LabelledTriangulation& lt2);

/// Number of elementary swaps the label repair performs between two
/// labellings of the same triangulation (labels repaired in ascending order).
std::size_t swap_count(const LabelledTriangulation& lt1, const LabelledTriangulation& lt2);

}  // namespace labelflip
