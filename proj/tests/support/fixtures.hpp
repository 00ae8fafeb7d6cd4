#pragma once

// Point sets and brute-force reference implementations shared by the tests
// and the acceptance runner. Nothing here calls into the search code of the
// library beyond the basic types.

#include "labelflip/triangulation.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using labelflip::EdgeId;
using labelflip::Point;
using labelflip::PointSet;
using labelflip::Triangulation;

using SharedPoints = std::shared_ptr<const PointSet>;

SharedPoints make_points(std::vector<Point> pts);

/// Points (i, i^2) for i = 1..n: convex position, no four cocircular.
SharedPoints convex_polygon(std::size_t n);

/// The pentagon used throughout: convex, no symmetry, no ties in angle
/// vectors.
SharedPoints pentagon();
/// The empty triangle 0, 1, 2 with point 3 inside.
SharedPoints triangle_with_center();

struct NamedPoints {
    std::string name;
    SharedPoints points;
};

/// Every order type with 4 to 6 points, once each; no two triangulations of
/// any of them share an angle vector.
const std::vector<NamedPoints>& curated_suite();

/// Canonical chirotope over all relabellings and reflection; equal strings
/// mean equal order type.
std::string order_type_signature(const PointSet& ps);

/// Random general-position integer points in [0, range)^2.
SharedPoints random_points(std::size_t n, std::int64_t range, std::mt19937_64& rng);

/// Grows a point set one random point at a time, refusing points that would
/// create an empty convex pentagon, restarting when stuck. Returns nullptr if
/// `attempts` restarts do not produce n points.
SharedPoints search_pentagon_free(std::size_t n, std::int64_t range, std::uint64_t seed,
                                  std::size_t attempts = 100'000);

// ---- reference implementations -------------------------------------------

/// All maximal non-crossing edge sets, by backtracking over segments.
std::vector<std::vector<EdgeId>> brute_triangulations(const PointSet& ps);

/// Some 5 points in convex position with no other point inside.
bool brute_has_empty_pentagon(const PointSet& ps);

/// Segments a single label can visit, starting on e, by walking the flip
/// graph with one tracked edge. Returns the reachable segment set, ascending.
std::vector<EdgeId> brute_label_walk(const PointSet& ps, const EdgeId& start);

/// Floating-point angle vector, ascending, for cross-checking exact ordering.
std::vector<double> float_angles(const Triangulation& t);

std::uint64_t catalan(unsigned k);

/// Uniform random labelling of t.
labelflip::LabelledTriangulation random_labelling(const Triangulation& t, std::mt19937_64& rng);

/// A uniformly drawn triangulation-ish: random greedy completion.
Triangulation random_triangulation(const SharedPoints& ps, std::mt19937_64& rng);

}  // namespace fixtures
