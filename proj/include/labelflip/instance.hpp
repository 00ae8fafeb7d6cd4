#pragma once

#include "labelflip/triangulation.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace labelflip {

/// A point set with named triangulations and named labellings.
///
///     # comment
///     points
///     0 0
///     4 1
///     ...
///     end
///     triangulation T
///     0 1
///     ...
///     end
///     labelling A
///     1 0 1        <- label, then the edge's endpoints
///     ...
///     end
struct Instance {
    std::shared_ptr<const PointSet> points;
    std::vector<std::pair<std::string, Triangulation>> triangulations;
    std::vector<std::pair<std::string, LabelledTriangulation>> labellings;

    const Triangulation* find_triangulation(const std::string& name) const;
    const LabelledTriangulation* find_labelling(const std::string& name) const;

    friend bool operator==(const Instance& l, const Instance& r);
};

/// Input that cannot be read; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Instance parse_instance(std::istream& in);
Instance load_instance(const std::string& path);
std::string format_instance(const Instance& inst);

/// FNV-1a of the canonical point listing, as 16 hex digits.
std::string instance_hash(const PointSet& ps);

///     flipseq v1
///     instance <hash>
///     count <k>
///     remove a-b insert c-d
std::string format_sequence(const PointSet& ps, const FlipSequence& s);
/// Throws ParseError on malformed input or a hash that does not match ps.
FlipSequence parse_sequence(std::istream& in, const PointSet& ps);
FlipSequence load_sequence(const std::string& path, const PointSet& ps);

/// Integer points in [0, range]^2 drawn with rejection of duplicates and
/// collinear triples. Throws GeometryError when a point cannot be placed
/// within the retry budget.
PointSet random_point_set(std::size_t n, std::int64_t range, std::uint64_t seed,
                          std::size_t retries = 10'000);

/// random_point_set plus one triangulation ("T") and a shuffled labelling
/// of it ("A"), all drawn from the same seed.
Instance random_instance(std::size_t n, std::int64_t range, std::uint64_t seed);

}  // namespace labelflip
