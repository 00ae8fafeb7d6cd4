#pragma once

#include "labelflip/geometry.hpp"

#include <memory>
#include <span>
#include <vector>

namespace labelflip {

/// Graph on all n(n-1)/2 segments; two segments are adjacent when they cross
/// and their endpoints span an empty convex quadrilateral.
class QuadrilateralGraph {
public:
    explicit QuadrilateralGraph(std::shared_ptr<const PointSet> ps);

    const PointSet& points() const noexcept { return *ps_; }
    const std::shared_ptr<const PointSet>& shared_points() const noexcept { return ps_; }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Neighbours in ascending order.
    std::span<const EdgeId> neighbors(const EdgeId& e) const;
    bool adjacent(const EdgeId& e, const EdgeId& f) const;

private:
    std::shared_ptr<const PointSet> ps_;
    std::vector<std::vector<EdgeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Connected components of the quadrilateral graph. Orbits are numbered in
/// order of their smallest segment.
class OrbitPartition {
public:
    explicit OrbitPartition(const QuadrilateralGraph& graph);

    std::size_t orbit_count() const noexcept { return members_.size(); }
    std::size_t orbit_of(const EdgeId& e) const;
    std::span<const EdgeId> members(std::size_t orbit) const { return members_.at(orbit); }
    bool same_orbit(const EdgeId& e, const EdgeId& f) const { return orbit_of(e) == orbit_of(f); }

private:
    std::shared_ptr<const PointSet> ps_;
    std::vector<std::size_t> orbit_;
    std::vector<std::vector<EdgeId>> members_;
};

QuadrilateralGraph quadrilateral_graph(std::shared_ptr<const PointSet> ps);
OrbitPartition orbits(std::shared_ptr<const PointSet> ps);
bool same_orbit(const EdgeId& e, const EdgeId& f, const OrbitPartition& op);

}  // namespace labelflip
