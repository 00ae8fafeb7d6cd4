#include "labelflip/orbits.hpp"

#include "labelflip/union_find.hpp"

#include <algorithm>
#include <stdexcept>

namespace labelflip {

QuadrilateralGraph::QuadrilateralGraph(std::shared_ptr<const PointSet> ps) : ps_(std::move(ps))
{
    const PointSet& pts = *ps_;
    const auto segs = pts.segments();
    adjacency_.resize(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (crossing_pair_is_empty_quad(segs[i], segs[j], pts)) {
                adjacency_[i].push_back(segs[j]);
                adjacency_[j].push_back(segs[i]);
                ++edge_count_;
            }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const EdgeId> QuadrilateralGraph::neighbors(const EdgeId& e) const
{
    if (!ps_->valid_edge(e)) throw std::out_of_range("invalid segment " + to_string(e));
    return adjacency_[ps_->segment_index(e)];
}

bool QuadrilateralGraph::adjacent(const EdgeId& e, const EdgeId& f) const
{
    const auto n = neighbors(e);
    return std::binary_search(n.begin(), n.end(), f);
}

OrbitPartition::OrbitPartition(const QuadrilateralGraph& graph) : ps_(graph.shared_points())
{
    const auto segs = ps_->segments();
    UnionFind sets(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (const EdgeId& f : graph.neighbors(segs[i])) sets.unite(i, ps_->segment_index(f));

    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> root_orbit(segs.size(), kUnassigned);
    orbit_.resize(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        std::size_t& id = root_orbit[sets.find(i)];
        if (id == kUnassigned) {
            id = members_.size();
            members_.emplace_back();
        }
        orbit_[i] = id;
        members_[id].push_back(segs[i]);
    }
}

std::size_t OrbitPartition::orbit_of(const EdgeId& e) const
{
    if (!ps_->valid_edge(e)) throw std::out_of_range("invalid segment " + to_string(e));
    return orbit_[ps_->segment_index(e)];
}

QuadrilateralGraph quadrilateral_graph(std::shared_ptr<const PointSet> ps)
{
    return QuadrilateralGraph(std::move(ps));
}

OrbitPartition orbits(std::shared_ptr<const PointSet> ps)
{
    return OrbitPartition(QuadrilateralGraph(std::move(ps)));
}

bool same_orbit(const EdgeId& e, const EdgeId& f, const OrbitPartition& op)
{
    return op.same_orbit(e, f);
}

}  // namespace labelflip
