#include "labelflip/flippaths.hpp"

namespace labelflip {

FlipSequence cancel_backtracks(const FlipSequence& s)
{
    FlipSequence out;
    out.reserve(s.size());
    for (const FlipEvent& ev : s) {
        if (!out.empty() && out.back() == ev.inverse())
            out.pop_back();
        else
            out.push_back(ev);
    }
    return out;
}

FlipSequence path_between(const Triangulation& t1, const Triangulation& t2,
                          std::span<const EdgeId> pinned)
{
    if (!(t1.points() == t2.points()))
        throw std::invalid_argument("triangulations are over different point sets");
    for (const EdgeId& e : pinned)
        if (!t1.contains(e) || !t2.contains(e))
            throw PinnedEdgeError("pinned edge " + to_string(e) + " is missing from " +
                                  (t1.contains(e) ? "the target" : "the source"));
    if (t1 == t2) return {};

    const PointSet& ps = t1.points();
    const DelaunayResult from_source = constrained_delaunay(ps, pinned, t1);
    const DelaunayResult from_target = constrained_delaunay(ps, pinned, t2);
    if (!(from_source.triangulation == from_target.triangulation))
        throw std::logic_error("constrained Delaunay hub is not unique");

    FlipSequence path = from_source.flips;
    const FlipSequence back = inverse(from_target.flips);
    path.insert(path.end(), back.begin(), back.end());
    return cancel_backtracks(path);
}

}  // namespace labelflip
