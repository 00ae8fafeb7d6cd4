#include "labelflip/reconfigure.hpp"

#include "labelflip/flippaths.hpp"

#include <algorithm>

namespace labelflip {

namespace {

void check_universe(const LabelledTriangulation& lt1, const LabelledTriangulation& lt2)
{
    if (!(lt1.triangulation().points() == lt2.triangulation().points()))
        throw LabelUniverseMismatch("labellings are over different point sets");
    if (lt1.triangulation().size() != lt2.triangulation().size())
        throw LabelUniverseMismatch("labellings use different label ranges");
}

}  // namespace

std::optional<Infeasible> feasible(const LabelledTriangulation& lt1,
                                   const LabelledTriangulation& lt2, const OrbitPartition& orbits)
{
    check_universe(lt1, lt2);
    const auto m = static_cast<Label>(lt1.triangulation().size());
    for (Label l = 1; l <= m; ++l)
        if (!orbits.same_orbit(lt1.edge_of(l), lt2.edge_of(l))) return Infeasible{l};
    return std::nullopt;
}

std::optional<Infeasible> feasible(const LabelledTriangulation& lt1,
                                   const LabelledTriangulation& lt2)
{
    check_universe(lt1, lt2);
    return feasible(lt1, lt2, orbits(lt1.triangulation().shared_points()));
}

std::variant<Reconfiguration, Infeasible> reconfigure(const LabelledTriangulation& lt1,
                                                      const LabelledTriangulation& lt2,
                                                      const QuadrilateralGraph& graph)
{
    check_universe(lt1, lt2);
    if (const auto bad = feasible(lt1, lt2, OrbitPartition(graph))) return *bad;

    Reconfiguration out;
    out.flips = path_between(lt1.triangulation(), lt2.triangulation(), {});
    out.unlabelled_flips = out.flips.size();
    LabelledTriangulation current = apply_sequence(lt1, out.flips);

    const auto m = static_cast<Label>(lt2.triangulation().size());
    for (Label l = 1; l <= m; ++l) {
        const EdgeId at = current.edge_of(l);
        const EdgeId wanted = lt2.edge_of(l);
        if (at == wanted) continue;
        const auto swap = realize_elementary_swap(current, at, wanted, graph);
        if (!swap)
            throw std::logic_error("no elementary swap between same-orbit edges " + to_string(at) +
                                   " and " + to_string(wanted));
        current = apply_sequence(current, swap->flips);
        out.flips.insert(out.flips.end(), swap->flips.begin(), swap->flips.end());
        ++out.swap_count;
    }
    if (!(current == lt2)) throw std::logic_error("label repair did not reach the target");
    return out;
}

std::variant<Reconfiguration, Infeasible> reconfigure(const LabelledTriangulation& lt1,
                                                      const LabelledTriangulation& lt2)
{
    check_universe(lt1, lt2);
    return reconfigure(lt1, lt2, QuadrilateralGraph(lt1.triangulation().shared_points()));
}

std::size_t swap_count(const LabelledTriangulation& lt1, const LabelledTriangulation& lt2)
{
    check_universe(lt1, lt2);
    if (!(lt1.triangulation() == lt2.triangulation()))
        throw std::invalid_argument("swap_count needs labellings of the same triangulation");
    if (const auto bad = feasible(lt1, lt2)) {
        throw std::invalid_argument("label " + std::to_string(bad->witness) +
                                    " cannot reach its target edge");
    }
    // Same repair order as reconfigure, tracking labels only.
    std::vector<Label> current(lt1.labels().begin(), lt1.labels().end());
    const std::vector<Label> wanted(lt2.labels().begin(), lt2.labels().end());
    std::size_t swaps = 0;
    const auto m = static_cast<Label>(current.size());
    for (Label l = 1; l <= m; ++l) {
        const auto at = static_cast<std::size_t>(std::find(current.begin(), current.end(), l) -
                                                 current.begin());
        const auto to = static_cast<std::size_t>(std::find(wanted.begin(), wanted.end(), l) -
                                                 wanted.begin());
        if (at == to) continue;
        std::swap(current[at], current[to]);
        ++swaps;
    }
    return swaps;
}

}  // namespace labelflip
