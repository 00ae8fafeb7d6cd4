#include "cli.hpp"

#include "labelflip/instance.hpp"
#include "labelflip/oracle.hpp"
#include "labelflip/orbits.hpp"
#include "labelflip/reconfigure.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace labelflip::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "human";
    std::size_t max_n = 0;

    bool machine() const { return format == "machine"; }

    OracleLimits limits() const
    {
        OracleLimits l;
        if (max_n) {
            l.max_points = max_n;
            l.max_labelled_points = max_n;
        }
        return l;
    }
};

// A failure the command reports itself, with its exit code.
struct Failure {
    int code;
    std::string message;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream file(path);
    if (!file || !(file << text)) throw ParseError(0, "cannot write " + path);
}

const LabelledTriangulation& labelling(const Instance& inst, const std::string& name)
{
    if (const auto* lt = inst.find_labelling(name)) return *lt;
    throw Failure{kInputError, "no labelling named '" + name + "'"};
}

Triangulation triangulation(const Instance& inst, const std::string& name)
{
    if (const auto* t = inst.find_triangulation(name)) return *t;
    if (const auto* lt = inst.find_labelling(name)) return lt->triangulation();
    throw Failure{kInputError, "no triangulation or labelling named '" + name + "'"};
}

json edges_json(std::span<const EdgeId> edges)
{
    json out = json::array();
    for (const EdgeId& e : edges) out.push_back(to_string(e));
    return out;
}

std::string edges_text(std::span<const EdgeId> edges)
{
    std::string out;
    for (const EdgeId& e : edges) out += (out.empty() ? "" : " ") + to_string(e);
    return out;
}

int cmd_orbits(const Common& c, const std::string& path, std::ostream& out)
{
    const Instance inst = load_instance(path);
    const OrbitPartition op = orbits(inst.points);
    if (c.machine()) {
        json j{{"orbits", json::array()}, {"edges", json::object()}};
        for (std::size_t k = 0; k < op.orbit_count(); ++k) {
            j["orbits"].push_back(edges_json(op.members(k)));
            for (const EdgeId& e : op.members(k)) j["edges"][to_string(e)] = k;
        }
        out << j.dump(2) << '\n';
        return kOk;
    }
    out << "orbits " << op.orbit_count() << '\n';
    for (std::size_t k = 0; k < op.orbit_count(); ++k)
        out << "orbit " << k << " size " << op.members(k).size() << ": "
            << edges_text(op.members(k)) << '\n';
    return kOk;
}

int cmd_reconfigure(const Common& c, const std::string& path, const std::string& a,
                    const std::string& b, const std::string& out_path, std::ostream& out)
{
    const Instance inst = load_instance(path);
    const auto result = reconfigure(labelling(inst, a), labelling(inst, b));
    if (const auto* no = std::get_if<Infeasible>(&result)) {
        if (c.machine())
            out << json{{"feasible", false}, {"witness", no->witness}}.dump(2) << '\n';
        else
            out << "infeasible: label " << no->witness
                << " lies in different orbits in " << a << " and " << b << '\n';
        return kSemanticFailure;
    }
    const auto& plan = std::get<Reconfiguration>(result);
    const std::string text = format_sequence(*inst.points, plan.flips);
    if (!out_path.empty()) write_file(out_path, text);
    if (c.machine()) {
        out << json{{"feasible", true},
                    {"length", plan.flips.size()},
                    {"unlabelled_flips", plan.unlabelled_flips},
                    {"swaps", plan.swap_count}}
                   .dump(2)
            << '\n';
    } else {
        out << "feasible: " << plan.flips.size() << " flips (" << plan.unlabelled_flips
            << " to match edges), " << plan.swap_count << " elementary swaps\n";
        if (out_path.empty()) out << text;
    }
    return kOk;
}

int cmd_verify(const Common& c, const std::string& path, const std::string& a,
               const std::string& seq_path, const std::string& b, std::ostream& out)
{
    const Instance inst = load_instance(path);
    const LabelledTriangulation& from = labelling(inst, a);
    const LabelledTriangulation& to = labelling(inst, b);
    const FlipSequence seq = load_sequence(seq_path, *inst.points);

    std::optional<LabelledTriangulation> reached;
    try {
        reached = apply_sequence(from, seq);
    } catch (const SequenceError& e) {
        if (c.machine())
            out << json{{"ok", false}, {"event", e.index()}, {"error", e.what()}}.dump(2) << '\n';
        else
            out << "invalid event " << e.index() << ": " << e.what() << '\n';
        return kSemanticFailure;
    }

    // Where each label ended up versus where it should be.
    json diff = json::array();
    std::vector<std::string> lines;
    for (Label l = 1; l <= static_cast<Label>(to.labels().size()); ++l) {
        const EdgeId got = reached->edge_of(l);
        const EdgeId want = to.edge_of(l);
        if (got == want) continue;
        diff.push_back({{"label", l}, {"expected", to_string(want)}, {"got", to_string(got)}});
        lines.push_back("label " + std::to_string(l) + ": expected " + to_string(want) + ", got " +
                        to_string(got));
    }
    if (c.machine()) {
        out << json{{"ok", diff.empty()}, {"events", seq.size()}, {"diff", diff}}.dump(2) << '\n';
    } else if (diff.empty()) {
        out << "ok: " << seq.size() << " flips take " << a << " to " << b << '\n';
    } else {
        out << "mismatch after " << seq.size() << " flips:\n";
        for (const auto& line : lines) out << "  " << line << '\n';
    }
    return diff.empty() ? kOk : kSemanticFailure;
}

int cmd_delaunay(const Common& c, const std::string& path, const std::string& from,
                 const std::string& out_path, std::ostream& out)
{
    const Instance inst = load_instance(path);
    if (from.empty()) {
        const Triangulation d = delaunay(inst.points);
        if (c.machine())
            out << json{{"edges", edges_json(d.edges())}}.dump(2) << '\n';
        else
            out << "delaunay " << d.size() << " edges: " << edges_text(d.edges()) << '\n';
        return kOk;
    }
    const DelaunayResult r = constrained_delaunay(*inst.points, {}, triangulation(inst, from));
    if (!out_path.empty()) write_file(out_path, format_sequence(*inst.points, r.flips));
    if (c.machine())
        out << json{{"edges", edges_json(r.triangulation.edges())}, {"flips", r.flips.size()}}.dump(2)
            << '\n';
    else
        out << "delaunay " << r.triangulation.size() << " edges: "
            << edges_text(r.triangulation.edges()) << "\nreached from " << from << " in "
            << r.flips.size() << " flips\n";
    return kOk;
}

int cmd_random(std::size_t n, std::int64_t range, std::uint64_t seed, const std::string& out_path,
               std::ostream& out)
{
    const std::string text = format_instance(random_instance(n, range, seed));
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    return kOk;
}

int cmd_shelling(const Common& c, const std::string& path, std::ostream& out)
{
    const Instance inst = load_instance(path);
    try {
        const ShellingReport r = verify_shelling(inst.points, c.limits());
        if (c.machine()) {
            out << json{{"triangulations", r.order.size()},
                        {"failures", r.failures},
                        {"first_is_delaunay", r.first_is_delaunay},
                        {"passed", r.passed()}}
                       .dump(2)
                << '\n';
        } else {
            out << "triangulations " << r.order.size() << '\n'
                << "first is delaunay: " << (r.first_is_delaunay ? "yes" : "no") << '\n';
            for (std::size_t j : r.failures) out << "shelling fails at position " << j << '\n';
            out << (r.passed() ? "shelling: pass\n" : "shelling: FAIL\n");
        }
        return r.passed() ? kOk : kSemanticFailure;
    } catch (const DegenerateOrder& d) {
        if (c.machine()) {
            out << json{{"passed", false}, {"ties", d.ties()}}.dump(2) << '\n';
        } else {
            out << "degenerate order: " << d.what() << '\n';
            for (const auto& [i, j] : d.ties()) out << "  tie " << i << " " << j << '\n';
        }
        return kSemanticFailure;
    }
}

int cmd_census(const Common& c, const std::string& path, std::ostream& out)
{
    const Instance inst = load_instance(path);
    const CycleCensus census = elementary_cycle_census(inst.points, c.limits());
    std::size_t bad_four = 0;
    std::size_t bad_five = 0;
    for (const auto& cycle : census.four_cycles)
        if (!displaced_edges(*census.graph, cycle).empty()) ++bad_four;
    for (const auto& cycle : census.five_cycles) {
        const auto moved = displaced_edges(*census.graph, cycle);
        const std::vector<EdgeId> diagonals = [&] {
            std::vector<EdgeId> d{cycle.flips[0].removed, cycle.flips[1].removed};
            std::sort(d.begin(), d.end());
            return d;
        }();
        if (moved != diagonals) ++bad_five;
    }
    const bool ok = census.non_elementary.empty() && bad_four == 0 && bad_five == 0;
    if (c.machine()) {
        out << json{{"triangulations", census.graph->size()},
                    {"four_cycles", census.four_cycles.size()},
                    {"five_cycles", census.five_cycles.size()},
                    {"short_cycles", census.short_cycles},
                    {"non_elementary", census.non_elementary},
                    {"four_cycles_moving_labels", bad_four},
                    {"five_cycles_not_transposing", bad_five},
                    {"passed", ok}}
                   .dump(2)
            << '\n';
    } else {
        out << "triangulations " << census.graph->size() << '\n'
            << "4-cycles " << census.four_cycles.size() << '\n'
            << "5-cycles " << census.five_cycles.size() << '\n'
            << "short cycles " << census.short_cycles << ", non-elementary "
            << census.non_elementary.size() << '\n'
            << "4-cycles moving labels " << bad_four << ", 5-cycles not transposing " << bad_five
            << '\n'
            << (ok ? "census: pass\n" : "census: FAIL\n");
    }
    return ok ? kOk : kSemanticFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Flip reconfiguration of edge-labelled triangulations", "labelflip"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "Output style")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--max-n", common.max_n, "Raise or lower the point limit of exhaustive searches");

    std::string instance, a, b, seq, out_path, from;
    std::size_t n = 0;
    std::int64_t range = 1000;
    std::uint64_t seed = 0;
    int code = kOk;
    std::function<int()> action;

    auto* orbits_cmd = app.add_subcommand("orbits", "Print the orbit partition of all segments");
    orbits_cmd->add_option("instance", instance)->required();
    orbits_cmd->callback([&] { action = [&] { return cmd_orbits(common, instance, out); }; });

    auto* reconf = app.add_subcommand("reconfigure", "Find flips taking labelling A to labelling B");
    reconf->add_option("instance", instance)->required();
    reconf->add_option("from", a, "Source labelling")->required();
    reconf->add_option("to", b, "Target labelling")->required();
    reconf->add_option("--out", out_path, "Write the flip sequence here");
    reconf->callback(
        [&] { action = [&] { return cmd_reconfigure(common, instance, a, b, out_path, out); }; });

    auto* verify = app.add_subcommand("verify", "Replay a flip sequence and compare");
    verify->add_option("instance", instance)->required();
    verify->add_option("from", a)->required();
    verify->add_option("sequence", seq)->required();
    verify->add_option("to", b)->required();
    verify->callback([&] { action = [&] { return cmd_verify(common, instance, a, seq, b, out); }; });

    auto* del = app.add_subcommand("delaunay", "Print the Delaunay triangulation");
    del->add_option("instance", instance)->required();
    del->add_option("--from", from, "Run Lawson flips from this triangulation or labelling");
    del->add_option("--out", out_path, "Write the Lawson flip sequence here");
    del->callback([&] { action = [&] { return cmd_delaunay(common, instance, from, out_path, out); }; });

    auto* rnd = app.add_subcommand("random", "Generate a random instance");
    rnd->add_option("n", n, "Number of points")->required()->check(CLI::Range(3, 100000));
    rnd->add_option("--range", range, "Coordinates are drawn from [0, range]");
    rnd->add_option("--seed", seed);
    rnd->add_option("--out", out_path);
    rnd->callback([&] { action = [&] { return cmd_random(n, range, seed, out_path, out); }; });

    auto* shell = app.add_subcommand("shelling-check", "Check the angle-vector shelling order");
    shell->add_option("instance", instance)->required();
    shell->callback([&] { action = [&] { return cmd_shelling(common, instance, out); }; });

    auto* census = app.add_subcommand("census", "Count elementary 4- and 5-cycles");
    census->add_option("instance", instance)->required();
    census->callback([&] { action = [&] { return cmd_census(common, instance, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kOk : kInputError;
    }

    try {
        code = action();
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        code = f.code;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << " (see --max-n)\n";
        code = kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        code = kInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        code = kInputError;
    }
    return code;
}

}  // namespace labelflip::cli
