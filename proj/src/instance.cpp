#include "labelflip/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

namespace labelflip {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

// Non-blank lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in)
{
    std::vector<Line> lines;
    std::string text;
    for (std::size_t number = 1; std::getline(in, text); ++number) {
        if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
        std::istringstream words(text);
        Line line{number, {}};
        for (std::string w; words >> w;) line.words.push_back(std::move(w));
        if (!line.words.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

template <typename Int>
Int parse_int(const std::string& word, std::size_t line, const char* what)
{
    Int value{};
    const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || end != word.data() + word.size())
        throw ParseError(line, std::string("expected an integer ") + what + ", got '" + word + "'");
    return value;
}

EdgeId parse_edge(const std::string& a, const std::string& b, std::size_t line, const PointSet& ps)
{
    const int u = parse_int<int>(a, line, "point index");
    const int v = parse_int<int>(b, line, "point index");
    const EdgeId e(u, v);
    if (u == v || !ps.valid_edge(e))
        throw ParseError(line, "edge " + a + " " + b + " does not join two distinct points of the set");
    return e;
}

void expect_words(const Line& line, std::size_t count, const char* shape)
{
    if (line.words.size() != count)
        throw ParseError(line.number, std::string("expected '") + shape + "'");
}

bool name_taken(const Instance& inst, const std::string& name)
{
    return inst.find_triangulation(name) || inst.find_labelling(name);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

const Triangulation* Instance::find_triangulation(const std::string& name) const
{
    for (const auto& [n, t] : triangulations)
        if (n == name) return &t;
    return nullptr;
}

const LabelledTriangulation* Instance::find_labelling(const std::string& name) const
{
    for (const auto& [n, lt] : labellings)
        if (n == name) return &lt;
    return nullptr;
}

bool operator==(const Instance& l, const Instance& r)
{
    return *l.points == *r.points && l.triangulations == r.triangulations &&
           l.labellings == r.labellings;
}

Instance parse_instance(std::istream& in)
{
    const std::vector<Line> lines = tokenize(in);
    Instance inst;
    std::size_t i = 0;

    auto block_end = [&](std::size_t header) {
        std::size_t j = header + 1;
        while (j < lines.size() && lines[j].words.front() != "end") ++j;
        if (j == lines.size())
            throw ParseError(lines[header].number, "'" + lines[header].words.front() +
                                                       "' block is missing its 'end'");
        return j;
    };

    if (lines.empty()) throw ParseError(0, "empty instance");
    if (lines[0].words.front() != "points")
        throw ParseError(lines[0].number, "instance must start with a 'points' block");
    expect_words(lines[0], 1, "points");
    {
        const std::size_t end = block_end(0);
        std::vector<Point> pts;
        for (std::size_t j = 1; j < end; ++j) {
            expect_words(lines[j], 2, "x y");
            pts.push_back({parse_int<Coord>(lines[j].words[0], lines[j].number, "coordinate"),
                           parse_int<Coord>(lines[j].words[1], lines[j].number, "coordinate")});
        }
        try {
            inst.points = std::make_shared<const PointSet>(std::move(pts));
        } catch (const GeometryError& err) {
            throw ParseError(lines[0].number, err.what());
        }
        i = end + 1;
    }

    while (i < lines.size()) {
        const Line& header = lines[i];
        const std::string& kind = header.words.front();
        if (kind != "triangulation" && kind != "labelling")
            throw ParseError(header.number, "unknown block '" + kind + "'");
        expect_words(header, 2, (kind + " NAME").c_str());
        const std::string& name = header.words[1];
        if (name_taken(inst, name)) throw ParseError(header.number, "duplicate name '" + name + "'");
        const std::size_t end = block_end(i);
        try {
            if (kind == "triangulation") {
                std::vector<EdgeId> edges;
                for (std::size_t j = i + 1; j < end; ++j) {
                    expect_words(lines[j], 2, "a b");
                    edges.push_back(parse_edge(lines[j].words[0], lines[j].words[1],
                                               lines[j].number, *inst.points));
                }
                inst.triangulations.emplace_back(name, Triangulation(inst.points, std::move(edges)));
            } else {
                std::vector<EdgeId> edges;
                std::vector<std::pair<EdgeId, Label>> labels;
                for (std::size_t j = i + 1; j < end; ++j) {
                    expect_words(lines[j], 3, "label a b");
                    const Label l = parse_int<Label>(lines[j].words[0], lines[j].number, "label");
                    const EdgeId e = parse_edge(lines[j].words[1], lines[j].words[2],
                                                lines[j].number, *inst.points);
                    edges.push_back(e);
                    labels.emplace_back(e, l);
                }
                inst.labellings.emplace_back(
                    name, LabelledTriangulation(Triangulation(inst.points, std::move(edges)), labels));
            }
        } catch (const TriangulationError& err) {
            throw ParseError(header.number, kind + " '" + name + "': " + err.what());
        }
        i = end + 1;
    }
    return inst;
}

Instance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_instance(in);
}

std::string format_instance(const Instance& inst)
{
    std::ostringstream out;
    out << "points\n";
    for (const Point& p : inst.points->points()) out << p.x << ' ' << p.y << '\n';
    out << "end\n";
    for (const auto& [name, t] : inst.triangulations) {
        out << "triangulation " << name << '\n';
        for (const EdgeId& e : t.edges()) out << e.a << ' ' << e.b << '\n';
        out << "end\n";
    }
    for (const auto& [name, lt] : inst.labellings) {
        out << "labelling " << name << '\n';
        std::vector<std::pair<Label, EdgeId>> rows;
        for (std::size_t k = 0; k < lt.labels().size(); ++k)
            rows.emplace_back(lt.labels()[k], lt.triangulation().edges()[k]);
        std::sort(rows.begin(), rows.end());
        for (const auto& [l, e] : rows) out << l << ' ' << e.a << ' ' << e.b << '\n';
        out << "end\n";
    }
    return out.str();
}

std::string instance_hash(const PointSet& ps)
{
    std::uint64_t h = 14695981039346656037ull;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const Point& p : ps.points()) feed(std::to_string(p.x) + ' ' + std::to_string(p.y) + '\n');
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

std::string format_sequence(const PointSet& ps, const FlipSequence& s)
{
    std::ostringstream out;
    out << "flipseq v1\ninstance " << instance_hash(ps) << "\ncount " << s.size() << '\n';
    for (const FlipEvent& ev : s)
        out << "remove " << to_string(ev.removed) << " insert " << to_string(ev.inserted) << '\n';
    return out.str();
}

namespace {

EdgeId parse_dashed_edge(const std::string& word, std::size_t line, const PointSet& ps)
{
    const auto dash = word.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == word.size())
        throw ParseError(line, "expected an edge 'a-b', got '" + word + "'");
    return parse_edge(word.substr(0, dash), word.substr(dash + 1), line, ps);
}

}  // namespace

FlipSequence parse_sequence(std::istream& in, const PointSet& ps)
{
    const std::vector<Line> lines = tokenize(in);
    if (lines.size() < 3) throw ParseError(0, "sequence file is missing its header");
    if (lines[0].words != std::vector<std::string>{"flipseq", "v1"})
        throw ParseError(lines[0].number, "expected 'flipseq v1'");
    expect_words(lines[1], 2, "instance HASH");
    if (lines[1].words[0] != "instance") throw ParseError(lines[1].number, "expected 'instance HASH'");
    if (lines[1].words[1] != instance_hash(ps))
        throw ParseError(lines[1].number, "sequence was written for another instance (hash " +
                                              lines[1].words[1] + ", expected " +
                                              instance_hash(ps) + ")");
    expect_words(lines[2], 2, "count K");
    if (lines[2].words[0] != "count") throw ParseError(lines[2].number, "expected 'count K'");
    const auto count = parse_int<std::size_t>(lines[2].words[1], lines[2].number, "count");
    if (count != lines.size() - 3)
        throw ParseError(lines[2].number, "count says " + std::to_string(count) + " events, file has " +
                                              std::to_string(lines.size() - 3));

    FlipSequence s;
    for (std::size_t j = 3; j < lines.size(); ++j) {
        const Line& line = lines[j];
        expect_words(line, 4, "remove a-b insert c-d");
        if (line.words[0] != "remove" || line.words[2] != "insert")
            throw ParseError(line.number, "expected 'remove a-b insert c-d'");
        s.push_back({parse_dashed_edge(line.words[1], line.number, ps),
                     parse_dashed_edge(line.words[3], line.number, ps)});
    }
    return s;
}

FlipSequence load_sequence(const std::string& path, const PointSet& ps)
{
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_sequence(in, ps);
}

namespace {

std::vector<Point> sample_points(std::size_t n, std::int64_t range, std::size_t retries,
                                 std::mt19937_64& rng)
{
    if (n < 3) throw GeometryError("a point set needs at least 3 points");
    if (range < 1 || range > kMaxCoordinate) throw GeometryError("coordinate range must lie in [1, 2^30]");
    std::uniform_int_distribution<Coord> coord(0, range);
    std::vector<Point> pts;
    while (pts.size() < n) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < retries && !placed; ++attempt) {
            const Point p{coord(rng), coord(rng)};
            placed = std::find(pts.begin(), pts.end(), p) == pts.end();
            for (std::size_t i = 0; i < pts.size() && placed; ++i)
                for (std::size_t j = i + 1; j < pts.size() && placed; ++j)
                    placed = orientation(pts[i], pts[j], p) != Orientation::Collinear;
            if (placed) pts.push_back(p);
        }
        if (!placed)
            throw GeometryError("could not place point " + std::to_string(pts.size()) +
                                " in general position within range " + std::to_string(range));
    }
    return pts;
}

}  // namespace

PointSet random_point_set(std::size_t n, std::int64_t range, std::uint64_t seed, std::size_t retries)
{
    std::mt19937_64 rng(seed);
    return PointSet(sample_points(n, range, retries, rng));
}

Instance random_instance(std::size_t n, std::int64_t range, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.points = std::make_shared<const PointSet>(sample_points(n, range, 10'000, rng));

    std::vector<EdgeId> order(inst.points->segments().begin(), inst.points->segments().end());
    std::shuffle(order.begin(), order.end(), rng);
    Triangulation t = complete_triangulation(inst.points, {}, order);

    std::vector<Label> perm(t.size());
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<EdgeId, Label>> labels;
    for (std::size_t k = 0; k < t.size(); ++k) labels.emplace_back(t.edges()[k], perm[k]);

    inst.triangulations.emplace_back("T", t);
    inst.labellings.emplace_back("A", LabelledTriangulation(t, labels));
    return inst;
}

}  // namespace labelflip
