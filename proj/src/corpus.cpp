#include <symlab/corpus.hpp>
#include <symlab/family_spec.hpp>
#include <symlab/graph_io.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>

namespace symlab {

namespace {

constexpr int max_exhaustive_order = 7;

int parse_int(std::string_view text, const std::string & spec)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw CorpusError("bad number '" + std::string(text) + "' in corpus spec '" + spec + "'");
    return value;
}

std::vector<std::pair<int, int>> pair_slots(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            slots.emplace_back(i, j);
    return slots;
}

bool mask_connected(int n, const std::vector<std::pair<int, int>> & slots, std::uint32_t mask)
{
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t b = 0; b < slots.size(); ++b)
        if ((mask >> b) & 1U) {
            adj[slots[b].first] |= 1U << slots[b].second;
            adj[slots[b].second] |= 1U << slots[b].first;
        }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1U)
                next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (n == 32 ? ~0U : (1U << n) - 1);
}

void add_connected(int n, std::vector<CorpusItem> & out)
{
    const auto slots = pair_slots(n);
    const std::uint32_t total = 1U << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (!mask_connected(n, slots, mask))
            continue;
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1U)
                edges.push_back(slots[b]);
        auto g = Graph::from_edge_list(n, edges);
        auto replay = "g6:" + emit_graph6(g);
        out.push_back({std::move(g), std::move(replay), std::nullopt, std::nullopt});
    }
}

std::vector<CorpusItem> all_connected(const std::string & arg, const std::string & spec)
{
    int lo = 1, hi = 0;
    if (arg.rfind("<=", 0) == 0)
        hi = parse_int(std::string_view(arg).substr(2), spec);
    else if (arg.rfind("=", 0) == 0)
        lo = hi = parse_int(std::string_view(arg).substr(1), spec);
    else
        lo = hi = parse_int(arg, spec);
    if (hi < 1 || hi > max_exhaustive_order)
        throw CorpusError("all-connected order must be in 1.." + std::to_string(max_exhaustive_order) + ": '"
            + spec + "'");
    std::vector<CorpusItem> out;
    for (int n = lo; n <= hi; ++n)
        add_connected(n, out);
    return out;
}

std::vector<CorpusItem> friendship_range(const std::string & arg, const std::string & spec)
{
    int lo, hi;
    if (auto dots = arg.find(".."); dots != std::string::npos) {
        lo = parse_int(std::string_view(arg).substr(0, dots), spec);
        hi = parse_int(std::string_view(arg).substr(dots + 2), spec);
    }
    else {
        lo = hi = parse_int(arg, spec);
    }
    if (lo < 2 || hi < lo)
        throw CorpusError("friendship range needs 2 <= A <= B: '" + spec + "'");
    std::vector<CorpusItem> out;
    for (int n = lo; n <= hi; ++n)
        out.push_back({friendship(n), "friendship:" + std::to_string(n), n, std::nullopt});
    return out;
}

std::vector<std::string> split_top_level(const std::string & text, char sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        }
        else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<CorpusItem> corona_pairs(const std::string & arg, const std::string & spec)
{
    std::vector<CorpusItem> out;
    for (const auto & pair : split_top_level(arg, ';')) {
        if (pair.empty())
            continue;
        FamilySpec fs;
        try {
            fs = parse_family_spec("corona:" + pair);
        }
        catch (const FamilySpecError & e) {
            throw CorpusError("bad corona pair '" + pair + "' in '" + spec + "': " + e.what());
        }
        auto g = build(fs.operands[0]);
        auto h = build(fs.operands[1]);
        auto c = corona(g, h);
        out.push_back({std::move(c), "corona-pairs:" + to_string(fs).substr(7), std::nullopt,
            std::make_pair(std::move(g), std::move(h))});
    }
    if (out.empty())
        throw CorpusError("no corona pairs in '" + spec + "'");
    return out;
}

std::optional<int> friendship_parameter(const FamilySpec & fs)
{
    if (fs.kind == FamilyKind::friendship)
        return fs.params.at(0);
    return std::nullopt;
}

std::vector<CorpusItem> from_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw CorpusError("cannot open corpus file '" + path + "'");
    std::vector<CorpusItem> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        try {
            auto g = parse_graph6(line);
            auto replay = "g6:" + emit_graph6(g);
            out.push_back({std::move(g), std::move(replay), std::nullopt, std::nullopt});
        }
        catch (const Graph6Error & e) {
            throw CorpusError(path + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

} // namespace

std::vector<CorpusItem> load_corpus(const std::string & spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CorpusError("corpus spec '" + spec + "' has no kind prefix");
    const auto kind = spec.substr(0, colon);
    const auto arg = spec.substr(colon + 1);
    try {
        if (kind == "all-connected")
            return all_connected(arg, spec);
        if (kind == "friendship")
            return friendship_range(arg, spec);
        if (kind == "corona-pairs")
            return corona_pairs(arg, spec);
        if (kind == "file")
            return from_file(arg);
        if (kind == "g6") {
            auto g = parse_graph6(arg);
            auto replay = "g6:" + emit_graph6(g);
            return {{std::move(g), std::move(replay), std::nullopt, std::nullopt}};
        }
        if (kind == "family") {
            auto fs = parse_family_spec(arg);
            if (fs.kind == FamilyKind::corona) {
                auto g = build(fs.operands[0]);
                auto h = build(fs.operands[1]);
                return {{corona(g, h), "family:" + to_string(fs), std::nullopt, std::make_pair(g, h)}};
            }
            return {{build(fs), "family:" + to_string(fs), friendship_parameter(fs), std::nullopt}};
        }
    }
    catch (const CorpusError &) {
        throw;
    }
    catch (const std::invalid_argument & e) {
        throw CorpusError("corpus spec '" + spec + "': " + e.what());
    }
    throw CorpusError("unknown corpus kind '" + kind + "'");
}

std::size_t count_connected_labeled(int n)
{
    if (n < 1 || n > max_exhaustive_order)
        throw CorpusError("order out of range");
    const auto slots = pair_slots(n);
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask)
        count += mask_connected(n, slots, mask);
    return count;
}

} // namespace symlab
