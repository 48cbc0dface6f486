#include <symlab/graph_io.hpp>

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace symlab {

Graph6Error::Graph6Error(const std::string & what, std::size_t offset) :
    std::invalid_argument("graph6: " + what + " at byte " + std::to_string(offset)),
    offset_(offset)
{
}

EdgeListError::EdgeListError(const std::string & what, std::size_t line) :
    std::invalid_argument("edge list line " + std::to_string(line) + ": " + what),
    line_(line)
{
}

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";
constexpr long long max_graph6_order = 68719476735LL;

int sextet(std::string_view s, std::size_t pos)
{
    if (pos >= s.size())
        throw Graph6Error("truncated input", pos);
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("character code " + std::to_string(c) + " outside 63..126", pos);
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.substr(0, graph6_header.size()) == graph6_header)
        pos = graph6_header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (pos >= text.size())
        throw Graph6Error("empty input", pos);

    long long n = 0;
    if (text[pos] != '~') {
        n = sextet(text, pos++);
    }
    else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | sextet(text, pos++);
    }
    else {
        ++pos;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | sextet(text, pos++);
    }
    if (n < 1)
        throw Graph6Error("graph order must be at least 1", pos - 1);
    if (n > 100000)
        throw Graph6Error("graph order " + std::to_string(n) + " too large", pos - 1);

    for (std::size_t b = pos; b < text.size(); ++b)
        sextet(text, b);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body)
        throw Graph6Error("truncated adjacency data, expected " + std::to_string(body) + " bytes", text.size());
    if (text.size() - pos > body)
        throw Graph6Error("trailing characters", pos + body);

    std::vector<Edge> edges;
    std::size_t k = 0;
    int current = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0)
                current = sextet(text, pos + k / 6);
            if ((current >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    // padding bits ignored
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph & g)
{
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    }
    else if (n <= 258047) {
        out += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    else {
        if (n > max_graph6_order)
            throw std::length_error("graph too large for graph6");
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    int current = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(current + 63);
                current = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out += static_cast<char>((current << (6 - filled)) + 63);
    return out;
}

namespace {

// Splits a line into integer fields, ignoring a trailing '#' comment.
std::vector<long long> fields(const std::string & raw, std::size_t line_no)
{
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
            throw EdgeListError("expected integers, got '" + std::string(line.substr(i)) + "'", line_no);
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::istream & in)
{
    std::string raw;
    std::size_t line_no = 0;
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        auto f = fields(raw, line_no);
        if (f.empty())
            continue;
        if (f.size() != 2)
            throw EdgeListError("expected two integers, got " + std::to_string(f.size()), line_no);
        if (n < 0) {
            n = f[0];
            m = f[1];
            if (n < 1 || n > 100000)
                throw EdgeListError("vertex count must lie in 1..100000", line_no);
            if (m < 0)
                throw EdgeListError("edge count must be nonnegative", line_no);
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw EdgeListError("more edge lines than the declared " + std::to_string(m), line_no);
        if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n)
            throw EdgeListError("endpoint outside 0.." + std::to_string(n - 1), line_no);
        if (f[0] == f[1])
            throw EdgeListError("self-loop on vertex " + std::to_string(f[0]), line_no);
        edges.emplace_back(static_cast<int>(f[0]), static_cast<int>(f[1]));
    }
    if (n < 0)
        throw EdgeListError("missing header line \"n m\"", line_no + 1);
    if (static_cast<long long>(edges.size()) != m)
        throw EdgeListError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()),
            line_no + 1);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace symlab
