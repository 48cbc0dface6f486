#pragma once

#include <symlab/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace symlab {

/// Malformed graph6 input; offset() is the byte position of the problem.
class Graph6Error : public std::invalid_argument {
public:
    Graph6Error(const std::string & what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// line terminators are accepted.
Graph parse_graph6(std::string_view text);

/// Standard graph6 encoding (no header, no newline).
std::string emit_graph6(const Graph & g);

/// Malformed edge-list input; line() is 1-based.
class EdgeListError : public std::invalid_argument {
public:
    EdgeListError(const std::string & what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Edge-list text: a line "n m", then m lines "u v" with 0-based indices.
/// '#' starts a comment running to the end of the line; blank lines are
/// ignored.
Graph parse_edge_list(std::istream & in);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph & g);

} // namespace symlab
