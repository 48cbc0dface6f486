#pragma once

#include <symlab/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symlab {

/// One graph of a corpus with where it came from.
struct CorpusItem {
    Graph graph;
    /// Corpus spec that reproduces exactly this item.
    std::string replay;
    std::optional<int> friendship_n;
    /// G and H when the item is the corona G o H.
    std::optional<std::pair<Graph, Graph>> corona_parts;
};

class CorpusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Corpus specs:
///   all-connected:<=N   every connected labeled graph of order 1..N (N <= 7)
///   all-connected:=N    order exactly N (also all-connected:N)
///   friendship:A..B     F_A..F_B (also friendship:A)
///   corona-pairs:(G),(H);(G2),(H2);...   family specs, see parse_family_spec
///   family:SPEC         one family graph
///   file:PATH           graph6, one per line; blank lines and '#' lines skipped
///   g6:STRING           one graph6 string
std::vector<CorpusItem> load_corpus(const std::string & spec);

/// Number of connected labeled graphs on exactly n vertices, by enumeration.
std::size_t count_connected_labeled(int n);

} // namespace symlab
