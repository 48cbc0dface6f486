#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency is kept twice: sorted neighbour lists for iteration and a
/// packed bit matrix for constant-time edge tests. Vertex names are
/// optional and only carried for family-built graphs.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints throw GraphError naming the offending pair.
    static Graph from_edge_list(int n, std::span<const Edge> edges, std::vector<std::string> names = {});

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const
    {
        return (matrix_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
    }
    std::span<const Vertex> neighbors(Vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string> & names() const { return names_; }
    /// Name of v, or its decimal index when the graph carries no names.
    std::string name(Vertex v) const;

    /// Structural equality (same order and edge set); names are ignored.
    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.n_ == b.n_ && a.targets_ == b.targets_ && a.offsets_ == b.offsets_;
    }

private:
    Graph() = default;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t words_ = 0;
    std::vector<int> offsets_;
    std::vector<Vertex> targets_;
    std::vector<std::uint64_t> matrix_;
    std::vector<std::string> names_;
};

bool is_connected(const Graph & g);

/// Builds a VertexSet from arbitrary indices, sorting and rejecting
/// duplicates or indices outside 0..n-1.
VertexSet make_vertex_set(int n, std::span<const Vertex> vertices);

// Standard families. Orders: K_n has n, K_{n,m} has n+m (the n-side first),
// P_n has n, C_n has n, star(n) = K_{1,n} with the centre at 0, Q_k has 2^k
// with vertex i adjacent to i xor 2^b.
Graph complete(int n);
Graph complete_bipartite(int n, int m);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph hypercube(int dimension);

/// n triangles sharing one vertex. Index 0 is the centre "w"; index k in
/// 1..2n is "v_k"; {v_{2q-1}, v_{2q}} is the q-th triangle's outer edge.
Graph friendship(int n);

/// Corona product G o H. Vertices 0..|G|-1 are G's (named "v_i"); copy i of
/// H occupies |G| + i*|H| .. |G| + (i+1)*|H| - 1 (named "w_{i,k}"), and every
/// vertex of copy i is joined to vertex i of G.
Graph corona(const Graph & g, const Graph & h);

/// Index of vertex k of copy i inside corona(g, h).
inline Vertex corona_copy_vertex(int g_order, int h_order, int copy, Vertex k)
{
    return g_order + copy * h_order + k;
}

struct InducedSubgraph {
    Graph graph;
    /// old index -> new index, -1 for vertices outside the set.
    std::vector<int> old_to_new;
    std::vector<Vertex> new_to_old;
};

/// Subgraph induced on a nonempty vertex set; new indices follow the
/// ascending order of the old ones.
InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> vertices);

} // namespace symlab
