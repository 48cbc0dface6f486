#include <symlab/graph.hpp>

#include <algorithm>
#include <numeric>

namespace symlab {

namespace {

std::string pair_text(const Edge & e)
{
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges, std::vector<std::string> names)
{
    if (n < 1)
        throw GraphError("graph order must be at least 1, got " + std::to_string(n));
    if (!names.empty() && names.size() != static_cast<std::size_t>(n))
        throw GraphError("vertex name table has " + std::to_string(names.size()) + " entries for "
            + std::to_string(n) + " vertices");

    std::vector<Edge> normalised;
    normalised.reserve(edges.size());
    for (const auto & e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw GraphError("edge " + pair_text(e) + " has an endpoint outside 0.." + std::to_string(n - 1));
        if (e.first == e.second)
            throw GraphError("edge " + pair_text(e) + " is a self-loop");
        normalised.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
    }
    std::sort(normalised.begin(), normalised.end());
    normalised.erase(std::unique(normalised.begin(), normalised.end()), normalised.end());

    Graph g;
    g.n_ = n;
    g.edge_count_ = normalised.size();
    g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.matrix_.assign(g.words_ * n, 0);
    g.names_ = std::move(names);

    std::vector<int> degree(n, 0);
    for (auto [u, v] : normalised) {
        ++degree[u];
        ++degree[v];
        g.matrix_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.matrix_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.targets_.resize(g.offsets_[n]);
    std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : normalised) {
        g.targets_[fill[u]++] = v;
        g.targets_[fill[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        std::sort(g.targets_.begin() + g.offsets_[v], g.targets_.begin() + g.offsets_[v + 1]);
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> result(n_);
    for (Vertex v = 0; v < n_; ++v)
        result[v] = degree(v);
    return result;
}

std::string Graph::name(Vertex v) const
{
    return names_.empty() ? std::to_string(v) : names_[v];
}

bool is_connected(const Graph & g)
{
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == g.order();
}

VertexSet make_vertex_set(int n, std::span<const Vertex> vertices)
{
    VertexSet s(vertices.begin(), vertices.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw GraphError("vertex " + std::to_string(s[i]) + " outside 0.." + std::to_string(n - 1));
        if (i > 0 && s[i] == s[i - 1])
            throw GraphError("vertex " + std::to_string(s[i]) + " listed twice");
    }
    return s;
}

Graph complete(int n)
{
    if (n < 1)
        throw GraphError("complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

Graph complete_bipartite(int n, int m)
{
    if (n < 1 || m < 1)
        throw GraphError("complete bipartite graph needs both sides nonempty");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v)
            e.emplace_back(u, n + v);
    return Graph::from_edge_list(n + m, e);
}

Graph path(int n)
{
    if (n < 1)
        throw GraphError("path needs n >= 1");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, e);
}

Graph cycle(int n)
{
    if (n < 3)
        throw GraphError("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph star(int leaves)
{
    if (leaves < 1)
        throw GraphError("star needs at least one leaf");
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, e);
}

Graph hypercube(int dimension)
{
    if (dimension < 1 || dimension > 16)
        throw GraphError("hypercube dimension must lie in 1..16");
    const int n = 1 << dimension;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dimension; ++b)
            if (int u = v ^ (1 << b); v < u)
                e.emplace_back(v, u);
    return Graph::from_edge_list(n, e);
}

Graph friendship(int n)
{
    if (n < 2)
        throw GraphError("friendship graph F_n is defined for n >= 2, got " + std::to_string(n));
    std::vector<Edge> e;
    std::vector<std::string> names{"w"};
    for (int k = 1; k <= 2 * n; ++k) {
        e.emplace_back(0, k);
        names.push_back("v_" + std::to_string(k));
    }
    for (int q = 1; q <= n; ++q)
        e.emplace_back(2 * q - 1, 2 * q);
    return Graph::from_edge_list(2 * n + 1, e, std::move(names));
}

Graph corona(const Graph & g, const Graph & h)
{
    const int n = g.order();
    const int m = h.order();
    std::vector<Edge> e = g.edges();
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("v_" + std::to_string(i));
    const auto h_edges = h.edges();
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) {
            e.emplace_back(i, corona_copy_vertex(n, m, i, k));
            names.push_back("w_{" + std::to_string(i + 1) + "," + std::to_string(k + 1) + "}");
        }
        for (auto [a, b] : h_edges)
            e.emplace_back(corona_copy_vertex(n, m, i, a), corona_copy_vertex(n, m, i, b));
    }
    return Graph::from_edge_list(n * (1 + m), e, std::move(names));
}

InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> vertices)
{
    VertexSet s = make_vertex_set(g.order(), vertices);
    if (s.empty())
        throw GraphError("induced subgraph needs a nonempty vertex set");
    std::vector<int> old_to_new(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i)
        old_to_new[s[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    std::vector<std::string> names;
    for (Vertex u : s) {
        if (g.has_names())
            names.push_back(g.name(u));
        for (Vertex v : g.neighbors(u))
            if (u < v && old_to_new[v] >= 0)
                e.emplace_back(old_to_new[u], old_to_new[v]);
    }
    const int k = static_cast<int>(s.size());
    return {Graph::from_edge_list(k, e, std::move(names)), std::move(old_to_new), std::move(s)};
}

} // namespace symlab
