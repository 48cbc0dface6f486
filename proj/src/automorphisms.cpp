#include "aut_engine.hpp"

#include <algorithm>
#include <numeric>

namespace symlab {

BudgetExceeded::BudgetExceeded(const std::string & where, std::uint64_t limit) :
    std::runtime_error(where + ": search budget of " + std::to_string(limit) + " nodes exceeded")
{
}

namespace detail {

AutEngine::AutEngine(const Graph & g) :
    g_(g),
    n_(g.order()),
    offsets_(g.order() + 1, 0),
    order_(g.order()),
    scratch_(g.order())
{
    for (Vertex v = 0; v < n_; ++v)
        offsets_[v + 1] = offsets_[v] + g.degree(v);
    keybuf_.resize(offsets_[n_]);
}

int AutEngine::normalise(std::span<const int> keys, std::vector<int> & colors)
{
    if (keys.size() != static_cast<std::size_t>(n_))
        throw ColoringError("coloring covers " + std::to_string(keys.size()) + " vertices, graph has "
            + std::to_string(n_));
    std::vector<int> distinct(keys.begin(), keys.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    colors.resize(n_);
    for (Vertex v = 0; v < n_; ++v)
        colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
    return static_cast<int>(distinct.size());
}

int AutEngine::refine(std::vector<int> & colors, int k)
{
    while (k < n_) {
        for (Vertex v = 0; v < n_; ++v) {
            int * seg = keybuf_.data() + offsets_[v];
            int i = 0;
            for (Vertex u : g_.neighbors(v))
                seg[i++] = colors[u];
            std::sort(seg, seg + i);
        }
        std::iota(order_.begin(), order_.end(), 0);
        auto less = [&](Vertex a, Vertex b) {
            if (colors[a] != colors[b])
                return colors[a] < colors[b];
            return std::lexicographical_compare(keybuf_.begin() + offsets_[a], keybuf_.begin() + offsets_[a + 1],
                keybuf_.begin() + offsets_[b], keybuf_.begin() + offsets_[b + 1]);
        };
        std::sort(order_.begin(), order_.end(), less);
        int c = 0;
        scratch_[order_[0]] = 0;
        for (int i = 1; i < n_; ++i) {
            if (less(order_[i - 1], order_[i]))
                ++c;
            scratch_[order_[i]] = c;
        }
        std::copy(scratch_.begin(), scratch_.end(), colors.begin());
        if (c + 1 == k)
            break;
        k = c + 1;
    }
    return k;
}

void AutEngine::individualise(std::vector<int> & colors, int & cells, Vertex v) const
{
    const int c = colors[v];
    for (Vertex u = 0; u < n_; ++u)
        if (colors[u] > c || (colors[u] == c && u != v))
            ++colors[u];
    ++cells;
}

int AutEngine::target_cell(const std::vector<int> & colors, int cells) const
{
    std::vector<int> size(cells, 0);
    for (int c : colors)
        ++size[c];
    int best = -1;
    for (int c = 0; c < cells; ++c)
        if (size[c] > 1 && (best < 0 || size[c] < size[best]))
            best = c;
    return best;
}

void AutEngine::fill_invariant(Node & node)
{
    std::vector<Vertex> rep(node.cells, -1);
    std::vector<int> size(node.cells, 0);
    for (Vertex v = 0; v < n_; ++v) {
        if (rep[node.colors[v]] < 0)
            rep[node.colors[v]] = v;
        ++size[node.colors[v]];
    }
    auto & inv = node.invariant;
    inv.clear();
    inv.push_back(node.cells);
    std::vector<int> nbr;
    for (int c = 0; c < node.cells; ++c) {
        inv.push_back(size[c]);
        nbr.clear();
        for (Vertex u : g_.neighbors(rep[c]))
            nbr.push_back(node.colors[u]);
        std::sort(nbr.begin(), nbr.end());
        inv.push_back(static_cast<int>(nbr.size()));
        inv.insert(inv.end(), nbr.begin(), nbr.end());
    }
}

std::optional<Permutation> AutEngine::dive(std::size_t depth, Node & node, NodeCounter & counter)
{
    fill_invariant(node);
    if (node.invariant != path_[depth].invariant)
        return std::nullopt;
    if (node.cells == n_) {
        Permutation sigma(n_);
        for (Vertex v = 0; v < n_; ++v)
            sigma[first_leaf_[node.colors[v]]] = v;
        for (Vertex v = 0; v < n_; ++v)
            if (initial_[sigma[v]] != initial_[v])
                return std::nullopt;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : g_.neighbors(u))
                if (u < v && !g_.adjacent(sigma[u], sigma[v]))
                    return std::nullopt;
        return sigma;
    }
    const int t = path_[depth].target;
    for (Vertex w = 0; w < n_; ++w) {
        if (node.colors[w] != t)
            continue;
        Node child;
        child.colors = node.colors;
        child.cells = node.cells;
        individualise(child.colors, child.cells, w);
        child.cells = refine(child.colors, child.cells);
        counter.tick();
        if (auto sigma = dive(depth + 1, child, counter))
            return sigma;
    }
    return std::nullopt;
}

bool AutEngine::run(std::span<const int> keys, const SearchBudget & budget, bool stop_at_first, Group * out)
{
    NodeCounter counter(budget, "automorphism search");
    path_.clear();
    Node root;
    root.cells = normalise(keys, root.colors);
    initial_ = root.colors;
    root.cells = refine(root.colors, root.cells);
    counter.tick();
    path_.push_back(std::move(root));

    // First path: always branch on the lowest-index vertex of the target cell.
    while (true) {
        Node & node = path_.back();
        fill_invariant(node);
        if (node.cells == n_)
            break;
        node.target = target_cell(node.colors, node.cells);
        Node child;
        child.colors = node.colors;
        child.cells = node.cells;
        Vertex b = static_cast<Vertex>(std::find(node.colors.begin(), node.colors.end(), node.target) - node.colors.begin());
        individualise(child.colors, child.cells, b);
        child.cells = refine(child.colors, child.cells);
        counter.tick();
        path_.push_back(std::move(child));
    }
    first_leaf_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
        first_leaf_[path_.back().colors[v]] = v;

    if (out) {
        out->generators.clear();
        out->order = 1;
    }
    if (path_.size() == 1)
        return false;

    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };

    bool found_any = false;
    // Deepest level first: generators found below fix the base prefix, so
    // the union-find classes at level i are orbits of a subgroup of G_i.
    for (std::size_t level = path_.size() - 1; level-- > 0;) {
        const int t = path_[level].target;
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n_; ++v)
            if (path_[level].colors[v] == t)
                members.push_back(v);
        const Vertex b = members.front();
        std::vector<Vertex> failed;
        for (std::size_t i = 1; i < members.size(); ++i) {
            const Vertex v = members[i];
            if (find(v) == find(b))
                continue;
            if (std::any_of(failed.begin(), failed.end(), [&](Vertex u) { return find(u) == find(v); }))
                continue;
            Node child;
            child.colors = path_[level].colors;
            child.cells = path_[level].cells;
            individualise(child.colors, child.cells, v);
            child.cells = refine(child.colors, child.cells);
            counter.tick();
            auto sigma = dive(level + 1, child, counter);
            if (!sigma) {
                failed.push_back(v);
                continue;
            }
            found_any = true;
            if (stop_at_first)
                return true;
            for (Vertex x = 0; x < n_; ++x) {
                int a = find(x), c = find((*sigma)[x]);
                if (a != c)
                    parent[std::max(a, c)] = std::min(a, c);
            }
            out->generators.push_back(std::move(*sigma));
        }
        if (out) {
            const int root_b = find(b);
            const auto orbit = std::count_if(members.begin(), members.end(), [&](Vertex v) { return find(v) == root_b; });
            out->order *= static_cast<unsigned>(orbit);
        }
    }
    return found_any;
}

AutEngine::Group AutEngine::group(std::span<const int> keys, const SearchBudget & budget)
{
    Group g;
    run(keys, budget, false, &g);
    return g;
}

bool AutEngine::rigid(std::span<const int> keys, const SearchBudget & budget)
{
    return !run(keys, budget, true, nullptr);
}

} // namespace detail

Coloring refine(const Graph & g, const Coloring & coloring)
{
    detail::AutEngine engine(g);
    std::vector<int> colors;
    std::vector<int> keys = coloring.labels();
    if (keys.size() != static_cast<std::size_t>(g.order()))
        throw ColoringError("coloring size does not match graph order");
    colors = keys;
    for (int & c : colors)
        --c;
    engine.refine(colors, coloring.num_labels());
    for (int & c : colors)
        ++c;
    return Coloring::from_labels(std::move(colors));
}

PermGroup automorphisms(const Graph & g, const Coloring & coloring, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    auto result = engine.group(coloring.labels(), budget);
    return PermGroup(g.order(), std::move(result.generators), std::move(result.order));
}

bool is_color_rigid(const Graph & g, const Coloring & coloring, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    return engine.rigid(coloring.labels(), budget);
}

namespace {

std::vector<int> individualising_keys(const Graph & g, std::span<const Vertex> s)
{
    std::vector<int> keys(g.order(), 0);
    int next = 1;
    for (Vertex v : s) {
        if (v < 0 || v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
        if (keys[v] == 0)
            keys[v] = next++;
    }
    return keys;
}

} // namespace

bool pointwise_stabilizer_is_trivial(const Graph & g, std::span<const Vertex> s, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    return engine.rigid(individualising_keys(g, s), budget);
}

PermGroup pointwise_stabilizer(const Graph & g, std::span<const Vertex> s, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    auto result = engine.group(individualising_keys(g, s), budget);
    return PermGroup(g.order(), std::move(result.generators), std::move(result.order));
}

} // namespace symlab
