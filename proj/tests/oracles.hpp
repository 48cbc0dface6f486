#pragma once

// Brute-force references for the tests. Nothing here touches the refinement
// engine: groups come from filtering all n! permutations, invariants from
// exhaustive enumeration over those groups.

#include <symlab/graph.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> automorphisms(const symlab::Graph & g, const std::vector<int> & colors)
{
    const int n = g.order();
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            ok = colors[p[v]] == colors[v];
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<Perm> automorphisms(const symlab::Graph & g)
{
    return automorphisms(g, std::vector<int>(g.order(), 1));
}

inline bool is_identity(const Perm & p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i))
            return false;
    return true;
}

inline bool distinguishing(const std::vector<Perm> & group, const std::vector<int> & labels)
{
    for (const auto & p : group) {
        if (is_identity(p))
            continue;
        bool preserved = true;
        for (std::size_t v = 0; v < p.size() && preserved; ++v)
            preserved = labels[p[v]] == labels[v];
        if (preserved)
            return false;
    }
    return true;
}

/// Calls f on every labeling V -> {1..r}.
template <typename F>
void for_each_labeling(int n, int r, F && f)
{
    std::vector<int> labels(n, 1);
    while (true) {
        f(labels);
        int i = 0;
        while (i < n && labels[i] == r)
            labels[i++] = 1;
        if (i == n)
            return;
        ++labels[i];
    }
}

inline int distinguishing_number(const symlab::Graph & g)
{
    const auto group = automorphisms(g);
    for (int r = 1;; ++r) {
        bool found = false;
        for_each_labeling(g.order(), r, [&](const std::vector<int> & l) { found = found || distinguishing(group, l); });
        if (found)
            return r;
    }
}

/// Least class size over distinguishing labelings using exactly d labels.
inline int cost(const symlab::Graph & g, int d)
{
    const auto group = automorphisms(g);
    int best = g.order() + 1;
    for_each_labeling(g.order(), d, [&](const std::vector<int> & l) {
        std::vector<int> size(d + 1, 0);
        for (int x : l)
            ++size[x];
        if (std::count(size.begin() + 1, size.end(), 0) > 0)
            return;
        if (!distinguishing(group, l))
            return;
        best = std::min(best, *std::min_element(size.begin() + 1, size.end()));
    });
    return best;
}

inline bool fixes_pointwise(const Perm & p, unsigned mask)
{
    for (std::size_t v = 0; v < p.size(); ++v)
        if (((mask >> v) & 1U) && p[v] != static_cast<int>(v))
            return false;
    return true;
}

inline bool determining(const std::vector<Perm> & group, unsigned mask)
{
    for (const auto & p : group)
        if (!is_identity(p) && fixes_pointwise(p, mask))
            return false;
    return true;
}

inline int determining_number(const symlab::Graph & g)
{
    const auto group = automorphisms(g);
    const int n = g.order();
    int best = n;
    for (unsigned mask = 0; mask < (1U << n); ++mask)
        if (__builtin_popcount(mask) < best && determining(group, mask))
            best = __builtin_popcount(mask);
    return best;
}

/// Least d such that w has a labeling whose label classes force w to be
/// fixed pointwise by every automorphism mapping w onto itself.
inline int subset_distinguishing_number(const symlab::Graph & g, const std::vector<int> & w)
{
    if (w.empty())
        return 1;
    const auto group = automorphisms(g);
    std::vector<char> in_w(g.order(), 0);
    for (int v : w)
        in_w[v] = 1;
    for (int d = 1;; ++d) {
        bool found = false;
        for_each_labeling(static_cast<int>(w.size()), d, [&](const std::vector<int> & l) {
            if (found)
                return;
            std::vector<int> label(g.order(), 0);
            for (std::size_t i = 0; i < w.size(); ++i)
                label[w[i]] = l[i];
            for (const auto & p : group) {
                bool setwise = true, keeps = true, pointwise = true;
                for (int v : w) {
                    setwise = setwise && in_w[p[v]];
                    keeps = keeps && (!in_w[p[v]] || label[p[v]] == label[v]);
                    pointwise = pointwise && p[v] == v;
                }
                if (setwise && keeps && !pointwise)
                    return;
            }
            found = true;
        });
        if (found)
            return d;
    }
}

/// Connected labeled graphs on exactly n vertices, by edge-subset mask.
inline std::vector<symlab::Graph> connected_graphs(int n)
{
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            slots.emplace_back(i, j);
    std::vector<symlab::Graph> out;
    for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
        std::vector<symlab::Edge> e;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1UL)
                e.push_back(slots[b]);
        auto g = symlab::Graph::from_edge_list(n, e);
        if (symlab::is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace oracle
