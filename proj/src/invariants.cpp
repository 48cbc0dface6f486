#include <symlab/invariants.hpp>

#include "aut_engine.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace symlab {

namespace {

// Groups up to this order are expanded in full for lex-leader pruning;
// larger ones contribute their generators and inverses only.
constexpr std::size_t full_symmetry_cap = 512;

PermGroup group_of(detail::AutEngine & engine, std::span<const int> keys, const SearchBudget & budget)
{
    auto r = engine.group(keys, budget);
    return PermGroup(engine.graph().order(), std::move(r.generators), std::move(r.order));
}

std::vector<int> individualising_keys(int n, std::span<const Vertex> prefix)
{
    std::vector<int> keys(n, 0);
    int next = 1;
    for (Vertex v : prefix)
        keys[v] = next++;
    return keys;
}

Permutation inverse(const Permutation & p)
{
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i]] = static_cast<Vertex>(i);
    return inv;
}

/// Depth-first search for a labeling of the free vertices (preset == 0)
/// with labels 1..r that, together with the preset labels, is preserved
/// only by the identity.
///
/// Pruning:
///  - label values are interchangeable, so each free vertex takes at most
///    one label beyond those already used;
///  - a labeling must be lex-least against a set of automorphisms that fix
///    the preset labeling;
///  - a partial labeling dies once some nontrivial automorphism preserves it
///    while fixing every unassigned vertex, since every completion keeps it.
class LabelingSearch {
public:
    LabelingSearch(detail::AutEngine & engine, std::vector<int> preset, int free_labels, const SearchBudget & budget) :
        engine_(engine),
        budget_(budget),
        counter_(budget, "distinguishing labeling search"),
        labels_(std::move(preset)),
        r_(free_labels)
    {
        const int n = static_cast<int>(labels_.size());
        int top = r_;
        for (Vertex v = 0; v < n; ++v) {
            if (labels_[v] == 0)
                free_.push_back(v);
            else if (labels_[v] <= r_)
                throw std::invalid_argument("preset labels must exceed the free label range");
            top = std::max(top, labels_[v]);
        }
        unassigned_base_ = top + 1;
        keys_ = labels_;
        auto group = group_of(engine_, keys_, budget_);
        if (group.order() <= full_symmetry_cap) {
            for (auto & p : enumerate_elements(group, full_symmetry_cap))
                if (!is_identity(p))
                    symmetries_.push_back(std::move(p));
        }
        else {
            for (const auto & p : group.generators()) {
                symmetries_.push_back(p);
                symmetries_.push_back(inverse(p));
            }
        }
        for (Vertex v : free_)
            keys_[v] = unassigned_base_ + v;
    }

    std::optional<std::vector<int>> run()
    {
        if (!extendable() || !dfs(0, 0))
            return std::nullopt;
        return labels_;
    }

private:
    bool extendable() { return engine_.rigid(keys_, budget_); }

    bool lex_ok(std::size_t pos) const
    {
        for (const auto & g : symmetries_) {
            for (std::size_t i = 0; i <= pos; ++i) {
                const int a = labels_[free_[i]];
                const int b = labels_[g[free_[i]]];
                if (b == 0 || b > a)
                    break;
                if (b < a)
                    return false;
            }
        }
        return true;
    }

    bool dfs(std::size_t pos, int max_used)
    {
        counter_.tick();
        if (pos == free_.size())
            return true;
        const Vertex v = free_[pos];
        for (int label = 1; label <= std::min(r_, max_used + 1); ++label) {
            labels_[v] = keys_[v] = label;
            if (lex_ok(pos) && extendable() && dfs(pos + 1, std::max(max_used, label)))
                return true;
        }
        labels_[v] = 0;
        keys_[v] = unassigned_base_ + v;
        return false;
    }

    detail::AutEngine & engine_;
    const SearchBudget & budget_;
    NodeCounter counter_;
    std::vector<int> labels_;
    std::vector<int> keys_;
    std::vector<Vertex> free_;
    std::vector<Permutation> symmetries_;
    int r_;
    int unassigned_base_ = 0;
};

/// Calls f on every k-subset of 0..n-1 in lexicographic order until f
/// returns true.
template <typename F>
bool for_each_subset(int n, int k, F && f)
{
    if (k > n)
        return false;
    VertexSet s(k);
    for (int i = 0; i < k; ++i)
        s[i] = i;
    while (true) {
        if (f(static_cast<const VertexSet &>(s)))
            return true;
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++s[i];
        for (int j = i + 1; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

class DeterminingSearch {
public:
    DeterminingSearch(detail::AutEngine & engine, const SearchBudget & budget) :
        engine_(engine), budget_(budget), counter_(budget, "determining set search"), n_(engine.graph().order())
    {
    }

    /// Is there a base of size |prefix| + slots extending prefix? Branches on
    /// one vertex per orbit of the prefix's pointwise stabilizer.
    bool exists(VertexSet & prefix, int slots)
    {
        counter_.tick();
        auto keys = individualising_keys(n_, prefix);
        auto group = group_of(engine_, keys, budget_);
        if (group.is_trivial())
            return true;
        if (slots == 0 || !order_reachable(group, slots))
            return false;
        for (Vertex v = 0; v < n_; ++v) {
            if (group.orbit_representative(v) != v || group.orbit_size(v) == 1)
                continue;
            prefix.push_back(v);
            const bool ok = exists(prefix, slots - 1);
            prefix.pop_back();
            if (ok)
                return true;
        }
        return false;
    }

    /// Minimum determining sets of the given size in lexicographic order.
    void collect(VertexSet & prefix, Vertex start, int slots, std::size_t limit, std::vector<VertexSet> & out)
    {
        counter_.tick();
        auto keys = individualising_keys(n_, prefix);
        auto group = group_of(engine_, keys, budget_);
        if (group.is_trivial()) {
            if (slots == 0)
                out.push_back(prefix);
            return;
        }
        if (slots == 0 || n_ - start < slots || !order_reachable(group, slots))
            return;
        // Everything still available must suffice, or no completion can.
        VertexSet all(prefix);
        for (Vertex v = start; v < n_; ++v)
            all.push_back(v);
        if (!engine_.rigid(individualising_keys(n_, all), budget_))
            return;
        for (Vertex v = start; v < n_ && out.size() < limit; ++v) {
            // In a minimum set no member is fixed by the stabilizer of the others.
            if (group.orbit_size(v) == 1)
                continue;
            prefix.push_back(v);
            collect(prefix, v + 1, slots - 1, limit, out);
            prefix.pop_back();
        }
    }

private:
    // A base of b more points multiplies orbit sizes no larger than the
    // biggest orbit, so |group| <= max_orbit^b.
    static bool order_reachable(const PermGroup & group, int slots)
    {
        int max_orbit = 1;
        for (Vertex v = 0; v < group.degree(); ++v)
            max_orbit = std::max(max_orbit, group.orbit_size(v));
        GroupOrder bound = 1;
        for (int i = 0; i < slots && bound < group.order(); ++i)
            bound *= max_orbit;
        return bound >= group.order();
    }

    detail::AutEngine & engine_;
    const SearchBudget & budget_;
    NodeCounter counter_;
    int n_;
};

} // namespace

DistinguishingResult distinguishing_number(const Graph & g, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    const int n = g.order();
    if (engine.rigid(std::vector<int>(n, 1), budget))
        return {1, Coloring::uniform(n)};
    for (int r = 2; r <= n; ++r) {
        LabelingSearch search(engine, std::vector<int>(n, 0), r, budget);
        if (auto labels = search.run())
            return {r, Coloring::from_keys(*labels)};
    }
    throw std::logic_error("distinguishing search failed with n labels");
}

CostResult cost(const Graph & g, const SearchBudget & budget)
{
    return cost(g, distinguishing_number(g, budget).d, budget);
}

CostResult cost(const Graph & g, int d, const SearchBudget & budget)
{
    const int n = g.order();
    if (d < 1 || d > n)
        throw std::invalid_argument("cost: d = " + std::to_string(d) + " outside 1..n");
    if (d == 1)
        return {1, n, Coloring::uniform(n)};

    detail::AutEngine engine(g);
    std::optional<std::vector<int>> found;
    auto try_class = [&](const VertexSet & cls) {
        std::vector<int> preset(n, 0);
        for (Vertex v : cls)
            preset[v] = d;
        LabelingSearch search(engine, std::move(preset), d - 1, budget);
        found = search.run();
        return found.has_value();
    };
    // Any d-labeling has a class of size <= n/d, so the loop must succeed.
    for (int k = 1; k <= n / d; ++k) {
        bool hit = false;
        if (k <= 3) {
            for (const auto & cls : orbit_representative_subsets(g, k, budget))
                if ((hit = try_class(cls)))
                    break;
        }
        else {
            hit = for_each_subset(n, k, try_class);
        }
        if (hit) {
            auto witness = Coloring::from_keys(*found);
            if (witness.num_labels() != d)
                throw std::logic_error("cost: a distinguishing labeling with fewer than d labels exists, d is not D(G)");
            return {d, k, std::move(witness)};
        }
    }
    throw std::logic_error("cost: no " + std::to_string(d) + "-distinguishing labeling exists, d is not D(G)");
}

DeterminingResult determining_number(const Graph & g, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    const int n = g.order();
    if (engine.rigid(std::vector<int>(n, 0), budget))
        return {0, {}};
    DeterminingSearch search(engine, budget);
    for (int k = 1; k <= n; ++k) {
        VertexSet prefix;
        if (!search.exists(prefix, k))
            continue;
        std::vector<VertexSet> sets;
        search.collect(prefix, 0, k, 1, sets);
        if (sets.empty())
            throw std::logic_error("determining set of size " + std::to_string(k) + " exists but none was collected");
        return {k, std::move(sets.front())};
    }
    throw std::logic_error("no determining set found");
}

std::vector<VertexSet> minimum_determining_sets(const Graph & g, int det, std::size_t limit, const SearchBudget & budget)
{
    detail::AutEngine engine(g);
    std::vector<VertexSet> out;
    if (limit == 0)
        return out;
    DeterminingSearch search(engine, budget);
    VertexSet prefix;
    search.collect(prefix, 0, det, limit, out);
    return out;
}

bool is_determining_set(const Graph & g, std::span<const Vertex> s, const SearchBudget & budget)
{
    return pointwise_stabilizer_is_trivial(g, s, budget);
}

bool subset_is_d_distinguishable(const Graph & g, std::span<const Vertex> w, std::span<const int> labels,
    const SearchBudget & budget)
{
    if (labels.size() != w.size())
        throw std::invalid_argument("subset labeling must label every vertex of the subset exactly once");
    make_vertex_set(g.order(), w);
    int top = 0;
    for (int l : labels) {
        if (l < 1)
            throw std::invalid_argument("subset labels must be positive");
        top = std::max(top, l);
    }
    std::vector<int> keys(g.order(), top + 1);
    for (std::size_t i = 0; i < w.size(); ++i)
        keys[w[i]] = labels[i];
    detail::AutEngine engine(g);
    auto group = group_of(engine, keys, budget);
    return std::all_of(w.begin(), w.end(), [&](Vertex v) { return group.in_singleton_orbit(v); });
}

SubsetLabeling subset_distinguishing_number(const Graph & g, std::span<const Vertex> w, const SearchBudget & budget)
{
    const VertexSet ws = make_vertex_set(g.order(), w);
    if (ws.empty())
        return {1, {}};
    detail::AutEngine engine(g);
    NodeCounter counter(budget, "subset labeling search");
    const int size = static_cast<int>(ws.size());
    for (int d = 1; d <= size; ++d) {
        // Assigned members carry their label, unassigned members are held
        // fixed by unique keys, the complement shares key d + 1.
        std::vector<int> keys(g.order(), d + 1);
        for (int i = 0; i < size; ++i)
            keys[ws[i]] = d + 2 + i;
        std::vector<int> labels(size, 0);
        auto alive = [&](int assigned) {
            auto group = group_of(engine, keys, budget);
            for (int i = 0; i < assigned; ++i)
                if (!group.in_singleton_orbit(ws[i]))
                    return false;
            return true;
        };
        auto dfs = [&](auto & self, int pos, int max_used) -> bool {
            counter.tick();
            if (pos == size)
                return true;
            for (int label = 1; label <= std::min(d, max_used + 1); ++label) {
                labels[pos] = keys[ws[pos]] = label;
                if (alive(pos + 1) && self(self, pos + 1, std::max(max_used, label)))
                    return true;
            }
            keys[ws[pos]] = d + 2 + pos;
            return false;
        };
        if (dfs(dfs, 0, 0))
            return {d, labels};
    }
    throw std::logic_error("subset labeling with all labels distinct failed");
}

std::vector<VertexSet> orbit_representative_subsets(const Graph & g, int k, const SearchBudget & budget)
{
    const int n = g.order();
    if (k < 0 || k > n)
        return {};
    detail::AutEngine engine(g);
    std::set<VertexSet> found;
    VertexSet prefix;
    auto rec = [&](auto & self) -> void {
        if (static_cast<int>(prefix.size()) == k) {
            VertexSet s = prefix;
            std::sort(s.begin(), s.end());
            found.insert(std::move(s));
            return;
        }
        auto group = group_of(engine, individualising_keys(n, prefix), budget);
        for (Vertex v = 0; v < n; ++v) {
            if (group.orbit_representative(v) != v)
                continue;
            if (std::find(prefix.begin(), prefix.end(), v) != prefix.end())
                continue;
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
        }
    };
    rec(rec);
    return {found.begin(), found.end()};
}

} // namespace symlab
