#include <symlab/aut.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace symlab {

std::string to_string(const Permutation & p)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

bool is_identity(const Permutation & p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<Vertex>(i))
            return false;
    return true;
}

Permutation compose(const Permutation & outer, const Permutation & inner)
{
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[inner[i]];
    return out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, GroupOrder order) :
    degree_(degree),
    generators_(std::move(generators)),
    order_(std::move(order)),
    orbit_rep_(degree),
    orbit_size_(degree, 0)
{
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto & gen : generators_)
        for (int v = 0; v < degree; ++v) {
            int a = find(v), b = find(gen[v]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    for (int v = 0; v < degree; ++v) {
        orbit_rep_[v] = find(v);
        ++orbit_size_[orbit_rep_[v]];
    }
}

std::vector<VertexSet> orbits_of(const PermGroup & group)
{
    std::vector<VertexSet> out;
    std::vector<int> slot(group.degree(), -1);
    for (Vertex v = 0; v < group.degree(); ++v) {
        Vertex r = group.orbit_representative(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

std::vector<Permutation> enumerate_elements(const PermGroup & group, std::size_t cap)
{
    if (group.order() > cap)
        throw GroupTooLarge("group order " + group.order().str() + " exceeds enumeration cap " + std::to_string(cap));
    Permutation id(group.degree());
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> seen{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto & e : frontier)
            for (const auto & gen : group.generators()) {
                auto p = compose(gen, e);
                if (seen.insert(p).second)
                    next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace symlab
