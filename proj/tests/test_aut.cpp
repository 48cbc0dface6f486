#include <doctest.h>

#include "oracles.hpp"

#include <symlab/aut.hpp>

#include <random>

using namespace symlab;

namespace {

Graph random_graph(std::mt19937 & rng, int n, int percent)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent)
                e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

std::vector<int> random_labels(std::mt19937 & rng, int n, int max_label)
{
    std::vector<int> l(n);
    for (auto & x : l)
        x = 1 + static_cast<int>(rng() % max_label);
    return l;
}

bool is_automorphism(const Graph & g, const Coloring & c, const Permutation & p)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        if (c.label(p[u]) != c.label(u))
            return false;
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(p[u], p[v]))
                return false;
    }
    return true;
}

GroupOrder factorial(int n)
{
    GroupOrder f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

TEST_CASE("coloring validation")
{
    CHECK(Coloring::from_labels({1, 2, 1}).num_labels() == 2);
    CHECK_THROWS_AS(Coloring::from_labels({1, 3}), ColoringError);
    CHECK_THROWS_AS(Coloring::from_labels({0, 1}), ColoringError);
    auto c = Coloring::from_keys(std::vector<int>{7, 3, 7, 10});
    CHECK(c.labels() == std::vector<int>{2, 1, 2, 3});
    CHECK(c.class_sizes() == std::vector<int>{1, 2, 1});
    CHECK(c.classes() == std::vector<VertexSet>{{1}, {0, 2}, {3}});
}

TEST_CASE("refine examples")
{
    auto f = refine(friendship(2), Coloring::uniform(5));
    auto sizes = f.class_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 4});
    CHECK(f.label(1) == f.label(4));
    CHECK(f.label(0) != f.label(1));

    CHECK(refine(cycle(5), Coloring::uniform(5)) == Coloring::uniform(5));

    auto p = refine(path(4), Coloring::uniform(4));
    CHECK(p.num_labels() == 2);
    CHECK(p.label(0) == p.label(3));
    CHECK(p.label(1) == p.label(2));
    CHECK(p.label(0) != p.label(1));
}

TEST_CASE("refine is stable, idempotent and refines its input")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        auto g = random_graph(rng, n, 40);
        auto c = Coloring::from_keys(random_labels(rng, n, 3));
        auto r = refine(g, c);
        CHECK(refine(g, r) == r);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (r.label(u) != r.label(v))
                    continue;
                CHECK(c.label(u) == c.label(v));
                std::vector<int> cu(r.num_labels() + 1, 0), cv(r.num_labels() + 1, 0);
                for (Vertex x : g.neighbors(u))
                    ++cu[r.label(x)];
                for (Vertex x : g.neighbors(v))
                    ++cv[r.label(x)];
                CHECK(cu == cv);
            }
        // Invariance: any color-preserving automorphism preserves the refinement.
        for (const auto & p : oracle::automorphisms(g, c.labels()))
            for (Vertex v = 0; v < n; ++v)
                CHECK(r.label(p[v]) == r.label(v));
    }
}

TEST_CASE("automorphism group examples")
{
    // 8 = |Aut(F_2)| by filtering all 5! permutations (oracle::automorphisms).
    CHECK(automorphisms(friendship(2), Coloring::uniform(5)).order() == 8);
    CHECK(oracle::automorphisms(friendship(2)).size() == 8);
    for (int n = 1; n <= 7; ++n)
        CHECK(automorphisms(complete(n), Coloring::uniform(n)).order() == factorial(n));
    CHECK(automorphisms(complete(25), Coloring::uniform(25)).order() == factorial(25));
    CHECK(automorphisms(path(3), Coloring::from_labels({1, 2, 1})).order() == 2);
    CHECK(automorphisms(path(3), Coloring::from_labels({1, 1, 2})).order() == 1);
    CHECK(automorphisms(hypercube(4), Coloring::uniform(16)).order() == 384);
    CHECK(automorphisms(friendship(12), Coloring::uniform(25)).order() == factorial(12) * 4096);
    CHECK(automorphisms(cycle(9), Coloring::uniform(9)).order() == 18);
    CHECK(automorphisms(complete_bipartite(3, 3), Coloring::uniform(6)).order() == 72);
}

TEST_CASE("rigidity and pointwise stabilizers")
{
    CHECK(is_color_rigid(path(3), Coloring::from_labels({1, 1, 2})));
    CHECK(is_color_rigid(complete(3), Coloring::from_labels({1, 2, 3})));
    CHECK_FALSE(is_color_rigid(cycle(4), Coloring::uniform(4)));

    auto f2 = friendship(2);
    CHECK(pointwise_stabilizer_is_trivial(f2, std::vector<Vertex>{1, 3}));
    CHECK_FALSE(pointwise_stabilizer_is_trivial(f2, std::vector<Vertex>{1}));
    for (const auto & g : {path(5), cycle(6), friendship(3), hypercube(3)}) {
        std::vector<Vertex> all(g.order());
        std::iota(all.begin(), all.end(), 0);
        CHECK(pointwise_stabilizer_is_trivial(g, all));
    }
    auto stab = pointwise_stabilizer(friendship(3), std::vector<Vertex>{1});
    CHECK(stab.order() == 8);
    CHECK(stab.in_singleton_orbit(2));
}

TEST_CASE("orbits and element enumeration")
{
    auto p3 = automorphisms(path(3), Coloring::uniform(3));
    CHECK(orbits_of(p3) == std::vector<VertexSet>{{0, 2}, {1}});
    CHECK(enumerate_elements(automorphisms(complete(3), Coloring::uniform(3)), 100).size() == 6);
    auto f2 = automorphisms(friendship(2), Coloring::uniform(5));
    auto elements = enumerate_elements(f2, 100);
    auto brute = oracle::automorphisms(friendship(2));
    std::sort(brute.begin(), brute.end());
    CHECK(elements == brute);
    CHECK_THROWS_AS(enumerate_elements(f2, 7), GroupTooLarge);
}

TEST_CASE("engine matches brute force on random colored graphs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        auto g = random_graph(rng, n, static_cast<int>(rng() % 100));
        auto c = trial % 2 ? Coloring::uniform(n) : Coloring::from_keys(random_labels(rng, n, 3));
        auto group = automorphisms(g, c);
        auto brute = oracle::automorphisms(g, c.labels());
        std::sort(brute.begin(), brute.end());
        CHECK(enumerate_elements(group, 5040) == brute);
        CHECK(group.order() == brute.size());
        CHECK((group.order() == 1) == group.generators().empty());
        CHECK(is_color_rigid(g, c) == (brute.size() == 1));
        for (const auto & gen : group.generators())
            CHECK(is_automorphism(g, c, gen));
        // Colored group order divides the uncolored one, which divides n!.
        auto plain = automorphisms(g, Coloring::uniform(n)).order();
        CHECK(plain % group.order() == 0);
        CHECK(factorial(n) % plain == 0);
    }
}

TEST_CASE("search is deterministic")
{
    auto g = corona(cycle(4), path(3));
    auto a = automorphisms(g, Coloring::uniform(g.order()));
    auto b = automorphisms(g, Coloring::uniform(g.order()));
    CHECK(a.generators() == b.generators());
    CHECK(a.order() == b.order());
}

TEST_CASE("budget exhaustion is an explicit error")
{
    SearchBudget tiny{3};
    CHECK_THROWS_AS(automorphisms(complete(8), Coloring::uniform(8), tiny), BudgetExceeded);
    CHECK_THROWS_AS(is_color_rigid(cycle(8), Coloring::uniform(8), tiny), BudgetExceeded);
    CHECK_NOTHROW(automorphisms(complete(8), Coloring::uniform(8)));
}
