#include <doctest.h>

#include "oracles.hpp"

#include <symlab/invariants.hpp>

#include <random>

using namespace symlab;

namespace {

int min_class(const Coloring & c)
{
    auto s = c.class_sizes();
    return *std::min_element(s.begin(), s.end());
}

} // namespace

TEST_CASE("distinguishing number examples")
{
    for (int n = 3; n <= 9; ++n)
        CHECK(distinguishing_number(path(n)).d == 2);
    CHECK(distinguishing_number(friendship(2)).d == 3);
    CHECK(distinguishing_number(complete(1)).d == 1);
    CHECK(distinguishing_number(complete(6)).d == 6);
    CHECK(distinguishing_number(cycle(5)).d == 3);
    CHECK(distinguishing_number(cycle(6)).d == 2);

    auto r = distinguishing_number(friendship(4));
    CHECK(r.d == 4);
    CHECK(r.witness.num_labels() == 4);
    CHECK(is_color_rigid(friendship(4), r.witness));
}

TEST_CASE("cost examples")
{
    for (int n = 3; n <= 8; ++n) {
        auto c = cost(path(n));
        CHECK(c.d == 2);
        CHECK(c.rho == 1);
    }
    for (int n = 1; n <= 6; ++n)
        CHECK(cost(complete(n)).rho == 1);
    auto f3 = cost(friendship(3));
    CHECK(f3.d == 3);
    CHECK(f3.rho == 2);
    CHECK(is_color_rigid(friendship(3), f3.witness));
    CHECK(f3.witness.num_labels() == 3);
    CHECK(min_class(f3.witness) == 2);

    auto k1 = cost(complete(1));
    CHECK(k1.d == 1);
    CHECK(k1.rho == 1);
    CHECK(cost(path(2)).rho == 1);
}

TEST_CASE("determining number examples")
{
    for (int n = 2; n <= 6; ++n) {
        auto r = determining_number(friendship(n));
        CHECK(r.det == n);
        CHECK(is_determining_set(friendship(n), r.witness));
    }
    for (int n = 1; n <= 7; ++n)
        CHECK(determining_number(complete(n)).det == n - 1);
    // 3 by brute force over all 2^9 subsets and all 9! permutations
    // (oracle::determining_number). Det(G) + n Det(H) would give 4.
    CHECK(determining_number(corona(path(3), complete(2))).det == 3);
    CHECK(determining_number(path(1)).det == 0);
    CHECK(determining_number(friendship(2)).witness == VertexSet{1, 3});
    CHECK(determining_number(cycle(4)).witness == VertexSet{0, 1});
}

TEST_CASE("is_determining_set examples")
{
    auto f3 = friendship(3);
    CHECK(is_determining_set(f3, std::vector<Vertex>{1, 3, 5}));
    CHECK_FALSE(is_determining_set(f3, std::vector<Vertex>{1, 3}));
    // legs of length 1, 2 and 3 from vertex 0
    std::vector<Edge> e{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
    auto rigid = Graph::from_edge_list(7, e);
    CHECK(automorphisms(rigid, Coloring::uniform(7)).order() == 1);
    CHECK(is_determining_set(rigid, std::vector<Vertex>{}));
    CHECK(determining_number(rigid).det == 0);
}

TEST_CASE("minimum determining sets are enumerated in lexicographic order")
{
    auto sets = minimum_determining_sets(complete(3), 2, 100);
    CHECK(sets == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(minimum_determining_sets(complete(4), 3, 2).size() == 2);
    auto f2 = minimum_determining_sets(friendship(2), 2, 100);
    CHECK(f2 == std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("subset distinguishability")
{
    auto p3 = path(3);
    // W = V with a distinguishing labeling coincides with color rigidity.
    CHECK(subset_is_d_distinguishable(p3, std::vector<Vertex>{0, 1, 2}, std::vector<int>{1, 1, 2}));
    CHECK_FALSE(subset_is_d_distinguishable(p3, std::vector<Vertex>{0, 1, 2}, std::vector<int>{1, 2, 1}));
    // The flip moves the endpoint out of W.
    CHECK(subset_is_d_distinguishable(p3, std::vector<Vertex>{0}, std::vector<int>{1}));
    // Rotation by two swaps an antipodal pair.
    CHECK_FALSE(subset_is_d_distinguishable(cycle(4), std::vector<Vertex>{0, 2}, std::vector<int>{1, 1}));
    CHECK(subset_is_d_distinguishable(cycle(4), std::vector<Vertex>{0, 2}, std::vector<int>{1, 2}));

    CHECK(subset_distinguishing_number(cycle(4), std::vector<Vertex>{}).d == 1);
    auto f2 = subset_distinguishing_number(friendship(2), std::vector<Vertex>{1, 3});
    CHECK(f2.d == 2);
    CHECK(subset_is_d_distinguishable(friendship(2), std::vector<Vertex>{1, 3}, f2.labels));
    CHECK(subset_distinguishing_number(complete(3), std::vector<Vertex>{0, 2}).d == 2);
    CHECK(subset_distinguishing_number(path(3), std::vector<Vertex>{0}).d == 1);
}

TEST_CASE("orbit representative subsets cover every orbit")
{
    auto reps = orbit_representative_subsets(friendship(3), 1);
    CHECK(reps == std::vector<VertexSet>{{0}, {1}});
    auto pairs = orbit_representative_subsets(cycle(6), 2);
    // Distances 1, 2, 3 between the two chosen vertices.
    CHECK(pairs.size() == 3);
}

TEST_CASE("invariants match brute force on all connected graphs of order <= 5")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : oracle::connected_graphs(n)) {
            const int d = oracle::distinguishing_number(g);
            auto dr = distinguishing_number(g);
            REQUIRE(dr.d == d);
            CHECK(is_color_rigid(g, dr.witness));
            auto cr = cost(g, d);
            CHECK(cr.rho == oracle::cost(g, d));
            CHECK(min_class(cr.witness) == cr.rho);
            CHECK(cr.witness.num_labels() == d);
            auto det = determining_number(g);
            CHECK(det.det == oracle::determining_number(g));
            CHECK(is_determining_set(g, det.witness));
        }
}

TEST_CASE("subset distinguishing number matches brute force")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        auto graphs = oracle::connected_graphs(n);
        const auto & g = graphs[rng() % graphs.size()];
        std::vector<Vertex> w;
        for (int v = 0; v < n; ++v)
            if (rng() % 2)
                w.push_back(v);
        auto r = subset_distinguishing_number(g, w);
        CHECK(r.d == oracle::subset_distinguishing_number(g, w));
        if (!w.empty())
            CHECK(subset_is_d_distinguishable(g, w, r.labels));
    }
}

TEST_CASE("invariant searches respect the budget")
{
    SearchBudget tiny{5};
    CHECK_THROWS_AS(distinguishing_number(friendship(6), tiny), BudgetExceeded);
    CHECK_THROWS_AS(determining_number(friendship(9), tiny), BudgetExceeded);
}
