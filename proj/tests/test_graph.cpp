#include <doctest.h>

#include <symlab/family_spec.hpp>
#include <symlab/graph.hpp>

#include <algorithm>
#include <set>

using namespace symlab;

namespace {

std::multiset<int> degree_multiset(const Graph & g)
{
    auto d = g.degrees();
    return {d.begin(), d.end()};
}

} // namespace

TEST_CASE("from_edge_list builds small graphs and collapses duplicates")
{
    std::vector<Edge> k2{{0, 1}};
    auto g = Graph::from_edge_list(2, k2);
    CHECK(g.order() == 2);
    CHECK(g.size() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g == complete(2));

    std::vector<Edge> p3{{0, 1}, {1, 2}, {2, 1}, {1, 0}};
    auto p = Graph::from_edge_list(3, p3);
    CHECK(p.size() == 2);
    CHECK(p == path(3));

    auto k1 = Graph::from_edge_list(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
}

TEST_CASE("from_edge_list rejects bad edges with the offending pair")
{
    std::vector<Edge> loop{{0, 1}, {2, 2}};
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, loop), doctest::Contains("(2,2)"), GraphError);
    std::vector<Edge> out{{0, 3}};
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, out), doctest::Contains("(0,3)"), GraphError);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), GraphError);
}

TEST_CASE("standard families have the expected order and degrees")
{
    CHECK(complete(5).size() == 10);
    CHECK(complete_bipartite(2, 3).order() == 5);
    CHECK(complete_bipartite(2, 3).size() == 6);
    CHECK(degree_multiset(path(4)) == std::multiset<int>{1, 1, 2, 2});
    CHECK(degree_multiset(cycle(5)) == std::multiset<int>{2, 2, 2, 2, 2});
    CHECK(degree_multiset(star(3)) == std::multiset<int>{3, 1, 1, 1});
    CHECK(hypercube(3).order() == 8);
    CHECK(hypercube(3).size() == 12);
    for (int v = 0; v < 16; ++v)
        CHECK(hypercube(4).degree(v) == 4);
    CHECK_THROWS_AS(cycle(2), GraphError);
}

TEST_CASE("friendship graph layout")
{
    auto f2 = friendship(2);
    CHECK(f2.order() == 5);
    CHECK(f2.degrees() == std::vector<int>{4, 2, 2, 2, 2});
    CHECK(friendship(15).order() == 31);

    auto f3 = friendship(3);
    std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {3, 4}, {5, 6}};
    CHECK(f3.edges() == expected);
    CHECK(f3.name(0) == "w");
    CHECK(f3.name(5) == "v_5");

    for (int n = 2; n <= 9; ++n) {
        std::multiset<int> want{2 * n};
        for (int i = 0; i < 2 * n; ++i)
            want.insert(2);
        CHECK(degree_multiset(friendship(n)) == want);
        CHECK(friendship(n).size() == static_cast<std::size_t>(3 * n));
    }
    CHECK_THROWS_AS(friendship(1), GraphError);
}

TEST_CASE("corona product")
{
    CHECK(corona(complete(1), complete(1)) == complete(2));

    auto c = corona(path(3), complete(2));
    CHECK(c.order() == 9);
    auto p = path(3);
    for (Vertex v = 0; v < 3; ++v)
        CHECK(c.degree(v) == p.degree(v) + 2);
    CHECK(c.adjacent(1, corona_copy_vertex(3, 2, 1, 0)));
    CHECK(c.adjacent(corona_copy_vertex(3, 2, 1, 0), corona_copy_vertex(3, 2, 1, 1)));
    CHECK_FALSE(c.adjacent(0, corona_copy_vertex(3, 2, 1, 0)));
    CHECK_FALSE(c.adjacent(corona_copy_vertex(3, 2, 0, 0), corona_copy_vertex(3, 2, 1, 0)));

    CHECK(corona(friendship(2), complete(1)).order() == 10);
}

TEST_CASE("corona order identity and degree separation")
{
    const std::vector<Graph> gs{complete(1), complete(2), path(3), cycle(4), star(3), friendship(2)};
    const std::vector<Graph> hs{complete(1), complete(2), path(3), cycle(4), complete_bipartite(1, 3)};
    for (const auto & g : gs)
        for (const auto & h : hs) {
            auto c = corona(g, h);
            CHECK(c.order() == g.order() * (1 + h.order()));
            if (g.order() < 2)
                continue;
            std::set<int> g_degrees;
            for (Vertex v = 0; v < g.order(); ++v)
                g_degrees.insert(c.degree(v));
            for (Vertex w = g.order(); w < c.order(); ++w)
                CHECK(g_degrees.count(c.degree(w)) == 0);
        }
}

TEST_CASE("induced subgraph")
{
    std::vector<Vertex> ends{0, 2};
    auto s = induced_subgraph(path(3), ends);
    CHECK(s.graph.order() == 2);
    CHECK(s.graph.size() == 0);
    CHECK(s.old_to_new == std::vector<int>{0, -1, 1});

    std::vector<Vertex> three{3, 0, 1};
    CHECK(induced_subgraph(complete(4), three).graph == complete(3));

    std::vector<Vertex> triangle{0, 1, 2};
    auto t = induced_subgraph(friendship(2), triangle);
    CHECK(t.graph == complete(3));
    CHECK(t.graph.name(0) == "w");

    CHECK_THROWS_AS(induced_subgraph(path(3), std::vector<Vertex>{}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(path(3), std::vector<Vertex>{0, 5}), GraphError);
}

TEST_CASE("family spec grammar")
{
    auto s = parse_family_spec("corona:(path:3),(complete:2)");
    CHECK(s.kind == FamilyKind::corona);
    REQUIRE(s.operands.size() == 2);
    CHECK(to_string(s) == "corona:(path:3),(complete:2)");
    CHECK(build(s) == corona(path(3), complete(2)));

    CHECK(build(parse_family_spec("friendship:5")) == friendship(5));
    CHECK(build(parse_family_spec("complete_bipartite:2,3")) == complete_bipartite(2, 3));
    CHECK(build(parse_family_spec("hypercube:3")) == hypercube(3));
    auto nested = parse_family_spec("corona:(corona:(path:2),(complete:1)),(complete:1)");
    CHECK(build(nested).order() == 8);
    CHECK(to_string(nested) == "corona:(corona:(path:2),(complete:1)),(complete:1)");

    CHECK_THROWS_AS(parse_family_spec("dodecahedron:3"), FamilySpecError);
    CHECK_THROWS_AS(parse_family_spec("path:"), FamilySpecError);
    CHECK_THROWS_AS(parse_family_spec("path:3x"), FamilySpecError);
    CHECK_THROWS_AS(parse_family_spec("corona:(path:3)"), FamilySpecError);
    CHECK_THROWS_AS(build(parse_family_spec("friendship:1")), GraphError);
}
