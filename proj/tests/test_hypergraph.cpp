#include <doctest.h>

#include <random>

#include "fracdec/hypergraph.hpp"

using namespace fracdec;

namespace {

Hypergraph random_graph(std::mt19937_64& rng, int n, int r, double density) {
    std::vector<VertexSet> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for_each_subset(n, r, [&](const VertexSet& e) {
        if (coin(rng) < density) edges.push_back(e);
    });
    return Hypergraph(n, r, edges);
}

}  // namespace

TEST_CASE("construction and validation errors") {
    CHECK(Hypergraph::complete(4, 2).edge_count() == 6);
    CHECK_THROWS(Hypergraph(4, 2, {{0, 1}, {1, 0}}));  // duplicate under reordering
    CHECK_THROWS(Hypergraph(3, 4, {}));                // r > n
    CHECK_THROWS(Hypergraph(4, 2, {{0, 4}}));          // vertex out of range
    CHECK_THROWS(Hypergraph(4, 2, {{0, 1, 2}}));       // wrong arity
}

TEST_CASE("complement is an involution and partitions the slots") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10; ++it) {
        Hypergraph g = random_graph(rng, 8, 3, 0.4);
        Hypergraph gc = g.complement();
        CHECK(g.edge_count() + gc.edge_count() == binom(8, 3));
        Hypergraph gcc = gc.complement();
        CHECK(gcc.edge_ranks() == g.edge_ranks());
    }
    CHECK(Hypergraph::complete(6, 2).complement().edge_count() == 0);
}

TEST_CASE("codegree and degree") {
    CHECK(Hypergraph::complete(9, 3).codegree_min() == 7);  // n - r + 1
    CHECK(Hypergraph::complete_minus_edge(6, 2, {0, 1}).codegree_min() == 4);
    CHECK(Hypergraph(5, 2, {}).codegree_min() == 0);
    CHECK(Hypergraph::complete(4, 2).vertex_degree_max() == 3);
    CHECK(Hypergraph(10, 3, {{1, 4, 7}}).vertex_degree_max() == 1);

    // codegree identity against the complement
    std::mt19937_64 rng(11);
    Hypergraph g = random_graph(rng, 9, 3, 0.5);
    Hypergraph gc = g.complement();
    for_each_subset(9, 2, [&](const VertexSet& s) {
        std::uint64_t dg = 0, dc = 0;
        for (int v = 0; v < 9; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            VertexSet e = s;
            e.push_back(v);
            std::sort(e.begin(), e.end());
            if (g.has_edge(e)) ++dg;
            if (gc.has_edge(e)) ++dc;
        }
        CHECK(dg + dc == 9 - 2);
    });
}

TEST_CASE("link graph") {
    Hypergraph k43 = Hypergraph::complete(4, 3);
    Hypergraph link = k43.link_graph(0);
    CHECK(link.r() == 2);
    CHECK(link.n() == 3);
    CHECK(link.edge_count() == 3);  // K_3^2

    Hypergraph g(6, 3, {{0, 1, 2}, {0, 3, 4}});
    CHECK(g.link_graph(0).edge_count() == g.degree(0));
    CHECK(g.link_graph(5).edge_count() == 0);
    CHECK(g.link_graph(5).n() == 0);
    CHECK_THROWS(g.link_graph(6));
}

TEST_CASE("divisibility") {
    CHECK(Hypergraph::complete(7, 2).is_divisible(3));
    CHECK_FALSE(Hypergraph::complete(6, 2).is_divisible(3));
    CHECK(Hypergraph(5, 2, {}).is_divisible(3));
    CHECK_THROWS(Hypergraph::complete(6, 2).is_divisible(2));  // q <= r
}

TEST_CASE("clique enumeration") {
    CHECK(Hypergraph::complete(5, 2).enumerate_cliques(3).size() == 10);
    Hypergraph cycle(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(cycle.enumerate_cliques(3).empty());
    CHECK(Hypergraph::complete_minus_edge(6, 2, {0, 1}).enumerate_cliques(3).size() == 16);
    CHECK(Hypergraph::complete(7, 3).enumerate_cliques(5).size() == binom(7, 5));
}

TEST_CASE("induced subgraphs") {
    Hypergraph k83 = Hypergraph::complete(8, 3);
    CHECK(k83.induced({1, 3, 4, 6, 7}).edge_count() == binom(5, 3));

    std::mt19937_64 rng(13);
    Hypergraph g = random_graph(rng, 9, 3, 0.5);
    VertexSet s{0, 2, 3, 5, 8};
    Hypergraph sub = g.induced(s);
    std::uint64_t expect = 0;
    for (std::uint64_t rk : g.edge_ranks()) {
        VertexSet e = g.edge_vertices(rk);
        if (std::includes(s.begin(), s.end(), e.begin(), e.end())) ++expect;
    }
    CHECK(sub.edge_count() == expect);
    CHECK_THROWS(g.induced({0, 1}));  // smaller than r
}

TEST_CASE("matching validation") {
    check_matching(Matching{{{0, 1}, {2, 3}}}, 6, 2);
    CHECK_THROWS(check_matching(Matching{{{0, 1}, {1, 2}}}, 6, 2));  // shared vertex
    CHECK_THROWS(check_matching(Matching{{{0, 1, 2}}}, 6, 2));       // arity
}
