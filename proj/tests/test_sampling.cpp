#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fracdec/sampling.hpp"

using namespace fracdec;

TEST_CASE("exploration ordering examples") {
    // path a-b-c
    Hypergraph path(3, 2, {{0, 1}, {1, 2}});
    ExplorationResult res = exploration_ordering(path, {});
    CHECK(res.ordering.size() == 3);
    CHECK(res.good_count >= 2);  // ceil(3/2)

    // a single r-edge disjoint from X
    Hypergraph one(4, 3, {{1, 2, 3}});
    ExplorationResult single = exploration_ordering(one, {0});
    CHECK(single.ordering.size() == 3);
    CHECK(single.good_count >= 1);

    // V(J) inside X: vacuous
    ExplorationResult empty = exploration_ordering(path, {0, 1, 2});
    CHECK(empty.ordering.empty());
    CHECK(empty.good_count == 0);

    // isolated vertex outside X
    Hypergraph iso(4, 2, {{0, 1}});
    CHECK_THROWS(exploration_ordering(iso, {}));
}

TEST_CASE("exploration bound on random hypergraphs") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 200; ++it) {
        const int r = 2 + static_cast<int>(rng() % 2);
        const int n = r + 2 + static_cast<int>(rng() % (12 - r - 1));
        std::vector<VertexSet> edges;
        for_each_subset(n, r, [&](const VertexSet& e) {
            if (rng() % 3 == 0) edges.push_back(e);
        });
        Hypergraph j(n, r, edges);
        VertexSet x;
        for (int v = 0; v < n; ++v)
            if (j.degree(v) == 0 || rng() % 4 == 0) x.push_back(v);
        int s = 0;
        for (int v = 0; v < n; ++v)
            if (!std::binary_search(x.begin(), x.end(), v)) ++s;
        ExplorationResult res = exploration_ordering(j, x);
        CHECK(static_cast<int>(res.ordering.size()) == s);
        CHECK(res.good_count >= (s + r - 1) / r);
    }
}

TEST_CASE("uniform family packing, pinned deficiency") {
    Hypergraph g = Hypergraph::complete_minus_edge(8, 2, {0, 1});

    // m = 1 tolerates the single missing edge
    PackingView tolerant = uniform_family_packing(g, 4, 1);
    for (std::uint64_t rk : g.edge_ranks()) CHECK(tolerant.boundary_rank(rk) == 1);

    // m = 0: only samples containing both 0 and 1 fail; 1/C(6,2) = 1/15
    PackingView strict = uniform_family_packing(g, 4, 0);
    CHECK(strict.boundary({2, 3}) == rat(14, 15));
    CHECK(family_deficiency_exact(g, 4, 0, {2, 3}) == rat(1, 15));

    // complete host: deficiency 0 for any m
    Hypergraph complete = Hypergraph::complete(8, 2);
    CHECK(family_deficiency_exact(complete, 4, 0, {2, 3}) == 0);

    // definition identity against the materialized support
    PackingView mat = strict.materialize();
    auto all = boundary_all(mat);
    for (const auto& [rk, v] : all)
        CHECK(v == 1 - family_deficiency_exact(g, 4, 0, g.edge_vertices(rk)));
}

TEST_CASE("monte carlo estimator") {
    Hypergraph g = Hypergraph::complete_minus_edge(8, 2, {0, 1});
    McReport a = family_deficiency_mc(g, 4, 0, {2, 3}, 20000, 42);
    McReport b = family_deficiency_mc(g, 4, 0, {2, 3}, 20000, 42);
    CHECK(a.failures == b.failures);  // determinism
    CHECK(a.generator == "mt19937_64");
    double exact = 1.0 / 15.0;
    CHECK(std::abs(a.estimate - exact) <= 4 * a.std_error + 1e-12);

    McReport zero = family_deficiency_mc(Hypergraph::complete(8, 2), 4, 0, {2, 3}, 1000, 7);
    CHECK(zero.failures == 0);
    CHECK(zero.std_error == 0);
}

TEST_CASE("tail bound evaluation") {
    // r=2 specialization: ratio <= (k d)^s
    TailBoundReport r2 = tail_bound(400, 2, 40, 6, rat(1, 1000), 4);
    double kd = std::pow(40.0 / 1000.0, 4);
    CHECK(r2.ratio_d <= kd * (1 + 1e-9));
    CHECK(r2.precondition_ok);  // d = 1e-3 <= 1/(2e^2*40)

    TailBoundReport r3 = tail_bound(100000, 3, 36, 122, rat(1, 1000000), 9);
    CHECK(r3.simplified_d > 0);
    CHECK(r3.per_edge_d == doctest::Approx(36.0 * r3.simplified_d));

    // boundary of the precondition: simplified bound collapses to 1
    // d = (2 e^2 k)^{-(r-1)} is irrational; approximate within Rat and only
    // check the flag flips across it
    TailBoundReport loose = tail_bound(1000, 2, 10, 6, rat(999, 1000), 2);
    CHECK_FALSE(loose.precondition_ok);
    CHECK_THROWS(tail_bound(100, 2, 10, 6, rat(3, 2), 2));  // d > 1
}
