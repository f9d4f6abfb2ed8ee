#include <doctest.h>

#include <random>

#include "fracdec/matching_decomp.hpp"
#include "oracles.hpp"

using namespace fracdec;

TEST_CASE("quasi-independent distribution, pinned shapes") {
    SubsetDistribution d2 = quasi_independent_distribution(2, rat(1, 2));
    CHECK(d2.by_size == std::vector<Rat>{Rat(0), rat(1, 2), Rat(0)});

    SubsetDistribution d3 = quasi_independent_distribution(3, rat(1, 2));
    CHECK(d3.by_size == std::vector<Rat>{rat(1, 4), Rat(0), rat(1, 4), Rat(0)});

    CHECK_THROWS_AS(quasi_independent_distribution(3, rat(2, 3)), std::domain_error);
    CHECK_THROWS_AS(quasi_independent_distribution(4, rat(3, 5)), std::domain_error);
}

TEST_CASE("size distribution conditioned on a t-subset") {
    SubsetDistribution d3 = quasi_independent_distribution(3, rat(1, 2));
    auto s0 = size_distribution(d3, 0);
    CHECK(s0[0] == rat(1, 4));
    CHECK(s0[1] == 0);
    CHECK(s0[2] == rat(3, 4));
    CHECK(s0[3] == 0);

    SubsetDistribution d2 = quasi_independent_distribution(2, rat(1, 2));
    auto s1 = size_distribution(d2, 1);
    CHECK(s1[1] == 1);
    CHECK(s1[2] == 0);

    // normalization for arbitrary r, t = r-1
    for (int r = 2; r <= 5; ++r) {
        auto d = quasi_independent_distribution(r, rat(1, 3));
        auto s = size_distribution(d, r - 1);
        Rat sum = 0;
        for (const auto& [sz, pr] : s) {
            CHECK(pr >= 0);
            sum += pr;
        }
        CHECK(sum == 1);
    }
    CHECK_THROWS(size_distribution(d3, 3));  // conditioning on a null event
}

TEST_CASE("deficiency pinned values") {
    CHECK(deficiency_exact(12, 2, 3, Matching{{{0, 1}}}, rat(1, 2), {4, 5}) == rat(37, 256));
    Matching pm10{{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}};
    CHECK(deficiency_exact(10, 2, 3, pm10, rat(1, 2), {0, 2}) == 1);
    // empty matching reduces to a binomial tail
    CHECK(deficiency_exact(12, 2, 3, Matching{}, rat(1, 2), {0, 1}) ==
          oracle::brute_deficiency(12, 2, 3, Matching{}, rat(1, 2), {0, 1}));
}

TEST_CASE("deficiency equals brute force on random instances") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 12; ++it) {
        const int r = 2 + static_cast<int>(it % 2);
        const int n = (r == 2 ? 8 : 9) + static_cast<int>(rng() % 4);
        const int q = 3;
        const int msize = static_cast<int>(rng() % (r == 2 ? 3 : 2));
        Matching m;
        for (int i = 0; i < msize; ++i) {
            VertexSet e;
            for (int j = 0; j < r; ++j) e.push_back(i * r + j);
            m.edges.push_back(e);
        }
        VertexSet e;  // edge on the top vertices, disjoint from m
        for (int j = 0; j < r; ++j) e.push_back(n - r + j);
        Rat p = rat(1, 2 + static_cast<long>(rng() % 2));
        CHECK(deficiency_exact(n, r, q, m, p, e) == oracle::brute_deficiency(n, r, q, m, p, e));
    }
}

TEST_CASE("matching almost packing identities") {
    const int n = 12, r = 2, q = 3;
    Matching m{{{0, 1}}};
    PackingView phi = matching_almost_packing(n, r, q, m, rat(1, 2));

    // point weight of {0} u {2..11}
    VertexSet t{0};
    for (int v = 2; v < 12; ++v) t.push_back(v);
    CHECK(phi.weight(t) == Rat(1, 512));

    // weight 0 whenever a matching edge is inside
    VertexSet bad;
    for (int v = 0; v < 8; ++v) bad.push_back(v);
    CHECK(phi.weight(bad) == 0);

    // boundary identity: 1 - deficiency, and never above 1
    for (std::uint64_t rk : phi.host().edge_ranks()) {
        Rat b = phi.boundary_rank(rk);
        CHECK(b == 1 - deficiency_exact(n, r, q, m, rat(1, 2), phi.host().edge_vertices(rk)));
        CHECK(b <= 1);
    }

    // materialized support agrees with the implicit evaluators
    PackingView mat = phi.materialize();
    auto all = boundary_all(mat);
    for (const auto& [rk, v] : all) CHECK(v == phi.boundary_rank(rk));
    for (const auto& en : mat.entries()) {
        CHECK(en.weight == phi.weight(en.vertices));
        CHECK(static_cast<int>(en.vertices.size()) >= r * q);
    }
}

TEST_CASE("decompose_minus_matching") {
    // empty matching: a full decomposition immediately
    DecompositionResult base = decompose_minus_matching(7, 2, 3, Matching{});
    REQUIRE(base.packing);
    CHECK(validate(*base.packing, Rat(0)).pass);

    // perfect matching at n=10 is out of reach: eta = 1
    Matching pm10{{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}};
    DecompositionResult fail = decompose_minus_matching(10, 2, 3, pm10);
    CHECK_FALSE(fail.packing);
    CHECK(fail.report.max_eta == 1);
    CHECK(fail.failed_depth == 0);

    // perfect matching at n=12 goes through and excludes deleted edges
    Matching pm12;
    for (int i = 0; i < 6; ++i) pm12.edges.push_back({2 * i, 2 * i + 1});
    DecompositionResult ok = decompose_minus_matching(12, 2, 3, pm12);
    REQUIRE(ok.packing);
    CHECK(validate(*ok.packing, Rat(0)).pass);
    for (const auto& en : ok.packing->entries())
        for (const auto& me : pm12.edges)
            CHECK_FALSE(std::includes(en.vertices.begin(), en.vertices.end(), me.begin(), me.end()));
}

TEST_CASE("greedy edge coloring") {
    Matching one{{{0, 1, 2}, {3, 4, 5}}};
    Hypergraph h(9, 3, one.edges);
    CHECK(greedy_edge_color(h).size() == 1);

    Hypergraph triangle = Hypergraph::complete(3, 2);
    CHECK(greedy_edge_color(triangle).size() == 3);

    std::mt19937_64 rng(99);
    for (int it = 0; it < 20; ++it) {
        const int n = 8, r = 2 + static_cast<int>(rng() % 2);
        std::vector<VertexSet> edges;
        for_each_subset(n, r, [&](const VertexSet& e) {
            if (rng() % 4 == 0) edges.push_back(e);
        });
        Hypergraph h2(n, r, edges);
        auto classes = greedy_edge_color(h2);
        std::uint64_t delta = h2.vertex_degree_max();
        if (delta > 0)
            CHECK(classes.size() <= static_cast<std::size_t>(r * (delta - 1) + 1));
        std::size_t total = 0;
        for (const auto& c : classes) {
            check_matching(c, n, r);  // classes really are matchings
            total += c.edges.size();
        }
        CHECK(total == h2.edge_count());
    }
}

TEST_CASE("two matchings via the induction") {
    // small two-matching instance: the union is handled edge-set-wise
    Matching m1{{{0, 1}}}, m2{{{0, 1}}};
    DecompositionResult same = decompose_minus_matchings(16, 2, 3, {m1, m2});
    REQUIRE(same.packing);  // duplicate edge deleted once
    CHECK(validate(*same.packing, Rat(0)).pass);
}
