#include <doctest.h>

#include <memory>
#include <random>

#include "fracdec/compose.hpp"
#include "fracdec/symmetric_decomp.hpp"

using namespace fracdec;

TEST_CASE("concatenation of full decompositions is full") {
    // K_8 = (K_6 copies) o (triangles of each K_6)
    PackingView outer = complete_symmetric(8, 6, 2);
    auto inner = [](const SupportEntry& h) {
        return relabel_entries(complete_symmetric(6, 3, 2).entries(), h.vertices);
    };
    PackingView psi = concatenate(outer, inner);
    CHECK(validate(psi, Rat(0)).pass);
}

TEST_CASE("concatenation boundary identity on randomized instances") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 5; ++it) {
        const int n = 6 + static_cast<int>(rng() % 3);  // 6..8
        const int q1 = 5, q2 = 3;
        auto host = std::make_shared<Hypergraph>(Hypergraph::complete(n, 2));
        std::vector<SupportEntry> outer_entries;
        for_each_subset(n, q1, [&](const VertexSet& t) {
            if (rng() % 2) outer_entries.push_back({t, rat(static_cast<long>(rng() % 5), 7), "big"});
        });
        PackingView outer = PackingView::make_explicit(host, outer_entries);
        auto inner = [](const SupportEntry& h) {
            return relabel_entries(complete_symmetric(5, 3, 2).entries(), h.vertices);
        };
        PackingView psi = concatenate(outer, inner);
        // RHS: sum over outer elements of outer(H) * boundary of inner within H
        for (std::uint64_t rk : host->edge_ranks()) {
            VertexSet e = host->edge_vertices(rk);
            Rat rhs = 0;
            for (const auto& h : outer_entries) {
                if (!std::includes(h.vertices.begin(), h.vertices.end(), e.begin(), e.end()))
                    continue;
                rhs += h.weight;  // inner is a full decomposition of each element
            }
            CHECK(psi.boundary_rank(rk) == rhs);
        }
    }
}

TEST_CASE("concatenate rejects escaping inner elements") {
    PackingView outer = complete_symmetric(6, 4, 2);
    auto bad_inner = [](const SupportEntry&) {
        return std::vector<SupportEntry>{{{0, 1, 2}, Rat(1), "Kq"}};
    };
    CHECK_THROWS(concatenate(outer, bad_inner));
}

TEST_CASE("fix_packing hits its targets exactly") {
    const int r = 2, q = 3, n = 6;
    const std::uint64_t slots = binom(n, r);
    Rat eps(1, static_cast<long>(slots));
    Rat lo = 1 - eps;

    std::map<std::uint64_t, Rat> ones, lows;
    for (std::uint64_t rk = 0; rk < slots; ++rk) {
        ones[rk] = 1;
        lows[rk] = lo;
    }
    auto b1 = boundary_all(fix_packing(ones, q, r));
    for (const auto& [rk, v] : b1) CHECK(v == 1);
    auto b0 = boundary_all(fix_packing(lows, q, r));
    for (const auto& [rk, v] : b0) CHECK(v == lo);

    std::mt19937_64 rng(555);
    for (int it = 0; it < 10; ++it) {
        std::map<std::uint64_t, Rat> target;
        for (std::uint64_t rk = 0; rk < slots; ++rk)
            target[rk] = lo + eps * rat(static_cast<long>(rng() % 1001), 1000);
        auto bd = boundary_all(fix_packing(target, q, r));
        for (const auto& [rk, v] : bd) CHECK(v == target.at(rk));
    }

    std::map<std::uint64_t, Rat> bad = ones;
    bad[0] = lo - eps;
    CHECK_THROWS(fix_packing(bad, q, r));  // out of range
    bad = ones;
    bad.erase(3);
    CHECK_THROWS(fix_packing(bad, q, r));  // missing edge
}

TEST_CASE("almost_to_full repairs a perturbed symmetric packing") {
    const int r = 2, q = 3;  // copies are K_6
    PackingView base = complete_symmetric(8, 6, 2);
    // shave a sliver off one copy: eta stays within 1/C(6,2) = 1/15
    std::vector<SupportEntry> entries = base.entries();
    entries.front().weight *= rat(29, 30);
    PackingView perturbed = PackingView::make_explicit(base.host_ptr(), entries);
    BoundaryReport before = validate(perturbed, rat(1, 15));
    CHECK(before.pass);
    CHECK(before.eta > 0);

    PackingView full = almost_to_full(perturbed, q, r);
    CHECK(validate(full, Rat(0)).pass);

    // full input stays full
    PackingView full2 = almost_to_full(base, q, r);
    CHECK(validate(full2, Rat(0)).pass);

    // boundary below 1 - 1/15 is a named precondition violation
    entries = base.entries();
    for (auto& en : entries) en.weight *= rat(1, 2);
    CHECK_THROWS_AS(almost_to_full(PackingView::make_explicit(base.host_ptr(), entries), q, r),
                    std::domain_error);
}
