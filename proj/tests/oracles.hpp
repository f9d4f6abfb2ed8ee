#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.

#include <algorithm>
#include <functional>
#include <vector>

#include "fracdec/matching_decomp.hpp"

namespace fracdec::oracle {

// Pr[|X| < rq | V(e) subset of X] by full enumeration of the outcome
// product space (subsets per matching edge times in/out per free vertex).
inline Rat brute_deficiency(int n, int r, int q, const Matching& m, const Rat& p,
                            const VertexSet& e) {
    SubsetDistribution dist = quasi_independent_distribution(r, p);
    std::vector<bool> in_matching(n, false);
    for (const auto& me : m.edges)
        for (int v : me) in_matching[v] = true;
    VertexSet free_vertices;
    for (int v = 0; v < n; ++v)
        if (!in_matching[v]) free_vertices.push_back(v);

    Rat conditioned = 0, bad = 0;
    const int target = r * q;

    // leaf handling folded into a recursive product walk
    std::function<void(std::size_t, int, int, Rat)> rec_free =
        [&](std::size_t i, int size, int e_hits, Rat prob) {
            if (i == free_vertices.size()) {
                if (e_hits == r) {
                    conditioned += prob;
                    if (size < target) bad += prob;
                }
                return;
            }
            bool in_e = std::binary_search(e.begin(), e.end(), free_vertices[i]);
            rec_free(i + 1, size, e_hits, prob * (1 - p));
            rec_free(i + 1, size + 1, e_hits + (in_e ? 1 : 0), prob * p);
        };
    std::function<void(std::size_t, int, int, Rat)> rec_edges =
        [&](std::size_t i, int size, int e_hits, Rat prob) {
            if (i == m.edges.size()) {
                rec_free(0, size, e_hits, prob);
                return;
            }
            const VertexSet& me = m.edges[i];
            for (unsigned mask = 0; mask < (1u << r); ++mask) {
                int t = __builtin_popcount(mask);
                if (dist.by_size[t] == 0) continue;
                int hits = 0;
                for (int b = 0; b < r; ++b)
                    if ((mask >> b) & 1u)
                        if (std::binary_search(e.begin(), e.end(), me[b])) ++hits;
                rec_edges(i + 1, size + t, e_hits + hits, prob * dist.by_size[t]);
            }
        };
    rec_edges(0, 0, 0, Rat(1));
    return bad / conditioned;
}

}  // namespace fracdec::oracle
