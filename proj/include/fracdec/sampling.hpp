#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracdec/packing.hpp"

namespace fracdec {

struct ExplorationResult {
    std::vector<int> ordering;      // V(J) \ X in exploration order
    std::vector<int> good_indices;  // positions i: v_i completes an edge in X u {v_0..v_i}
    int good_count = 0;
};

// Greedy exploration ordering: good_count >= ceil(|V(J)\X| / r).
// Throws if some vertex outside X has degree 0.
ExplorationResult exploration_ordering(const Hypergraph& j, const VertexSet& x);

// True iff the complement of G[t] within the complete graph on t has
// Delta_1 <= m.
bool sparse_complement_member(const Hypergraph& g, const VertexSet& t, long m);

// Implicit packing over induced k-sets H with Delta_1(complement of H) <= m,
// uniform weight 1/C(n-r, k-r).
PackingView uniform_family_packing(const Hypergraph& g, int k, long m,
                                   std::size_t budget = (1u << 20));

// Exact Pr[random k-superset of f is outside the family], by enumeration.
Rat family_deficiency_exact(const Hypergraph& g, int k, long m, const VertexSet& f,
                            std::uint64_t budget = (1u << 20));

struct McReport {
    long samples = 0;
    long failures = 0;
    double estimate = 0;
    double std_error = 0;
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
};

McReport family_deficiency_mc(const Hypergraph& g, int k, long m, const VertexSet& f,
                              long samples, std::uint64_t seed);

struct TailBoundReport {
    long n = 0, k = 0, m = 0;
    int r = 0, s = 0;
    Rat d;
    // the three binomial factors of the counting bound, largest first
    std::string term1, term2, term3;
    std::string ratio;             // N(s)/C(n-r, k-r)
    std::string r2_bound;          // k^s * d^s (only for r = 2)
    std::string simplified_bound;  // ((2 e^2 k)^{r-1} d)^{(m^{1/(r-1)}-r)/(r-1)}
    std::string per_edge_bound;    // k * simplified_bound
    double ratio_d = 0, simplified_d = 0, per_edge_d = 0;
    bool precondition_ok = false;  // d <= (2 e^2 k)^{-(r-1)}
};

TailBoundReport tail_bound(long n, int r, long k, long m, const Rat& d, int s);

}  // namespace fracdec
