#pragma once

#include <map>
#include <optional>

#include "fracdec/compose.hpp"
#include "fracdec/packing.hpp"

namespace fracdec {

// Quasi-independent distribution on the subsets of an r-set: zero mass on
// the full set, marginal p^|T| for every proper subset T. Probabilities
// depend only on |T|.
struct SubsetDistribution {
    int r = 0;
    Rat p;
    std::vector<Rat> by_size;  // probability of one specific subset of size t; by_size[r] == 0
};

// Throws std::domain_error with a negativity witness when p > 1/2.
SubsetDistribution quasi_independent_distribution(int r, const Rat& p);

// Distribution of |X_i| conditioned on a fixed t-subset being contained in X_i.
std::map<int, Rat> size_distribution(const SubsetDistribution& dist, int t);

// Exact Pr[|X| < rq | V(e) subset of X] for the Thm-3.2 sampling process,
// by convolving per-component size distributions.
Rat deficiency_exact(int n, int r, int q, const Matching& m, const Rat& p, const VertexSet& e);

struct DeficiencyReport {
    std::map<std::uint64_t, Rat> per_edge_eta;  // edge rank -> eta
    Rat max_eta;
    Rat threshold;  // 1/C(rq,r)
    bool pass = false;
    std::optional<std::uint64_t> witness;
};

DeficiencyReport deficiency_report(int n, int r, int q, const Matching& m, const Rat& p);

// Implicit almost-decomposition of K_n^r - M into big cliques (>= min_size
// vertices); point weight Pr[X=T]/p^r, exact boundary 1 - deficiency.
PackingView matching_almost_packing(int n, int r, int q, const Matching& m, const Rat& p,
                                    int min_size = -1,
                                    std::size_t outcome_budget = (1u << 20));

struct DecompositionResult {
    std::optional<PackingView> packing;
    DeficiencyReport report;
    int failed_depth = -1;  // induction depth of the first failing gate, or -1
    std::string error;
};

// Full fractional K_q^r-decomposition of K_n^r - M (Thm 3.2 pipeline),
// gated on the exact deficiency rather than the Chernoff estimate.
DecompositionResult decompose_minus_matching(int n, int r, int q, const Matching& m,
                                             const Rat& p = Rat(1, 2),
                                             std::size_t outcome_budget = (1u << 20));

// Partition of E(H) into matchings; at most r*(Delta_1(H)-1)+1 classes.
std::vector<Matching> greedy_edge_color(const Hypergraph& h);

// Induction over a list of matchings (union taken as an edge-set union).
DecompositionResult decompose_minus_matchings(int n, int r, int q,
                                              const std::vector<Matching>& ms,
                                              const Rat& p = Rat(1, 2),
                                              std::size_t outcome_budget = (1u << 20));

}  // namespace fracdec
