#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracdec/matching_decomp.hpp"
#include "fracdec/packing.hpp"

namespace fracdec {

// The main-theorem constant calculus, evaluated exactly where possible and
// in 256-bit floating point otherwise (the bounds leave double range fast).
struct ParamReport {
    int r = 0, q = 0;
    Rat epsilon;
    long C = 0;        // 32 r^3
    Int m;             // smallest integer > (r + (r^2-1)/eps)^{r-1}
    long beta_log2 = 0;  // beta = 2^beta_log2, deterministic rule (see below)
    Int k;             // C^m * r * q, exact
    std::string alpha, d, final_bound;
    bool vacuous = false;           // k exceeds the desk-scale budget
    bool m_inequality = false;      // m^{1/(r-1)} - r >= (r^2-1)/eps
    bool dk_product_lt_one = false; // d * (2 e^2 k)^{r-1} < 1
    bool exponent_chain = false;    // eps * (m^{1/(r-1)} - r)/(r-1) > r + 1
    bool final_bound_ok = false;    // final bound <= 1/C(rq, r)
};

// beta rule: smallest power of two with C^m * r * beta^{-(m^{1/(r-1)}-r)} <= e^{-r}.
ParamReport main_parameters(int r, const Rat& eps, int q, const Int& vacuity_budget = 10000);

struct ChernoffEdge {
    std::uint64_t edge_rank = 0;
    Rat exact;       // exact tail Pr[|X| < rq | e in X]
    double bound;    // e^{-mu/8}
    bool bound_valid = false;  // mu >= 2rq, the regime where the estimate applies
};

struct ChernoffReport {
    Rat mu;  // p*|M| + p*(n - |M|r - r)
    double bound = 0;
    std::vector<ChernoffEdge> per_edge;
    bool sound = true;  // bound >= exact on every edge where bound_valid
};

ChernoffReport chernoff_report(int n, int r, int q, const Matching& m, const Rat& p);

struct StageStatus {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PipelineOptions {
    long k = -1, m = -1;  // empirical / lp-fallback family parameters
    Rat p = Rat(1, 2);
    Rat eps = Rat(1);
    std::size_t budget = (1u << 20);
    std::uint64_t max_pivots = 1000000;
    std::size_t max_cols = 100000;
    Int vacuity_budget = Int(10000);
};

struct PipelineReport {
    std::string strategy;
    std::vector<StageStatus> stages;
    std::optional<PackingView> packing;
    bool success = false;
};

// G -> uniform k-set family -> per-H matchings -> K_{rq} copies -> fixing.
PipelineReport pipeline(const Hypergraph& g, int q, const std::string& strategy,
                        const PipelineOptions& opt = {});

}  // namespace fracdec
