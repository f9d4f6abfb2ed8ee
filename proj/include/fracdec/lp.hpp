#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracdec/hypergraph.hpp"
#include "fracdec/packing.hpp"
#include "fracdec/rational.hpp"

namespace fracdec {

// Equality-form feasibility system: { x >= 0, A x = rhs }. Rows are edges,
// columns cliques for instances built from a graph; orbit-reduced instances
// carry only labels.
struct LPInstance {
    std::size_t rows = 0;
    std::vector<std::string> row_labels, col_labels;
    std::vector<VertexSet> row_edges;    // per row, when built from a graph
    std::vector<VertexSet> col_cliques;  // per column, when built from a graph
    std::vector<std::vector<std::pair<std::size_t, Rat>>> cols;  // sparse (row, coeff)
    std::vector<Rat> rhs;

    std::size_t col_count() const { return cols.size(); }
};

struct Certificate {
    enum class Kind { feasible, infeasible };
    Kind kind = Kind::feasible;
    std::vector<Rat> solution;  // per column (feasible)
    std::vector<Rat> farkas;    // per row: y^T A <= 0 columnwise, y^T rhs > 0 (infeasible)
};

struct SolveResult {
    enum class Status { feasible, infeasible, budget_exceeded };
    Status status = Status::budget_exceeded;
    std::optional<Certificate> cert;
    std::uint64_t pivots = 0;
    std::string detail;
};

// Does G have a fractional K_q^r-decomposition, as an LP.
LPInstance build_feasibility_lp(const Hypergraph& g, int q);

// Phase-I simplex, exact rationals, Bland's rule; every verdict carries a
// certificate. Budget exhaustion is reported distinctly from infeasibility.
SolveResult feasible(const LPInstance& l, std::uint64_t max_pivots = 1000000,
                     std::size_t max_cols = 100000);

bool verify_certificate(const LPInstance& l, const Certificate& c);

struct OrbitSignature {
    std::function<std::string(std::size_t)> row_label;  // by row index
    std::function<std::string(std::size_t)> col_label;  // by column index
};

// Aggregates rows/columns with equal labels; throws on inconsistent
// aggregation (the tell-tale of an invalid signature).
LPInstance orbit_reduce(const LPInstance& l, const OrbitSignature& sig);

// Built-ins: intersection size with a distinguished edge, and the multiset of
// intersection sizes with a distinguished matching.
OrbitSignature edge_intersection_signature(const LPInstance& l, const VertexSet& e);
OrbitSignature matching_signature(const LPInstance& l, const Matching& m);

// Packing weights as a feasibility certificate for build_feasibility_lp(g, q).
Certificate certificate_from_entries(const LPInstance& l,
                                     const std::vector<SupportEntry>& entries);

}  // namespace fracdec
