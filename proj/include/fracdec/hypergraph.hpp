#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fracdec/combinat.hpp"

namespace fracdec {

using VertexSet = std::vector<int>;  // strictly increasing vertex ids

struct Matching {
    std::vector<VertexSet> edges;  // pairwise vertex-disjoint r-sets
};

// Immutable r-uniform hypergraph on {0..n-1}. Edges are canonically
// identified by colex rank; membership is O(1) via a bit table.
class Hypergraph {
public:
    Hypergraph(int n, int r, const std::vector<VertexSet>& edges);

    static Hypergraph complete(int n, int r);
    static Hypergraph complete_minus_edge(int n, int r, const VertexSet& e);
    static Hypergraph complete_minus_matching(int n, int r, const Matching& m);
    static Hypergraph complete_minus_matchings(int n, int r, const std::vector<Matching>& ms);

    int n() const { return n_; }
    int r() const { return r_; }
    std::uint64_t edge_count() const { return ranks_.size(); }
    std::uint64_t total_slots() const { return binom(n_, r_); }

    bool has_edge_rank(std::uint64_t rank) const { return member_[rank]; }
    bool has_edge(const VertexSet& e) const;
    const std::vector<std::uint64_t>& edge_ranks() const { return ranks_; }
    VertexSet edge_vertices(std::uint64_t rank) const { return colex_unrank(rank, n_, r_); }

    Hypergraph complement() const;
    Hypergraph induced(const VertexSet& s) const;  // relabeled onto {0..|s|-1}
    Hypergraph link_graph(int u) const;            // (r-1)-uniform, incident vertices only

    std::uint64_t codegree_min() const;     // delta_{r-1}
    std::uint64_t vertex_degree_max() const;  // Delta_1
    std::uint64_t degree(int v) const;
    bool is_divisible(int q) const;

    // All q-subsets spanning a complete sub-hypergraph, in colex order.
    std::vector<VertexSet> enumerate_cliques(int q) const;

    // True iff every r-subset of s is an edge.
    bool spans_clique(const VertexSet& s) const;

private:
    Hypergraph() = default;
    int n_ = 0, r_ = 0;
    std::vector<std::uint64_t> ranks_;  // sorted
    std::vector<bool> member_;          // indexed by colex rank
};

using HypergraphPtr = std::shared_ptr<const Hypergraph>;

// Checks strict ordering and bounds; throws on violation.
VertexSet canonical_vertex_set(const std::vector<int>& vs, int n, int expect_size = -1);

void check_matching(const Matching& m, int n, int r);

}  // namespace fracdec
