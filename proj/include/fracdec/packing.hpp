#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracdec/hypergraph.hpp"
#include "fracdec/rational.hpp"

namespace fracdec {

// Family tags let concatenation dispatch inner decomposers by support kind.
struct SupportEntry {
    VertexSet vertices;
    Rat weight;
    std::string tag;  // e.g. "Kq", "big", "induced"
};

// A fractional packing: nonnegative weights over a support family of
// cliques of the host. Explicit packings carry the support; implicit ones
// carry exact evaluators and (optionally) a bounded enumerator.
class PackingView {
public:
    static PackingView make_explicit(HypergraphPtr host, std::vector<SupportEntry> entries);
    static PackingView make_implicit(HypergraphPtr host,
                                     std::function<Rat(const VertexSet&)> weight_fn,
                                     std::function<Rat(std::uint64_t)> boundary_fn,
                                     std::function<std::vector<SupportEntry>()> enumerate_fn);

    const Hypergraph& host() const { return *host_; }
    HypergraphPtr host_ptr() const { return host_; }
    bool is_explicit() const { return explicit_; }
    const std::vector<SupportEntry>& entries() const;  // explicit only

    Rat weight(const VertexSet& element) const;
    Rat boundary_rank(std::uint64_t edge_rank) const;
    Rat boundary(const VertexSet& edge) const;

    // Materializes an implicit packing (throws if over the declared budget).
    PackingView materialize(std::size_t max_entries = (1u << 20)) const;

private:
    HypergraphPtr host_;
    bool explicit_ = true;
    std::vector<SupportEntry> entries_;
    std::function<Rat(const VertexSet&)> weight_fn_;
    std::function<Rat(std::uint64_t)> boundary_fn_;
    std::function<std::vector<SupportEntry>()> enumerate_fn_;
};

struct BoundaryReport {
    std::map<std::uint64_t, Rat> per_edge;  // edge rank -> boundary value
    Rat min_boundary, max_boundary;
    Rat eta;  // 1 - min_boundary
    bool pass = false;
    std::optional<std::uint64_t> witness;  // an edge violating the eta window, if any
};

// Exact per-edge boundary of an explicit packing, one pass over the support.
std::map<std::uint64_t, Rat> boundary_all(const PackingView& p);

BoundaryReport validate(const PackingView& p, const Rat& eta);

PackingView linear_combine(const std::vector<std::pair<Rat, PackingView>>& terms);
PackingView scale(const PackingView& p, const Rat& c);

}  // namespace fracdec
