#pragma once

#include <functional>
#include <map>

#include "fracdec/packing.hpp"

namespace fracdec {

// Inner decomposer contract: given a support element (global vertex labels),
// return a packing of its induced subgraph, with entries already expressed
// in global labels.
using InnerDecomposer = std::function<std::vector<SupportEntry>(const SupportEntry&)>;

// psi(H') = sum_{H >= H'} inner(H)(H') * outer(H); exact throughout.
PackingView concatenate(const PackingView& outer, const InnerDecomposer& inner,
                        std::size_t max_outer_entries = (1u << 20));

// Blend of the symmetric and missing-one-edge decompositions of K_{rq}^r
// realizing an arbitrary per-edge target in [1 - 1/C(rq,r), 1] exactly.
// Targets are keyed by edge rank in K_{rq}^r.
PackingView fix_packing(const std::map<std::uint64_t, Rat>& target, int q, int r);

// Converts an eta-almost K_{rq}^r-decomposition (eta <= 1/C(rq,r)) into a
// full K_q^r-decomposition by per-copy fixing.
PackingView almost_to_full(const PackingView& p, int q, int r);

// Relabels entries from local labels {0..k-1} onto the given global set.
std::vector<SupportEntry> relabel_entries(const std::vector<SupportEntry>& local,
                                          const VertexSet& onto);

}  // namespace fracdec
