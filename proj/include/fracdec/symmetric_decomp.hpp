#pragma once

#include <vector>

#include "fracdec/packing.hpp"

namespace fracdec {

// Upper-triangular coefficient matrix of the missing-one-edge linear system
// on n = r*q vertices: a[t][i] = C(r-t, i-t) * C(n-2r+t, q-r-i+t) for t <= i.
struct CoeffMatrix {
    int r = 0, q = 0, n = 0;
    std::vector<std::vector<std::uint64_t>> a;  // r x r
};

CoeffMatrix build_matrix(int q, int r);

// Exact back-substitution solution of A*w = 1; entries are guaranteed
// nonnegative, and a negative entry is treated as an internal error.
std::vector<Rat> solve_weights(int q, int r);

// Uniform full decomposition of K_n^r into q-cliques, weight 1/C(n-r, q-r).
PackingView complete_symmetric(int n, int q, int r);

// Full decomposition of K_{rq}^r - e: clique Q gets weight w[|V(Q) & e|].
PackingView missing_edge_packing(int q, int r, const VertexSet& e);

}  // namespace fracdec
