#include "fracdec/symmetric_decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdec {

CoeffMatrix build_matrix(int q, int r) {
    if (r < 2 || q <= r) throw std::invalid_argument("build_matrix: need q > r >= 2");
    CoeffMatrix m;
    m.r = r;
    m.q = q;
    m.n = r * q;
    m.a.assign(r, std::vector<std::uint64_t>(r, 0));
    for (int t = 0; t < r; ++t)
        for (int i = t; i < r; ++i)
            m.a[t][i] = binom(r - t, i - t) * binom(m.n - 2 * r + t, q - r - i + t);
    return m;
}

std::vector<Rat> solve_weights(int q, int r) {
    CoeffMatrix m = build_matrix(q, r);
    std::vector<Rat> w(r);
    for (int t = r - 1; t >= 0; --t) {
        Rat rhs = 1;
        for (int i = t + 1; i < r; ++i) rhs -= Rat(static_cast<long>(m.a[t][i])) * w[i];
        w[t] = rhs / Rat(static_cast<long>(m.a[t][t]));
        if (w[t] < 0) throw std::logic_error("solve_weights: negative solution entry");
    }
    return w;
}

PackingView complete_symmetric(int n, int q, int r) {
    if (r < 2 || q < r || q > n) throw std::invalid_argument("complete_symmetric: need r <= q <= n");
    auto host = std::make_shared<Hypergraph>(Hypergraph::complete(n, r));
    Rat w(1, static_cast<long>(binom(n - r, q - r)));
    w.canonicalize();
    std::vector<SupportEntry> entries;
    entries.reserve(binom(n, q));
    for_each_subset(n, q, [&](const VertexSet& s) { entries.push_back({s, w, "Kq"}); });
    return PackingView::make_explicit(std::move(host), std::move(entries));
}

PackingView missing_edge_packing(int q, int r, const VertexSet& e) {
    if (r < 2 || q <= r) throw std::invalid_argument("missing_edge_packing: need q > r >= 2");
    int n = r * q;
    VertexSet es = canonical_vertex_set(e, n, r);
    std::vector<Rat> w = solve_weights(q, r);
    auto host = std::make_shared<Hypergraph>(Hypergraph::complete_minus_edge(n, r, es));
    std::vector<SupportEntry> entries;
    for_each_subset(n, q, [&](const VertexSet& s) {
        VertexSet inter;
        std::set_intersection(s.begin(), s.end(), es.begin(), es.end(), std::back_inserter(inter));
        int i = static_cast<int>(inter.size());
        if (i >= r) return;  // would contain the deleted edge
        entries.push_back({s, w[i], "Kq"});
    });
    return PackingView::make_explicit(std::move(host), std::move(entries));
}

}  // namespace fracdec
