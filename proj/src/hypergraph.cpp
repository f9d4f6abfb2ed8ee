#include "fracdec/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace fracdec {

VertexSet canonical_vertex_set(const std::vector<int>& vs, int n, int expect_size) {
    VertexSet s = vs;
    std::sort(s.begin(), s.end());
    if (expect_size >= 0 && static_cast<int>(s.size()) != expect_size)
        throw std::invalid_argument("vertex set: expected " + std::to_string(expect_size) +
                                    " vertices, got " + std::to_string(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) throw std::invalid_argument("vertex out of range");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("repeated vertex in set");
    }
    return s;
}

void check_matching(const Matching& m, int n, int r) {
    std::vector<bool> used(n, false);
    for (const auto& e : m.edges) {
        VertexSet s = canonical_vertex_set(e, n, r);
        for (int v : s) {
            if (used[v]) throw std::invalid_argument("matching edges are not vertex-disjoint");
            used[v] = true;
        }
    }
}

Hypergraph::Hypergraph(int n, int r, const std::vector<VertexSet>& edges) : n_(n), r_(r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    if (r > n) throw std::invalid_argument("r > n");
    member_.assign(total_slots(), false);
    ranks_.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet s = canonical_vertex_set(e, n, r);
        std::uint64_t rk = colex_rank(s);
        if (member_[rk]) throw std::invalid_argument("duplicate edge");
        member_[rk] = true;
        ranks_.push_back(rk);
    }
    std::sort(ranks_.begin(), ranks_.end());
}

Hypergraph Hypergraph::complete(int n, int r) {
    Hypergraph g;
    g.n_ = n;
    g.r_ = r;
    if (r < 2 || r > n) throw std::invalid_argument("complete: need 2 <= r <= n");
    g.member_.assign(g.total_slots(), true);
    g.ranks_.resize(g.total_slots());
    for (std::uint64_t i = 0; i < g.ranks_.size(); ++i) g.ranks_[i] = i;
    return g;
}

Hypergraph Hypergraph::complete_minus_edge(int n, int r, const VertexSet& e) {
    Hypergraph g = complete(n, r);
    VertexSet s = canonical_vertex_set(e, n, r);
    std::uint64_t rk = colex_rank(s);
    g.member_[rk] = false;
    g.ranks_.erase(std::lower_bound(g.ranks_.begin(), g.ranks_.end(), rk));
    return g;
}

Hypergraph Hypergraph::complete_minus_matching(int n, int r, const Matching& m) {
    return complete_minus_matchings(n, r, {m});
}

Hypergraph Hypergraph::complete_minus_matchings(int n, int r, const std::vector<Matching>& ms) {
    Hypergraph g = complete(n, r);
    for (const auto& m : ms) {
        check_matching(m, n, r);
        for (const auto& e : m.edges) {
            std::uint64_t rk = colex_rank(canonical_vertex_set(e, n, r));
            if (!g.member_[rk]) continue;  // same edge in two matchings: delete once
            g.member_[rk] = false;
            g.ranks_.erase(std::lower_bound(g.ranks_.begin(), g.ranks_.end(), rk));
        }
    }
    return g;
}

bool Hypergraph::has_edge(const VertexSet& e) const {
    VertexSet s = canonical_vertex_set(e, n_, r_);
    return member_[colex_rank(s)];
}

Hypergraph Hypergraph::complement() const {
    Hypergraph g;
    g.n_ = n_;
    g.r_ = r_;
    g.member_.resize(member_.size());
    for (std::uint64_t i = 0; i < member_.size(); ++i) {
        g.member_[i] = !member_[i];
        if (g.member_[i]) g.ranks_.push_back(i);
    }
    return g;
}

Hypergraph Hypergraph::induced(const VertexSet& s) const {
    VertexSet vs = canonical_vertex_set(s, n_);
    if (static_cast<int>(vs.size()) < r_) throw std::invalid_argument("induced: |S| < r");
    std::vector<int> local(n_, -1);
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
    Hypergraph g;
    g.n_ = static_cast<int>(vs.size());
    g.r_ = r_;
    g.member_.assign(binom(g.n_, r_), false);
    VertexSet relabeled(r_);
    for (std::uint64_t rk : ranks_) {
        VertexSet e = edge_vertices(rk);
        bool inside = true;
        for (int v : e) inside = inside && local[v] >= 0;
        if (!inside) continue;
        for (int i = 0; i < r_; ++i) relabeled[i] = local[e[i]];
        std::uint64_t lrk = colex_rank(relabeled);
        g.member_[lrk] = true;
        g.ranks_.push_back(lrk);
    }
    std::sort(g.ranks_.begin(), g.ranks_.end());
    return g;
}

Hypergraph Hypergraph::link_graph(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("link_graph: vertex out of range");
    // keep only vertices sharing an edge with u
    std::vector<bool> incident(n_, false);
    std::vector<VertexSet> link_edges;
    for (std::uint64_t rk : ranks_) {
        VertexSet e = edge_vertices(rk);
        if (!std::binary_search(e.begin(), e.end(), u)) continue;
        VertexSet rest;
        for (int v : e)
            if (v != u) {
                rest.push_back(v);
                incident[v] = true;
            }
        link_edges.push_back(rest);
    }
    VertexSet verts;
    for (int v = 0; v < n_; ++v)
        if (incident[v]) verts.push_back(v);
    std::vector<int> local(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

    Hypergraph g;
    g.n_ = static_cast<int>(verts.size());
    g.r_ = r_ - 1;
    if (g.n_ == 0) {
        g.r_ = std::max(g.r_, 1);
        return g;  // vertexless link of an isolated vertex
    }
    g.member_.assign(binom(g.n_, g.r_), false);
    for (auto& e : link_edges) {
        for (int& v : e) v = local[v];
        std::uint64_t lrk = colex_rank(e);
        g.member_[lrk] = true;
        g.ranks_.push_back(lrk);
    }
    std::sort(g.ranks_.begin(), g.ranks_.end());
    return g;
}

std::uint64_t Hypergraph::degree(int v) const {
    std::uint64_t d = 0;
    for (std::uint64_t rk : ranks_) {
        VertexSet e = edge_vertices(rk);
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    }
    return d;
}

std::uint64_t Hypergraph::codegree_min() const {
    std::uint64_t best = ~0ULL;
    for_each_subset(n_, r_ - 1, [&](const VertexSet& s) {
        std::uint64_t d = 0;
        for (int v = 0; v < n_; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            VertexSet e = s;
            e.insert(std::upper_bound(e.begin(), e.end(), v), v);
            if (member_[colex_rank(e)]) ++d;
        }
        best = std::min(best, d);
    });
    return best == ~0ULL ? 0 : best;
}

std::uint64_t Hypergraph::vertex_degree_max() const {
    std::vector<std::uint64_t> deg(n_, 0);
    for (std::uint64_t rk : ranks_)
        for (int v : edge_vertices(rk)) ++deg[v];
    std::uint64_t best = 0;
    for (auto d : deg) best = std::max(best, d);
    return best;
}

bool Hypergraph::is_divisible(int q) const {
    if (q <= r_) throw std::invalid_argument("is_divisible: need q > r");
    for (int i = 0; i < r_; ++i) {
        std::uint64_t divisor = binom(q - i, r_ - i);
        bool ok = true;
        for_each_subset(n_, i, [&](const VertexSet& s) {
            if (!ok) return;
            std::uint64_t count = 0;
            for (std::uint64_t rk : ranks_) {
                VertexSet e = edge_vertices(rk);
                if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
            }
            if (count % divisor != 0) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool Hypergraph::spans_clique(const VertexSet& s) const {
    bool ok = true;
    for_each_subset(static_cast<int>(s.size()), r_, [&](const VertexSet& idx) {
        if (!ok) return;
        VertexSet e(r_);
        for (int i = 0; i < r_; ++i) e[i] = s[idx[i]];
        if (!member_[colex_rank(e)]) ok = false;
    });
    return ok;
}

std::vector<VertexSet> Hypergraph::enumerate_cliques(int q) const {
    if (q < r_ || q > n_) throw std::invalid_argument("enumerate_cliques: need r <= q <= n");
    std::vector<VertexSet> out;
    VertexSet cur;
    // ordered backtracking; adding v checks only the new r-subsets through v
    auto extend_ok = [&](int v) {
        if (static_cast<int>(cur.size()) < r_ - 1) return true;
        bool ok = true;
        for_each_subset(static_cast<int>(cur.size()), r_ - 1, [&](const VertexSet& idx) {
            if (!ok) return;
            VertexSet e;
            e.reserve(r_);
            for (int i : idx) e.push_back(cur[i]);
            e.push_back(v);
            if (!member_[colex_rank(e)]) ok = false;
        });
        return ok;
    };
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        int need = q - static_cast<int>(cur.size());
        for (int v = start; v + need <= n_; ++v) {
            if (!extend_ok(v)) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return colex_rank(a) < colex_rank(b); });
    return out;
}

}  // namespace fracdec
