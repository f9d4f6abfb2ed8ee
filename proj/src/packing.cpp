#include "fracdec/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracdec {

PackingView PackingView::make_explicit(HypergraphPtr host, std::vector<SupportEntry> entries) {
    PackingView p;
    p.host_ = std::move(host);
    p.explicit_ = true;
    for (const auto& en : entries) {
        if (en.weight < 0) throw std::invalid_argument("packing weight must be nonnegative");
        // "induced" elements are induced subgraphs, not cliques; everything
        // else must span a clique of the host.
        if (en.tag != "induced" && static_cast<int>(en.vertices.size()) >= p.host_->r() &&
            !p.host_->spans_clique(en.vertices))
            throw std::invalid_argument("support element is not a clique of the host");
    }
    p.entries_ = std::move(entries);
    return p;
}

PackingView PackingView::make_implicit(HypergraphPtr host,
                                       std::function<Rat(const VertexSet&)> weight_fn,
                                       std::function<Rat(std::uint64_t)> boundary_fn,
                                       std::function<std::vector<SupportEntry>()> enumerate_fn) {
    PackingView p;
    p.host_ = std::move(host);
    p.explicit_ = false;
    p.weight_fn_ = std::move(weight_fn);
    p.boundary_fn_ = std::move(boundary_fn);
    p.enumerate_fn_ = std::move(enumerate_fn);
    return p;
}

const std::vector<SupportEntry>& PackingView::entries() const {
    if (!explicit_) throw std::logic_error("entries(): packing is implicit");
    return entries_;
}

Rat PackingView::weight(const VertexSet& element) const {
    if (!explicit_) return weight_fn_(element);
    Rat total = 0;
    for (const auto& en : entries_)
        if (en.vertices == element) total += en.weight;
    return total;
}

Rat PackingView::boundary_rank(std::uint64_t edge_rank) const {
    if (!host_->has_edge_rank(edge_rank))
        throw std::invalid_argument("boundary: not an edge of the host");
    if (!explicit_) return boundary_fn_(edge_rank);
    VertexSet e = host_->edge_vertices(edge_rank);
    Rat total = 0;
    for (const auto& en : entries_)
        if (std::includes(en.vertices.begin(), en.vertices.end(), e.begin(), e.end()))
            total += en.weight;
    return total;
}

Rat PackingView::boundary(const VertexSet& edge) const {
    return boundary_rank(colex_rank(canonical_vertex_set(edge, host_->n(), host_->r())));
}

PackingView PackingView::materialize(std::size_t max_entries) const {
    if (explicit_) return *this;
    if (!enumerate_fn_) throw std::logic_error("materialize: no enumerator declared");
    std::vector<SupportEntry> entries = enumerate_fn_();
    if (entries.size() > max_entries)
        throw std::length_error("materialize: support exceeds budget");
    return make_explicit(host_, std::move(entries));
}

std::map<std::uint64_t, Rat> boundary_all(const PackingView& p) {
    const Hypergraph& g = p.host();
    std::map<std::uint64_t, Rat> out;
    for (std::uint64_t rk : g.edge_ranks()) out[rk] = 0;
    const PackingView pe = p.is_explicit() ? p : p.materialize();
    VertexSet e(g.r());
    for (const auto& en : pe.entries()) {
        const auto& vs = en.vertices;
        for_each_subset(static_cast<int>(vs.size()), g.r(), [&](const VertexSet& idx) {
            for (int i = 0; i < g.r(); ++i) e[i] = vs[idx[i]];
            auto it = out.find(colex_rank(e));
            if (it != out.end()) it->second += en.weight;  // induced sets may span non-edges
        });
    }
    return out;
}

BoundaryReport validate(const PackingView& p, const Rat& eta) {
    BoundaryReport rep;
    rep.per_edge = boundary_all(p);
    if (rep.per_edge.empty()) {
        rep.min_boundary = rep.max_boundary = 1;
        rep.eta = 0;
        rep.pass = true;
        return rep;
    }
    bool first = true;
    Rat lo = 1 - eta;
    rep.pass = true;
    for (const auto& [rk, v] : rep.per_edge) {
        if (first || v < rep.min_boundary) rep.min_boundary = v;
        if (first || v > rep.max_boundary) rep.max_boundary = v;
        first = false;
        if ((v < lo || v > 1) && !rep.witness) {
            rep.pass = false;
            rep.witness = rk;
        }
    }
    rep.eta = 1 - rep.min_boundary;
    return rep;
}

PackingView linear_combine(const std::vector<std::pair<Rat, PackingView>>& terms) {
    if (terms.empty()) throw std::invalid_argument("linear_combine: no terms");
    HypergraphPtr host = terms.front().second.host_ptr();
    for (const auto& [c, p] : terms) {
        if (c < 0) throw std::invalid_argument("linear_combine: negative coefficient");
        if (p.host_ptr()->n() != host->n() || p.host_ptr()->r() != host->r() ||
            p.host_ptr()->edge_ranks() != host->edge_ranks())
            throw std::invalid_argument("linear_combine: host mismatch");
    }
    std::map<std::pair<VertexSet, std::string>, Rat> acc;
    for (const auto& [c, p] : terms) {
        const PackingView pe = p.is_explicit() ? p : p.materialize();
        for (const auto& en : pe.entries()) acc[{en.vertices, en.tag}] += c * en.weight;
    }
    std::vector<SupportEntry> entries;
    entries.reserve(acc.size());
    for (auto& [key, w] : acc) entries.push_back({key.first, w, key.second});
    return PackingView::make_explicit(host, std::move(entries));
}

PackingView scale(const PackingView& p, const Rat& c) {
    if (c < 0) throw std::invalid_argument("scale: negative coefficient");
    const PackingView pe = p.is_explicit() ? p : p.materialize();
    std::vector<SupportEntry> entries = pe.entries();
    for (auto& en : entries) en.weight *= c;
    return PackingView::make_explicit(p.host_ptr(), std::move(entries));
}

}  // namespace fracdec
