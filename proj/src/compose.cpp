#include "fracdec/compose.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fracdec/symmetric_decomp.hpp"

namespace fracdec {

namespace {

struct EntryKey {
    VertexSet vertices;
    std::string tag;
    bool operator==(const EntryKey& o) const { return vertices == o.vertices && tag == o.tag; }
};

struct EntryKeyHash {
    std::size_t operator()(const EntryKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : k.vertices) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
        for (char c : k.tag) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
        return h;
    }
};

using Accumulator = std::unordered_map<EntryKey, Rat, EntryKeyHash>;

std::vector<SupportEntry> drain(Accumulator&& acc) {
    std::vector<SupportEntry> out;
    out.reserve(acc.size());
    for (auto& [key, w] : acc)
        if (w != 0) out.push_back({key.vertices, w, key.tag});
    std::sort(out.begin(), out.end(), [](const SupportEntry& a, const SupportEntry& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.tag < b.tag;
    });
    return out;
}

}  // namespace

std::vector<SupportEntry> relabel_entries(const std::vector<SupportEntry>& local,
                                          const VertexSet& onto) {
    std::vector<SupportEntry> out;
    out.reserve(local.size());
    for (const auto& en : local) {
        VertexSet vs;
        vs.reserve(en.vertices.size());
        for (int v : en.vertices) vs.push_back(onto.at(v));
        std::sort(vs.begin(), vs.end());
        out.push_back({std::move(vs), en.weight, en.tag});
    }
    return out;
}

PackingView concatenate(const PackingView& outer, const InnerDecomposer& inner,
                        std::size_t max_outer_entries) {
    const PackingView oe = outer.materialize(max_outer_entries);
    Accumulator acc;
    for (const auto& h : oe.entries()) {
        if (h.weight == 0) continue;
        std::vector<SupportEntry> sub = inner(h);
        for (auto& en : sub) {
            if (en.weight == 0) continue;
            if (!std::includes(h.vertices.begin(), h.vertices.end(), en.vertices.begin(),
                               en.vertices.end()))
                throw std::logic_error("concatenate: inner element escapes its outer host");
            acc[{std::move(en.vertices), std::move(en.tag)}] += h.weight * en.weight;
        }
    }
    return PackingView::make_explicit(outer.host_ptr(), drain(std::move(acc)));
}

PackingView fix_packing(const std::map<std::uint64_t, Rat>& target, int q, int r) {
    if (r < 2 || q <= r) throw std::invalid_argument("fix_packing: need q > r >= 2");
    const int n = r * q;
    const std::uint64_t edge_slots = binom(n, r);
    Rat eps(1, static_cast<long>(edge_slots));
    eps.canonicalize();
    const Rat lo = 1 - eps;

    std::vector<Rat> one_minus_lambda(edge_slots);
    std::vector<std::uint64_t> edge_mask(edge_slots);
    Rat lambda_sum = 0;
    {
        std::uint64_t rk = 0;
        for_each_subset(n, r, [&](const VertexSet& e) {
            auto it = target.find(rk);
            if (it == target.end()) throw std::invalid_argument("fix_packing: missing target edge");
            const Rat& t = it->second;
            if (t < lo || t > 1) throw std::invalid_argument("fix_packing: target out of range");
            Rat lambda = (t - lo) / eps;
            lambda_sum += lambda;
            one_minus_lambda[rk] = 1 - lambda;
            std::uint64_t m = 0;
            for (int v : e) m |= 1ull << v;
            edge_mask[rk] = m;
            ++rk;
        });
        if (target.size() != rk) throw std::invalid_argument("fix_packing: spurious target edge");
    }

    const std::vector<Rat> w = solve_weights(q, r);
    Rat w0(1, static_cast<long>(binom(n - r, q - r)));
    w0.canonicalize();
    Rat inv_slots(1, static_cast<long>(edge_slots));
    inv_slots.canonicalize();
    const Rat base = lambda_sum * inv_slots * w0;  // symmetric part, same for every clique

    auto host = std::make_shared<Hypergraph>(Hypergraph::complete(n, r));
    std::vector<SupportEntry> entries;
    entries.reserve(binom(n, q));
    for_each_subset(n, q, [&](const VertexSet& s) {
        std::uint64_t smask = 0;
        for (int v : s) smask |= 1ull << v;
        Rat acc = 0;
        for (std::uint64_t rk = 0; rk < edge_slots; ++rk) {
            int i = __builtin_popcountll(smask & edge_mask[rk]);
            if (i >= r) continue;  // the missing-edge packing for rk gives this clique 0
            acc += one_minus_lambda[rk] * w[i];
        }
        entries.push_back({s, base + acc * inv_slots, "Kq"});
    });
    return PackingView::make_explicit(std::move(host), std::move(entries));
}

PackingView almost_to_full(const PackingView& p, int q, int r) {
    const int rq = r * q;
    const Rat eps(1, static_cast<long>(binom(rq, r)));
    const Rat lo = 1 - eps;

    const PackingView pe = p.materialize();
    const auto boundary = boundary_all(pe);
    for (const auto& [rk, v] : boundary) {
        if (v < lo)
            throw std::domain_error("almost_to_full: boundary below 1 - 1/C(rq,r) at edge rank " +
                                    std::to_string(rk));
        if (v > 1)
            throw std::domain_error("almost_to_full: boundary above 1 at edge rank " +
                                    std::to_string(rk));
    }

    // fix_packing results repeat heavily (identical target vectors whenever
    // the copies see the same boundary pattern), so memoize on the targets.
    std::unordered_map<std::string, std::vector<SupportEntry>> fix_cache;
    Accumulator acc;
    const int local_edges = static_cast<int>(binom(rq, r));
    for (const auto& en : pe.entries()) {
        if (en.weight == 0) continue;
        if (static_cast<int>(en.vertices.size()) != rq)
            throw std::invalid_argument("almost_to_full: support element is not an rq-set");
        std::map<std::uint64_t, Rat> targets;
        std::string key;
        key.reserve(local_edges * 4);
        std::uint64_t lrk = 0;
        VertexSet ge(r);
        for_each_subset(rq, r, [&](const VertexSet& idx) {
            for (int i = 0; i < r; ++i) ge[i] = en.vertices[idx[i]];
            Rat t = lo / boundary.at(colex_rank(ge));
            key += rat_str(t);
            key += ',';
            targets.emplace(lrk++, std::move(t));
        });
        auto it = fix_cache.find(key);
        if (it == fix_cache.end())
            it = fix_cache.emplace(key, fix_packing(targets, q, r).entries()).first;
        for (const auto& sub : relabel_entries(it->second, en.vertices))
            acc[{sub.vertices, sub.tag}] += en.weight * sub.weight;
    }

    Rat rescale = 1 / lo;
    std::vector<SupportEntry> entries = drain(std::move(acc));
    for (auto& en : entries) en.weight *= rescale;
    return PackingView::make_explicit(pe.host_ptr(), std::move(entries));
}

}  // namespace fracdec
