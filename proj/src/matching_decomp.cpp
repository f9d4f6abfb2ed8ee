#include "fracdec/matching_decomp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fracdec/symmetric_decomp.hpp"

namespace fracdec {

namespace {

Rat pow_rat(const Rat& x, int e) {
    Rat out = 1;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

// pmf of a sum of independent count variables, as dense vectors of Rat.
std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rat> binomial_pmf(int n, const Rat& p) {
    std::vector<Rat> out(n + 1);
    Rat q = 1 - p;
    for (int k = 0; k <= n; ++k) out[k] = Rat(Int(binom_z(n, k))) * pow_rat(p, k) * pow_rat(q, n - k);
    return out;
}

std::vector<int> intersection_sizes(const Matching& m, const VertexSet& e) {
    std::vector<int> t;
    t.reserve(m.edges.size());
    for (const auto& me : m.edges) {
        VertexSet inter;
        std::set_intersection(me.begin(), me.end(), e.begin(), e.end(), std::back_inserter(inter));
        t.push_back(static_cast<int>(inter.size()));
    }
    return t;
}

}  // namespace

SubsetDistribution quasi_independent_distribution(int r, const Rat& p) {
    if (r < 2) throw std::invalid_argument("quasi_independent_distribution: need r >= 2");
    if (p <= 0 || p > 1) throw std::invalid_argument("quasi_independent_distribution: p not in (0,1]");
    SubsetDistribution d;
    d.r = r;
    d.p = p;
    d.by_size.assign(r + 1, Rat(0));
    Rat q = 1 - p;
    for (int t = 0; t < r; ++t) {
        int k = r - t;
        Rat value = pow_rat(p, t) * (pow_rat(q, k) - Rat(k % 2 == 0 ? 1 : -1) * pow_rat(p, k));
        if (value < 0)
            throw std::domain_error(
                "quasi_independent_distribution: p > 1/2; negative mass at subset size " +
                std::to_string(t) + " (value " + rat_str(value) + ")");
        d.by_size[t] = value;
    }
    // construction-time checks: total mass 1, marginals p^t
    Rat total = 0;
    for (int t = 0; t <= r; ++t) total += Rat(Int(binom_z(r, t))) * d.by_size[t];
    if (total != 1) throw std::logic_error("quasi_independent_distribution: mass is not 1");
    for (int t = 0; t < r; ++t) {
        Rat marg = 0;
        for (int j = t; j <= r; ++j) marg += Rat(Int(binom_z(r - t, j - t))) * d.by_size[j];
        if (marg != pow_rat(p, t))
            throw std::logic_error("quasi_independent_distribution: marginal mismatch");
    }
    return d;
}

std::map<int, Rat> size_distribution(const SubsetDistribution& dist, int t) {
    if (t < 0 || t >= dist.r)
        throw std::invalid_argument("size_distribution: conditioning size must be in [0, r-1]");
    Rat pt = pow_rat(dist.p, t);
    std::map<int, Rat> out;
    for (int j = t; j <= dist.r; ++j)
        out[j] = Rat(Int(binom_z(dist.r - t, j - t))) * dist.by_size[j] / pt;
    return out;
}

Rat deficiency_exact(int n, int r, int q, const Matching& m, const Rat& p, const VertexSet& e) {
    if (p <= 0 || p > Rat(1, 2)) throw std::invalid_argument("deficiency_exact: need p in (0, 1/2]");
    check_matching(m, n, r);
    VertexSet es = canonical_vertex_set(e, n, r);
    SubsetDistribution dist = quasi_independent_distribution(r, p);
    std::vector<int> ts = intersection_sizes(m, es);
    for (int t : ts)
        if (t == r) throw std::invalid_argument("deficiency_exact: e is an edge of the matching");

    int matched_in_e = 0;
    for (int t : ts) matched_in_e += t;
    int fixed_free = r - matched_in_e;              // vertices of e outside V(M)
    int unmatched = n - r * static_cast<int>(m.edges.size()) - fixed_free;

    std::vector<Rat> pmf{Rat(1)};
    for (int t : ts) {
        std::map<int, Rat> sd = size_distribution(dist, t);
        std::vector<Rat> comp(r + 1, Rat(0));
        for (const auto& [j, pr] : sd) comp[j] = pr;
        pmf = convolve(pmf, comp);
    }
    pmf = convolve(pmf, binomial_pmf(unmatched, p));

    int target = r * q;
    Rat tail = 0;
    for (int s = 0; s + fixed_free < target && s < static_cast<int>(pmf.size()); ++s)
        tail += pmf[s];
    return tail;
}

DeficiencyReport deficiency_report(int n, int r, int q, const Matching& m, const Rat& p) {
    DeficiencyReport rep;
    rep.threshold = Rat(1, static_cast<long>(binom(r * q, r)));
    rep.threshold.canonicalize();
    rep.max_eta = 0;
    Hypergraph host = Hypergraph::complete_minus_matching(n, r, m);
    // deficiency depends only on the intersection pattern with the matching
    std::map<std::vector<int>, Rat> by_pattern;
    for (std::uint64_t rk : host.edge_ranks()) {
        VertexSet e = host.edge_vertices(rk);
        std::vector<int> pat = intersection_sizes(m, e);
        std::sort(pat.begin(), pat.end());
        while (!pat.empty() && pat.front() == 0) pat.erase(pat.begin());
        auto it = by_pattern.find(pat);
        if (it == by_pattern.end())
            it = by_pattern.emplace(pat, deficiency_exact(n, r, q, m, p, e)).first;
        rep.per_edge_eta[rk] = it->second;
        if (it->second > rep.max_eta) {
            rep.max_eta = it->second;
            if (it->second > rep.threshold && !rep.witness) rep.witness = rk;
        }
    }
    rep.pass = rep.max_eta <= rep.threshold;
    return rep;
}

PackingView matching_almost_packing(int n, int r, int q, const Matching& m, const Rat& p,
                                    int min_size, std::size_t outcome_budget) {
    if (p <= 0 || p > Rat(1, 2))
        throw std::invalid_argument("matching_almost_packing: need p in (0, 1/2]");
    if (r * q > n) throw std::invalid_argument("matching_almost_packing: need rq <= n");
    check_matching(m, n, r);
    if (min_size < 0) min_size = r * q;
    auto host = std::make_shared<Hypergraph>(Hypergraph::complete_minus_matching(n, r, m));
    auto dist = std::make_shared<SubsetDistribution>(quasi_independent_distribution(r, p));
    auto matching = std::make_shared<Matching>(m);
    Rat pr = pow_rat(p, r);

    std::vector<bool> in_matching(n, false);
    for (const auto& me : m.edges)
        for (int v : me) in_matching[v] = true;
    auto free_vertices = std::make_shared<VertexSet>();
    for (int v = 0; v < n; ++v)
        if (!in_matching[v]) free_vertices->push_back(v);

    auto weight_fn = [=](const VertexSet& t) -> Rat {
        if (static_cast<int>(t.size()) < min_size) return 0;
        Rat prob = 1;
        for (const auto& me : matching->edges) {
            VertexSet inter;
            std::set_intersection(me.begin(), me.end(), t.begin(), t.end(),
                                  std::back_inserter(inter));
            prob *= dist->by_size[inter.size()];
            if (prob == 0) return 0;
        }
        int inside = 0;
        for (int v : *free_vertices)
            if (std::binary_search(t.begin(), t.end(), v)) ++inside;
        prob *= pow_rat(p, inside) * pow_rat(1 - p, static_cast<int>(free_vertices->size()) - inside);
        return prob / pr;
    };

    auto eta_cache = std::make_shared<std::map<std::vector<int>, Rat>>();
    int nn = n, rr = r, qq = q;
    auto boundary_fn = [=](std::uint64_t rk) -> Rat {
        VertexSet e = host->edge_vertices(rk);
        std::vector<int> pat = intersection_sizes(*matching, e);
        std::sort(pat.begin(), pat.end());
        while (!pat.empty() && pat.front() == 0) pat.erase(pat.begin());
        auto it = eta_cache->find(pat);
        if (it == eta_cache->end())
            it = eta_cache->emplace(pat, deficiency_exact(nn, rr, qq, *matching, p, e)).first;
        return 1 - it->second;
    };

    auto enumerate_fn = [=]() -> std::vector<SupportEntry> {
        // per-component option lists; outcome space is their product
        std::vector<std::vector<std::pair<VertexSet, Rat>>> comps;
        for (const auto& me : matching->edges) {
            std::vector<std::pair<VertexSet, Rat>> opts;
            for (int size = 0; size <= rr; ++size) {
                if (dist->by_size[size] == 0) continue;
                for_each_subset(rr, size, [&](const VertexSet& idx) {
                    VertexSet sub;
                    for (int i : idx) sub.push_back(me[i]);
                    opts.push_back({sub, dist->by_size[size]});
                });
            }
            comps.push_back(std::move(opts));
        }
        double outcomes = 1;
        for (const auto& c : comps) outcomes *= static_cast<double>(c.size());
        outcomes *= std::pow(2.0, static_cast<double>(free_vertices->size()));
        if (outcomes > static_cast<double>(outcome_budget))
            throw std::length_error("matching_almost_packing: outcome space exceeds budget");

        std::vector<SupportEntry> out;
        VertexSet current;
        Rat q1 = 1 - p;
        std::function<void(std::size_t, Rat)> rec_edges;
        std::function<void(std::size_t, Rat)> rec_free = [&](std::size_t i, Rat prob) {
            if (i == free_vertices->size()) {
                if (static_cast<int>(current.size()) < min_size) return;
                VertexSet t = current;
                std::sort(t.begin(), t.end());
                out.push_back({std::move(t), prob / pr, "big"});
                return;
            }
            rec_free(i + 1, prob * q1);
            current.push_back((*free_vertices)[i]);
            rec_free(i + 1, prob * p);
            current.pop_back();
        };
        rec_edges = [&](std::size_t i, Rat prob) {
            if (i == comps.size()) {
                rec_free(0, prob);
                return;
            }
            for (const auto& [sub, pval] : comps[i]) {
                for (int v : sub) current.push_back(v);
                rec_edges(i + 1, prob * pval);
                current.resize(current.size() - sub.size());
            }
        };
        rec_edges(0, Rat(1));
        return out;
    };

    return PackingView::make_implicit(host, weight_fn, boundary_fn, enumerate_fn);
}

std::vector<Matching> greedy_edge_color(const Hypergraph& h) {
    std::vector<Matching> classes;
    std::vector<std::vector<bool>> used;  // per class, per vertex
    for (std::uint64_t rk : h.edge_ranks()) {
        VertexSet e = h.edge_vertices(rk);
        std::size_t cls = 0;
        for (; cls < classes.size(); ++cls) {
            bool free = true;
            for (int v : e) free = free && !used[cls][v];
            if (free) break;
        }
        if (cls == classes.size()) {
            classes.emplace_back();
            used.emplace_back(h.n(), false);
        }
        classes[cls].edges.push_back(e);
        for (int v : e) used[cls][v] = true;
    }
    return classes;
}

namespace {

// Canonical relabeling placing restriction vertices first, so inner
// decompositions can be cached across isomorphic restrictions.
struct CanonicalRestriction {
    std::vector<int> to_canonical;    // local -> canonical
    std::vector<int> from_canonical;  // canonical -> local
    std::vector<Matching> matchings;  // in canonical labels
    std::string key;
};

CanonicalRestriction canonicalize_restriction(int k, const std::vector<Matching>& local) {
    CanonicalRestriction c;
    c.to_canonical.assign(k, -1);
    int next = 0;
    for (const auto& m : local)
        for (const auto& e : m.edges)
            for (int v : e)
                if (c.to_canonical[v] < 0) c.to_canonical[v] = next++;
    for (int v = 0; v < k; ++v)
        if (c.to_canonical[v] < 0) c.to_canonical[v] = next++;
    c.from_canonical.assign(k, 0);
    for (int v = 0; v < k; ++v) c.from_canonical[c.to_canonical[v]] = v;

    std::ostringstream key;
    key << k;
    for (const auto& m : local) {
        Matching cm;
        key << ";";
        for (const auto& e : m.edges) {
            VertexSet ce;
            for (int v : e) ce.push_back(c.to_canonical[v]);
            std::sort(ce.begin(), ce.end());
            cm.edges.push_back(ce);
        }
        std::sort(cm.edges.begin(), cm.edges.end());
        for (const auto& e : cm.edges) {
            for (int v : e) key << v << ",";
            key << "|";
        }
        c.matchings.push_back(std::move(cm));
    }
    c.key = key.str();
    return c;
}

DecompositionResult decompose_impl(int n, int r, int q, const std::vector<Matching>& ms,
                                   const Rat& p, std::size_t outcome_budget, int depth,
                                   std::unordered_map<std::string, std::vector<SupportEntry>>& memo);

// Full K_q decomposition entries for the induced host K_k minus the given
// matchings, in local labels; throws DecompositionResult-free errors upward
// via the returned struct.
DecompositionResult inner_decompose(int k, int r, int q, const std::vector<Matching>& local,
                                    const Rat& p, std::size_t outcome_budget, int depth,
                                    std::unordered_map<std::string, std::vector<SupportEntry>>& memo) {
    return decompose_impl(k, r, q, local, p, outcome_budget, depth, memo);
}

DecompositionResult decompose_impl(int n, int r, int q, const std::vector<Matching>& ms,
                                   const Rat& p, std::size_t outcome_budget, int depth,
                                   std::unordered_map<std::string, std::vector<SupportEntry>>& memo) {
    DecompositionResult res;
    // drop matchings with no edges
    std::vector<Matching> live;
    for (const auto& m : ms)
        if (!m.edges.empty()) live.push_back(m);

    if (live.empty()) {
        res.packing = complete_symmetric(n, q, r);
        res.report.max_eta = 0;
        res.report.threshold = Rat(1, static_cast<long>(binom(r * q, r)));
        res.report.pass = true;
        return res;
    }

    const Matching& m1 = live.front();
    DeficiencyReport rep = deficiency_report(n, r, q, m1, p);
    res.report = rep;
    if (!rep.pass) {
        res.failed_depth = depth;
        res.error = "deficiency exceeds 1/C(rq,r) at induction depth " + std::to_string(depth);
        return res;
    }

    auto host = std::make_shared<Hypergraph>(
        Hypergraph::complete_minus_matchings(n, r, live));
    std::vector<Matching> rest(live.begin() + 1, live.end());

    PackingView phi = matching_almost_packing(n, r, q, m1, p, r * q, outcome_budget);
    PackingView phi_m = phi.materialize(outcome_budget);

    // exact first stage: decompose each big set straight into K_q copies;
    // otherwise go through K_{rq} copies and repair with almost_to_full.
    const bool exact_first_stage = rep.max_eta == 0;
    const int inner_q = exact_first_stage ? q : r * q;

    // re-host the big-clique family over the final graph; members may span
    // deleted edges of the later matchings, so they are "induced" elements
    std::vector<SupportEntry> outer_entries = phi_m.entries();
    for (auto& en : outer_entries) en.tag = "induced";
    PackingView outer = PackingView::make_explicit(host, std::move(outer_entries));

    std::optional<DecompositionResult> inner_failure;
    auto inner = [&](const SupportEntry& h) -> std::vector<SupportEntry> {
        int k = static_cast<int>(h.vertices.size());
        std::vector<Matching> local;
        for (const auto& m : rest) {
            Matching lm;
            for (const auto& e : m.edges) {
                if (!std::includes(h.vertices.begin(), h.vertices.end(), e.begin(), e.end()))
                    continue;
                VertexSet le;
                for (int v : e)
                    le.push_back(static_cast<int>(
                        std::lower_bound(h.vertices.begin(), h.vertices.end(), v) -
                        h.vertices.begin()));
                lm.edges.push_back(le);
            }
            if (!lm.edges.empty()) local.push_back(std::move(lm));
        }
        CanonicalRestriction canon = canonicalize_restriction(k, local);
        std::string key = std::to_string(inner_q) + "@" + canon.key;
        auto it = memo.find(key);
        if (it == memo.end()) {
            DecompositionResult sub = inner_decompose(k, r, inner_q, canon.matchings, p,
                                                      outcome_budget, depth + 1, memo);
            if (!sub.packing) {
                if (!inner_failure) inner_failure = std::move(sub);
                return {};
            }
            it = memo.emplace(key, sub.packing->entries()).first;
        }
        // canonical labels -> local -> global
        VertexSet onto(k);
        for (int c = 0; c < k; ++c) onto[c] = h.vertices[canon.from_canonical[c]];
        return relabel_entries(it->second, onto);
    };

    PackingView combined = concatenate(outer, inner, outcome_budget);
    if (inner_failure) {
        res.failed_depth = inner_failure->failed_depth;
        res.error = inner_failure->error;
        res.report = inner_failure->report;
        return res;
    }

    if (inner_q == q) {
        res.packing = std::move(combined);
    } else {
        res.packing = almost_to_full(combined, q, r);
    }
    return res;
}

}  // namespace

DecompositionResult decompose_minus_matching(int n, int r, int q, const Matching& m, const Rat& p,
                                             std::size_t outcome_budget) {
    std::unordered_map<std::string, std::vector<SupportEntry>> memo;
    return decompose_impl(n, r, q, {m}, p, outcome_budget, 0, memo);
}

DecompositionResult decompose_minus_matchings(int n, int r, int q, const std::vector<Matching>& ms,
                                              const Rat& p, std::size_t outcome_budget) {
    std::unordered_map<std::string, std::vector<SupportEntry>> memo;
    return decompose_impl(n, r, q, ms, p, outcome_budget, 0, memo);
}

}  // namespace fracdec
