#include "fracdec/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "fracdec/bigfloat.hpp"

namespace fracdec {

ExplorationResult exploration_ordering(const Hypergraph& j, const VertexSet& x) {
    const int n = j.n();
    std::vector<bool> in_x(n, false);
    for (int v : canonical_vertex_set(x, n)) in_x[v] = true;

    std::vector<std::vector<std::uint64_t>> edges_at(n);
    for (std::uint64_t rk : j.edge_ranks())
        for (int v : j.edge_vertices(rk)) edges_at[v].push_back(rk);

    std::vector<bool> placed = in_x;
    ExplorationResult res;
    for (int u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (edges_at[u].empty())
            throw std::invalid_argument("exploration_ordering: vertex " + std::to_string(u) +
                                        " outside X has degree 0");
        // enablers of u's first edge go in before u, so u completes that edge
        VertexSet e = j.edge_vertices(edges_at[u].front());
        for (int w : e) {
            if (w == u || placed[w]) continue;
            res.ordering.push_back(w);
            placed[w] = true;
        }
        res.ordering.push_back(u);
        placed[u] = true;
    }

    // goodness is a property of the ordering: scan the definition
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < res.ordering.size(); ++i) pos[res.ordering[i]] = static_cast<int>(i);
    std::vector<bool> good(res.ordering.size(), false);
    for (std::uint64_t rk : j.edge_ranks()) {
        int maxpos = -1;
        for (int v : j.edge_vertices(rk))
            if (!in_x[v]) maxpos = std::max(maxpos, pos[v]);
        if (maxpos >= 0) good[maxpos] = true;
    }
    for (std::size_t i = 0; i < good.size(); ++i)
        if (good[i]) res.good_indices.push_back(static_cast<int>(i));
    res.good_count = static_cast<int>(res.good_indices.size());
    return res;
}

bool sparse_complement_member(const Hypergraph& g, const VertexSet& t, long m) {
    const int k = static_cast<int>(t.size());
    const int r = g.r();
    std::vector<long> missing_deg(k, 0);
    long worst = 0;
    VertexSet e(r);
    for_each_subset(k, r, [&](const VertexSet& idx) {
        for (int i = 0; i < r; ++i) e[i] = t[idx[i]];
        if (!g.has_edge(e))
            for (int i : idx) worst = std::max(worst, ++missing_deg[i]);
    });
    return worst <= m;
}

PackingView uniform_family_packing(const Hypergraph& g, int k, long m, std::size_t budget) {
    const int n = g.n(), r = g.r();
    if (k < r || k > n) throw std::invalid_argument("uniform_family_packing: need r <= k <= n");
    auto host = std::make_shared<Hypergraph>(g);
    Rat unit(1, 1);
    unit /= Rat(binom_z(n - r, k - r));
    long mm = m;
    int kk = k;
    std::size_t bb = budget;

    auto weight_fn = [=](const VertexSet& t) -> Rat {
        if (static_cast<int>(t.size()) != kk) return 0;
        return sparse_complement_member(*host, t, mm) ? unit : Rat(0);
    };
    auto boundary_fn = [=](std::uint64_t rk) -> Rat {
        return 1 - family_deficiency_exact(*host, kk, mm, host->edge_vertices(rk), bb);
    };
    auto enumerate_fn = [=]() -> std::vector<SupportEntry> {
        if (binom_z(host->n(), kk) > static_cast<long>(bb))
            throw std::length_error("uniform_family_packing: k-set space exceeds budget");
        std::vector<SupportEntry> out;
        for_each_subset(host->n(), kk, [&](const VertexSet& t) {
            if (sparse_complement_member(*host, t, mm)) out.push_back({t, unit, "induced"});
        });
        return out;
    };
    return PackingView::make_implicit(host, weight_fn, boundary_fn, enumerate_fn);
}

Rat family_deficiency_exact(const Hypergraph& g, int k, long m, const VertexSet& f,
                            std::uint64_t budget) {
    const int n = g.n(), r = g.r();
    VertexSet fs = canonical_vertex_set(f, n, r);
    if (k < r || k > n) throw std::invalid_argument("family_deficiency_exact: need r <= k <= n");
    Int total = binom_z(n - r, k - r);
    if (total > static_cast<long>(budget))
        throw std::length_error("family_deficiency_exact: superset space exceeds budget");
    VertexSet others;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(fs.begin(), fs.end(), v)) others.push_back(v);
    Int bad = 0;
    for_each_subset(n - r, k - r, [&](const VertexSet& idx) {
        VertexSet t = fs;
        for (int i : idx) t.push_back(others[i]);
        std::sort(t.begin(), t.end());
        if (!sparse_complement_member(g, t, m)) ++bad;
    });
    Rat out{bad};
    out /= Rat(total);
    return out;
}

McReport family_deficiency_mc(const Hypergraph& g, int k, long m, const VertexSet& f,
                              long samples, std::uint64_t seed) {
    const int n = g.n(), r = g.r();
    VertexSet fs = canonical_vertex_set(f, n, r);
    if (samples < 1) throw std::invalid_argument("family_deficiency_mc: need samples >= 1");
    VertexSet others;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(fs.begin(), fs.end(), v)) others.push_back(v);

    std::mt19937_64 rng(seed);
    // unbiased bounded draw by rejection; keeps sampling platform-independent
    auto draw = [&rng](std::uint64_t bound) -> std::uint64_t {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return x % bound;
    };

    McReport rep;
    rep.samples = samples;
    rep.seed = seed;
    VertexSet pool = others;
    for (long it = 0; it < samples; ++it) {
        // partial Fisher-Yates: first k-r entries become the sample
        for (int i = 0; i < k - r; ++i)
            std::swap(pool[i], pool[i + draw(pool.size() - i)]);
        VertexSet t = fs;
        t.insert(t.end(), pool.begin(), pool.begin() + (k - r));
        std::sort(t.begin(), t.end());
        if (!sparse_complement_member(g, t, m)) ++rep.failures;
    }
    rep.estimate = static_cast<double>(rep.failures) / static_cast<double>(samples);
    rep.std_error = std::sqrt(rep.estimate * (1 - rep.estimate) / static_cast<double>(samples));
    return rep;
}

namespace {

// ln C(x, y) for real x, y >= 0 via lngamma; -inf stand-in when y > x.
bool log_binom(const BigFloat& x, const BigFloat& y, BigFloat& out) {
    if (y > x || y < BigFloat(0.0)) return false;
    out = lngamma(x + BigFloat(1L)) - lngamma(y + BigFloat(1L)) -
          lngamma(x - y + BigFloat(1L));
    return true;
}

}  // namespace

TailBoundReport tail_bound(long n, int r, long k, long m, const Rat& d, int s) {
    if (r < 2 || s < 1 || d <= 0 || d > 1)
        throw std::invalid_argument("tail_bound: need r >= 2, s >= 1, d in (0,1]");
    TailBoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = m;
    rep.r = r;
    rep.s = s;
    rep.d = d;

    const BigFloat bn(n), bk(k), bs(static_cast<long>(s)), bd(d);
    const BigFloat e2 = exp(BigFloat(2.0));
    const BigFloat good = bs / BigFloat(static_cast<long>(r - 1));  // guaranteed good count

    // counting bound: C(C(s,r-2)*d*n, s/(r-1)) * C(n-r, s - s/(r-1)) * C(n-r-s, k-r-s)
    BigFloat t1, t2, t3;
    bool ok1 = log_binom(BigFloat(Int(binom_z(s, r - 2))) * bd * bn, good, t1);
    bool ok2 = log_binom(BigFloat(n - r), bs - good, t2);
    bool ok3 = log_binom(BigFloat(n - r - s), BigFloat(k - r - s), t3);
    BigFloat denom;
    bool okd = log_binom(BigFloat(n - r), BigFloat(k - r), denom);
    if (!okd) throw std::invalid_argument("tail_bound: need k <= n");

    if (ok1 && ok2 && ok3) {
        rep.term1 = exp(t1).str();
        rep.term2 = exp(t2).str();
        rep.term3 = exp(t3).str();
        BigFloat ratio = exp(t1 + t2 + t3 - denom);
        rep.ratio = ratio.str();
        rep.ratio_d = ratio.to_double();
    } else {
        rep.term1 = rep.term2 = rep.term3 = rep.ratio = "0";
        rep.ratio_d = 0;
    }

    if (r == 2) {
        BigFloat b = pow(bk * bd, bs);
        rep.r2_bound = b.str();
    }

    BigFloat base = pow(BigFloat(2.0) * e2 * bk, BigFloat(static_cast<long>(r - 1))) * bd;
    rep.precondition_ok = base <= BigFloat(1.0);
    BigFloat expo = (pow(BigFloat(m), BigFloat(1.0) / BigFloat(static_cast<long>(r - 1))) -
                     BigFloat(static_cast<long>(r))) /
                    BigFloat(static_cast<long>(r - 1));
    BigFloat simplified = pow(base, expo);
    rep.simplified_bound = simplified.str();
    rep.simplified_d = simplified.to_double();
    BigFloat per_edge = bk * simplified;
    rep.per_edge_bound = per_edge.str();
    rep.per_edge_d = per_edge.to_double();
    return rep;
}

}  // namespace fracdec
