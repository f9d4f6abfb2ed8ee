#include "fracdec/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace fracdec {

LPInstance build_feasibility_lp(const Hypergraph& g, int q) {
    if (q <= g.r()) throw std::invalid_argument("build_feasibility_lp: need q > r");
    LPInstance l;
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    for (std::uint64_t rk : g.edge_ranks()) {
        row_of[rk] = l.rows++;
        l.row_labels.push_back(std::to_string(rk));
        l.row_edges.push_back(g.edge_vertices(rk));
        l.rhs.push_back(Rat(1));
    }
    VertexSet e(g.r());
    for (const VertexSet& c : g.enumerate_cliques(q)) {
        std::vector<std::pair<std::size_t, Rat>> col;
        for_each_subset(q, g.r(), [&](const VertexSet& idx) {
            for (int i = 0; i < g.r(); ++i) e[i] = c[idx[i]];
            col.push_back({row_of.at(colex_rank(e)), Rat(1)});
        });
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        l.col_labels.push_back(std::to_string(l.cols.size()));
        l.col_cliques.push_back(c);
        l.cols.push_back(std::move(col));
    }
    return l;
}

SolveResult feasible(const LPInstance& l, std::uint64_t max_pivots, std::size_t max_cols) {
    SolveResult res;
    const std::size_t m = l.rows, n = l.col_count();
    if (n > max_cols) {
        res.status = SolveResult::Status::budget_exceeded;
        res.detail = "column budget exceeded";
        return res;
    }
    for (const Rat& b : l.rhs)
        if (b < 0) throw std::invalid_argument("feasible: negative rhs unsupported");

    // Phase-I tableau: minimize the sum of artificials a, over A x + a = rhs.
    const std::size_t total = n + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total + 1, Rat(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [i, v] : l.cols[j]) t[i][j] += v;
    for (std::size_t i = 0; i < m; ++i) {
        t[i][n + i] = 1;
        t[i][total] = l.rhs[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // reduced-cost row; d[total] = -objective
    std::vector<Rat> d(total + 1, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= total; ++j)
            if (j != n + i) d[j] -= t[i][j];
    d[n] = 0;  // artificial columns are basic: reduced cost 0
    for (std::size_t i = 0; i < m; ++i) d[n + i] = 0;

    // Entering rule: steepest reduced cost for speed, falling back to Bland's
    // anticycling rule (smallest index) after a degenerate stall.
    Rat last_obj = d[total];
    std::uint64_t stalled = 0;
    while (true) {
        const bool bland = stalled > m + 16;
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (d[j] >= 0) continue;
            if (bland) {
                enter = j;
                break;
            }
            if (enter == total || d[j] < d[enter]) enter = j;
        }
        if (enter == total) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            Rat cur = t[i][total] / t[i][enter];
            Rat best = t[leave][total] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m)
            throw std::logic_error("feasible: unbounded phase-I objective");

        if (++res.pivots > max_pivots) {
            res.status = SolveResult::Status::budget_exceeded;
            res.detail = "pivot budget exceeded";
            return res;
        }

        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j)
            if (t[leave][j] != 0) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        if (d[enter] != 0) {
            Rat f = d[enter];
            for (std::size_t j = 0; j <= total; ++j)
                if (t[leave][j] != 0) d[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
        if (d[total] != last_obj) {
            last_obj = d[total];
            stalled = 0;
        } else {
            ++stalled;
        }
    }

    Rat objective = -d[total];
    Certificate cert;
    if (objective == 0) {
        cert.kind = Certificate::Kind::feasible;
        cert.solution.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) cert.solution[basis[i]] = t[i][total];
        res.status = SolveResult::Status::feasible;
    } else {
        cert.kind = Certificate::Kind::infeasible;
        cert.farkas.resize(m);
        // y = c_B B^{-1}; the artificial block of the tableau is B^{-1},
        // so y_i = 1 - (reduced cost of artificial i)
        for (std::size_t i = 0; i < m; ++i) cert.farkas[i] = 1 - d[n + i];
        res.status = SolveResult::Status::infeasible;
    }
    if (!verify_certificate(l, cert))
        throw std::logic_error("feasible: self-check of emitted certificate failed");
    res.cert = std::move(cert);
    return res;
}

bool verify_certificate(const LPInstance& l, const Certificate& c) {
    if (c.kind == Certificate::Kind::feasible) {
        if (c.solution.size() != l.col_count()) return false;
        for (const Rat& x : c.solution)
            if (x < 0) return false;
        std::vector<Rat> lhs(l.rows, Rat(0));
        for (std::size_t j = 0; j < l.col_count(); ++j) {
            if (c.solution[j] == 0) continue;
            for (const auto& [i, v] : l.cols[j]) lhs[i] += v * c.solution[j];
        }
        for (std::size_t i = 0; i < l.rows; ++i)
            if (lhs[i] != l.rhs[i]) return false;
        return true;
    }
    if (c.farkas.size() != l.rows) return false;
    for (std::size_t j = 0; j < l.col_count(); ++j) {
        Rat dot = 0;
        for (const auto& [i, v] : l.cols[j]) dot += c.farkas[i] * v;
        if (dot > 0) return false;
    }
    Rat obj = 0;
    for (std::size_t i = 0; i < l.rows; ++i) obj += c.farkas[i] * l.rhs[i];
    return obj > 0;
}

LPInstance orbit_reduce(const LPInstance& l, const OrbitSignature& sig) {
    std::vector<std::string> rlab(l.rows), clab(l.col_count());
    for (std::size_t i = 0; i < l.rows; ++i) rlab[i] = sig.row_label(i);
    for (std::size_t j = 0; j < l.col_count(); ++j) clab[j] = sig.col_label(j);

    std::map<std::string, std::size_t> rid, cid;
    for (const auto& s : rlab) rid.emplace(s, 0);
    for (const auto& s : clab) cid.emplace(s, 0);
    {
        std::size_t k = 0;
        for (auto& [s, idx] : rid) idx = k++;
        k = 0;
        for (auto& [s, idx] : cid) idx = k++;
    }

    // per original row: aggregated coefficient into each column class
    std::vector<std::vector<Rat>> agg(l.rows, std::vector<Rat>(cid.size(), Rat(0)));
    for (std::size_t j = 0; j < l.col_count(); ++j)
        for (const auto& [i, v] : l.cols[j]) agg[i][cid.at(clab[j])] += v;

    std::vector<std::optional<std::size_t>> representative(rid.size());
    for (std::size_t i = 0; i < l.rows; ++i) {
        std::size_t cls = rid.at(rlab[i]);
        if (!representative[cls]) {
            representative[cls] = i;
            continue;
        }
        std::size_t rep = *representative[cls];
        if (agg[i] != agg[rep] || l.rhs[i] != l.rhs[rep])
            throw std::invalid_argument("orbit_reduce: inconsistent aggregation for row label '" +
                                        rlab[i] + "'");
    }

    LPInstance red;
    red.rows = rid.size();
    red.row_labels.resize(rid.size());
    red.rhs.resize(rid.size());
    for (const auto& [s, idx] : rid) {
        red.row_labels[idx] = s;
        red.rhs[idx] = l.rhs[*representative[idx]];
    }
    red.col_labels.resize(cid.size());
    red.cols.resize(cid.size());
    for (const auto& [s, idx] : cid) red.col_labels[idx] = s;
    for (std::size_t cls = 0; cls < cid.size(); ++cls)
        for (std::size_t rcls = 0; rcls < rid.size(); ++rcls) {
            const Rat& v = agg[*representative[rcls]][cls];
            if (v != 0) red.cols[cls].push_back({rcls, v});
        }
    return red;
}

namespace {

int intersection_size(const VertexSet& a, const VertexSet& b) {
    int out = 0;
    for (int v : a)
        if (std::binary_search(b.begin(), b.end(), v)) ++out;
    return out;
}

}  // namespace

OrbitSignature edge_intersection_signature(const LPInstance& l, const VertexSet& e) {
    OrbitSignature sig;
    sig.row_label = [&l, e](std::size_t i) {
        return "t=" + std::to_string(intersection_size(l.row_edges.at(i), e));
    };
    sig.col_label = [&l, e](std::size_t j) {
        return "i=" + std::to_string(intersection_size(l.col_cliques.at(j), e));
    };
    return sig;
}

OrbitSignature matching_signature(const LPInstance& l, const Matching& m) {
    auto label = [m](const VertexSet& s) {
        std::vector<int> pattern;
        int matched = 0;
        for (const auto& e : m.edges) {
            int t = intersection_size(s, e);
            matched += t;
            if (t > 0) pattern.push_back(t);
        }
        std::sort(pattern.begin(), pattern.end());
        std::string out = "p=";
        for (int t : pattern) out += std::to_string(t) + ".";
        out += "f=" + std::to_string(static_cast<int>(s.size()) - matched);
        return out;
    };
    OrbitSignature sig;
    sig.row_label = [&l, label](std::size_t i) { return label(l.row_edges.at(i)); };
    sig.col_label = [&l, label](std::size_t j) { return label(l.col_cliques.at(j)); };
    return sig;
}

Certificate certificate_from_entries(const LPInstance& l,
                                     const std::vector<SupportEntry>& entries) {
    std::map<VertexSet, std::size_t> col_of;
    for (std::size_t j = 0; j < l.col_cliques.size(); ++j) col_of.emplace(l.col_cliques[j], j);
    Certificate c;
    c.kind = Certificate::Kind::feasible;
    c.solution.assign(l.col_count(), Rat(0));
    for (const auto& en : entries) {
        auto it = col_of.find(en.vertices);
        if (it == col_of.end())
            throw std::invalid_argument("certificate_from_entries: support element is not a column");
        c.solution[it->second] += en.weight;
    }
    return c;
}

}  // namespace fracdec
