#include "fracdec/driver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fracdec/bigfloat.hpp"
#include "fracdec/compose.hpp"
#include "fracdec/lp.hpp"
#include "fracdec/sampling.hpp"
#include "fracdec/symmetric_decomp.hpp"

namespace fracdec {

ParamReport main_parameters(int r, const Rat& eps, int q, const Int& vacuity_budget) {
    if (r < 2 || q <= r || eps <= 0 || eps > 1)
        throw std::invalid_argument("main_parameters: need r >= 2, q > r, eps in (0,1]");
    ParamReport rep;
    rep.r = r;
    rep.q = q;
    rep.epsilon = eps;
    rep.C = 32L * r * r * r;

    // m: smallest integer strictly above (r + (r^2-1)/eps)^{r-1}, exactly
    Rat x = Rat(r) + Rat(r * r - 1) / eps;
    Rat xr = 1;
    for (int i = 0; i < r - 1; ++i) xr *= x;
    Int floor_xr;
    mpz_fdiv_q(floor_xr.get_mpz_t(), xr.get_num_mpz_t(), xr.get_den_mpz_t());
    rep.m = floor_xr + 1;
    rep.m_inequality = Rat(rep.m) > xr || Rat(rep.m) == xr;

    Int cm;
    mpz_pow_ui(cm.get_mpz_t(), Int(rep.C).get_mpz_t(), mpz_get_ui(rep.m.get_mpz_t()));
    rep.k = cm * r * q;
    rep.vacuous = rep.k > vacuity_budget;

    const BigFloat br(static_cast<long>(r)), bq(static_cast<long>(q));
    const BigFloat ln2 = log(BigFloat(2.0));
    const BigFloat ln_cm_r = BigFloat(rep.m) * log(BigFloat(rep.C)) + log(br);
    const BigFloat expo =
        pow(BigFloat(rep.m), BigFloat(1.0) / BigFloat(static_cast<long>(r - 1))) - br;

    // smallest j with ln(C^m r) - j*expo*ln2 <= -r
    BigFloat j = ceil((ln_cm_r + br) / (expo * ln2));
    rep.beta_log2 = j.to_long();

    const BigFloat ln_beta = BigFloat(rep.beta_log2) * ln2;
    const BigFloat ln_alpha =
        -BigFloat(static_cast<long>(r - 1)) *
        (ln2 + BigFloat(2.0) + ln_beta + BigFloat(rep.m) * log(BigFloat(rep.C)) + log(br));
    rep.alpha = exp(ln_alpha).str();
    const BigFloat ln_d =
        ln_alpha - (BigFloat(static_cast<long>(r - 1)) + BigFloat(eps)) * log(bq);
    rep.d = exp(ln_d).str();

    // d*(2e^2 k)^{r-1} collapses to beta^{-(r-1)} * q^{-eps}
    const BigFloat dk = exp(-BigFloat(static_cast<long>(r - 1)) * ln_beta - BigFloat(eps) * log(bq));
    rep.dk_product_lt_one = dk < BigFloat(1.0);

    rep.exponent_chain =
        BigFloat(eps) * expo / BigFloat(static_cast<long>(r - 1)) > BigFloat(static_cast<long>(r + 1));

    // final bound: C^m * r * beta^{-expo} * q^{1 - eps*expo/(r-1)}
    const BigFloat ln_final =
        ln_cm_r - expo * ln_beta +
        (BigFloat(1.0) - BigFloat(eps) * expo / BigFloat(static_cast<long>(r - 1))) * log(bq);
    const BigFloat final_bound = exp(ln_final);
    rep.final_bound = final_bound.str();
    rep.final_bound_ok = final_bound <= BigFloat(Rat(1) / Rat(binom_z(r * q, r)));
    return rep;
}

ChernoffReport chernoff_report(int n, int r, int q, const Matching& m, const Rat& p) {
    check_matching(m, n, r);
    ChernoffReport rep;
    const long mm = static_cast<long>(m.edges.size());
    rep.mu = p * mm + p * (n - mm * r - r);
    rep.bound = std::exp(-rep.mu.get_d() / 8.0);
    const bool valid = rep.mu >= Rat(2L * r * q);
    Hypergraph host = Hypergraph::complete_minus_matching(n, r, m);
    for (std::uint64_t rk : host.edge_ranks()) {
        ChernoffEdge ce;
        ce.edge_rank = rk;
        ce.exact = deficiency_exact(n, r, q, m, p, host.edge_vertices(rk));
        ce.bound = rep.bound;
        ce.bound_valid = valid;
        if (valid && Rat(ce.bound) < ce.exact) rep.sound = false;
        rep.per_edge.push_back(std::move(ce));
    }
    return rep;
}

namespace {

std::string matching_key(const std::vector<Matching>& ms) {
    std::ostringstream os;
    for (const auto& m : ms) {
        for (const auto& e : m.edges) {
            for (int v : e) os << v << ",";
            os << "|";
        }
        os << ";";
    }
    return os.str();
}

}  // namespace

PipelineReport pipeline(const Hypergraph& g, int q, const std::string& strategy,
                        const PipelineOptions& opt) {
    const int r = g.r();
    PipelineReport rep;
    rep.strategy = strategy;
    auto fail = [&](const std::string& name, const std::string& detail) -> PipelineReport& {
        rep.stages.push_back({name, false, detail});
        return rep;
    };
    auto stage = [&](const std::string& name, const std::string& detail) {
        rep.stages.push_back({name, true, detail});
    };

    long k = opt.k, m = opt.m;
    if (strategy == "paper-constants") {
        ParamReport pr = main_parameters(r, opt.eps, q, opt.vacuity_budget);
        std::ostringstream os;
        os << "C=" << pr.C << " m=" << pr.m.get_str() << " beta=2^" << pr.beta_log2
           << " k=" << pr.k.get_str();
        stage("parameters", os.str());
        if (pr.vacuous)
            return fail("vacuity", "paper-scale k exceeds the desk-scale budget; "
                                   "no construction attempted");
        k = mpz_get_si(pr.k.get_mpz_t());
        Int mi = pr.m;
        m = mpz_get_si(mi.get_mpz_t());
    } else if (strategy == "empirical" || strategy == "lp-fallback") {
        if (k < r || m < 0) return fail("parameters", "strategy requires explicit k and m");
    } else {
        return fail("parameters", "unknown strategy '" + strategy + "'");
    }

    const Rat threshold = Rat(1) / Rat(binom_z(r * q, r));

    PackingView fam_m = [&] {
        PackingView fam = uniform_family_packing(g, static_cast<int>(k), m, opt.budget);
        return fam.materialize(opt.budget);
    }();
    stage("family", std::to_string(fam_m.entries().size()) + " induced " + std::to_string(k) +
                        "-sets in the support");
    if (fam_m.entries().empty()) return fail("family-nonempty", "support family is empty");

    std::unordered_map<std::string, std::vector<SupportEntry>> memo;
    std::optional<std::string> inner_error;
    std::size_t matching_classes_max = 0;

    auto inner = [&](const SupportEntry& h) -> std::vector<SupportEntry> {
        Hypergraph sub = g.induced(h.vertices);
        std::vector<Matching> ms = greedy_edge_color(sub.complement());
        matching_classes_max = std::max(matching_classes_max, ms.size());
        std::string key = matching_key(ms);
        auto it = memo.find(key);
        if (it == memo.end()) {
            std::vector<SupportEntry> local;
            if (strategy == "lp-fallback") {
                LPInstance lp = build_feasibility_lp(sub, r * q);
                SolveResult sr = feasible(lp, opt.max_pivots, opt.max_cols);
                if (sr.status != SolveResult::Status::feasible) {
                    if (!inner_error)
                        inner_error = "LP verdict " +
                                      std::string(sr.status == SolveResult::Status::infeasible
                                                      ? "infeasible"
                                                      : "budget exceeded") +
                                      " on an induced " + std::to_string(k) + "-set";
                    return {};
                }
                for (std::size_t j = 0; j < lp.col_count(); ++j)
                    if (sr.cert->solution[j] != 0)
                        local.push_back({lp.col_cliques[j], sr.cert->solution[j], "Kq"});
            } else {
                DecompositionResult dr =
                    decompose_minus_matchings(static_cast<int>(k), r, r * q, ms, opt.p, opt.budget);
                if (!dr.packing) {
                    if (!inner_error)
                        inner_error = dr.error + " (eta " + rat_str(dr.report.max_eta) +
                                      " on an induced " + std::to_string(k) + "-set)";
                    return {};
                }
                local = dr.packing->entries();
            }
            it = memo.emplace(key, std::move(local)).first;
        }
        return relabel_entries(it->second, h.vertices);
    };

    PackingView combined = concatenate(fam_m, inner, opt.budget);
    if (inner_error) return fail("inner-decompositions", *inner_error);
    stage("inner-decompositions",
          std::to_string(memo.size()) + " distinct inner instances, <= " +
              std::to_string(matching_classes_max) + " matchings each");

    BoundaryReport bd = validate(combined, threshold);
    if (!bd.pass)
        return fail("eta-gate", "eta " + rat_str(bd.eta) + " exceeds " + rat_str(threshold));
    stage("eta-gate", "eta " + rat_str(bd.eta) + " <= " + rat_str(threshold));

    PackingView final_packing = almost_to_full(combined, q, r);
    BoundaryReport fin = validate(final_packing, Rat(0));
    if (!fin.pass) return fail("fixing", "final validation failed");
    stage("fixing", std::to_string(final_packing.entries().size()) +
                        " support elements, boundary = 1 on every edge");
    rep.packing = std::move(final_packing);
    rep.success = true;
    return rep;
}

}  // namespace fracdec
