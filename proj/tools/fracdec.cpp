#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "fracdec/compose.hpp"
#include "fracdec/driver.hpp"
#include "fracdec/io.hpp"
#include "fracdec/lp.hpp"
#include "fracdec/matching_decomp.hpp"
#include "fracdec/sampling.hpp"
#include "fracdec/symmetric_decomp.hpp"

using nlohmann::json;
using namespace fracdec;

namespace {

// exit codes: 1 invalid input, 2 precondition/deficiency failure, 3 budget
constexpr int kExitInvalid = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const json& artifact, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << artifact.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << artifact.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
}

VertexSet parse_vertex_list(const std::string& s) {
    VertexSet out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

json boundary_report_json(const BoundaryReport& rep) {
    json j{{"min_boundary", rat_str(rep.min_boundary)},
           {"max_boundary", rat_str(rep.max_boundary)},
           {"eta", rat_str(rep.eta)},
           {"pass", rep.pass}};
    if (rep.witness) j["witness_edge_rank"] = *rep.witness;
    return j;
}

struct Budgets {
    std::uint64_t pivots = 1000000;
    std::size_t columns = 100000;
    std::size_t materialize = (1u << 20);
    int workers = 1;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fractional clique decompositions of uniform hypergraphs"};
    app.require_subcommand(1);

    Budgets budgets;
    app.add_option("--workers", budgets.workers, "worker count for parallelizable stages");
    app.add_option("--budget-pivots", budgets.pivots, "simplex pivot budget");
    app.add_option("--budget-columns", budgets.columns, "LP column budget");
    app.add_option("--materialize-limit", budgets.materialize, "max entries when materializing");

    // ---- solve-missing-edge ----
    auto* sme = app.add_subcommand("solve-missing-edge", "missing-one-edge weight system");
    int sme_r = 2, sme_q = 3;
    bool sme_expand = false;
    std::string sme_out;
    sme->add_option("--r", sme_r)->required();
    sme->add_option("--q", sme_q)->required();
    sme->add_flag("--expand", sme_expand, "emit the expanded packing");
    sme->add_option("-o,--output", sme_out);

    // ---- fix ----
    auto* fix = app.add_subcommand("fix", "exact per-edge boundary targets on K_{rq}^r");
    int fix_r = 2, fix_q = 3;
    std::string fix_targets, fix_out;
    fix->add_option("--r", fix_r)->required();
    fix->add_option("--q", fix_q)->required();
    fix->add_option("--targets", fix_targets, "JSON {\"targets\": {rank: \"p/q\"}}")->required();
    fix->add_option("-o,--output", fix_out);

    // ---- almost-to-full ----
    auto* atf = app.add_subcommand("almost-to-full", "repair an almost decomposition");
    int atf_r = 2, atf_q = 3;
    std::string atf_packing, atf_out;
    atf->add_option("--r", atf_r)->required();
    atf->add_option("--q", atf_q)->required();
    atf->add_option("--packing", atf_packing)->required();
    atf->add_option("-o,--output", atf_out);

    // ---- matching ----
    auto* mat = app.add_subcommand("matching", "decompose K_n^r minus matchings");
    int mat_n = 0, mat_r = 2, mat_q = 3;
    std::string mat_matching, mat_p = "1/2", mat_out;
    bool mat_deficiency_only = false, mat_expand = false;
    mat->add_option("--n", mat_n)->required();
    mat->add_option("--r", mat_r)->required();
    mat->add_option("--q", mat_q)->required();
    mat->add_option("--matching", mat_matching, "JSON matching or list of matchings")->required();
    mat->add_option("--p", mat_p);
    mat->add_flag("--deficiency-only", mat_deficiency_only, "emit a deficiency CSV only");
    mat->add_flag("--expand", mat_expand, "embed the full packing in the artifact");
    mat->add_option("-o,--output", mat_out);

    // ---- sample ----
    auto* smp = app.add_subcommand("sample", "uniform induced k-set family");
    std::string smp_graph, smp_edge, smp_out;
    int smp_k = 0;
    long smp_m = 0, smp_mc = 0;
    std::uint64_t smp_seed = 0;
    smp->add_option("--graph", smp_graph)->required();
    smp->add_option("--k", smp_k)->required();
    smp->add_option("--m", smp_m)->required();
    smp->add_option("--edge", smp_edge, "comma-separated edge; default: all edges");
    smp->add_option("--mc", smp_mc, "Monte Carlo sample count (0 = exact)");
    smp->add_option("--seed", smp_seed);
    smp->add_option("-o,--output", smp_out);

    // ---- lp ----
    auto* lp = app.add_subcommand("lp", "exact LP feasibility oracle");
    std::string lp_graph, lp_orbit, lp_edge, lp_matching, lp_cert, lp_out;
    int lp_q = 3;
    lp->add_option("--graph", lp_graph)->required();
    lp->add_option("--q", lp_q)->required();
    lp->add_option("--orbit", lp_orbit, "edge|matching");
    lp->add_option("--edge", lp_edge, "distinguished edge for --orbit edge");
    lp->add_option("--matching", lp_matching, "matching JSON for --orbit matching");
    lp->add_option("--emit-certificate", lp_cert);
    lp->add_option("-o,--output", lp_out);

    // ---- params ----
    auto* par = app.add_subcommand("params", "main-theorem constant calculus");
    int par_r = 3, par_q = 4;
    std::string par_eps = "1", par_out;
    par->add_option("--r", par_r)->required();
    par->add_option("--eps", par_eps)->required();
    par->add_option("--q", par_q)->required();
    par->add_option("-o,--output", par_out);

    // ---- pipeline ----
    auto* pip = app.add_subcommand("pipeline", "end-to-end decomposition pipeline");
    std::string pip_graph, pip_strategy = "empirical", pip_out, pip_packing_out;
    int pip_q = 3;
    long pip_k = -1, pip_m = -1;
    pip->add_option("--graph", pip_graph)->required();
    pip->add_option("--q", pip_q)->required();
    pip->add_option("--strategy", pip_strategy, "paper-constants|empirical|lp-fallback");
    pip->add_option("--k", pip_k);
    pip->add_option("--m", pip_m);
    pip->add_option("--emit-packing", pip_packing_out);
    pip->add_option("-o,--output", pip_out);

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "re-validate a packing artifact");
    std::string ver_packing, ver_graph, ver_eta = "0", ver_out;
    ver->add_option("--packing", ver_packing)->required();
    ver->add_option("--graph", ver_graph, "host override; default: host embedded in the packing");
    ver->add_option("--eta", ver_eta);
    ver->add_option("-o,--output", ver_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sme) {
            json config{{"cmd", "solve-missing-edge"}, {"r", sme_r}, {"q", sme_q}};
            json body;
            json ws = json::array();
            for (const Rat& w : solve_weights(sme_q, sme_r)) ws.push_back(rat_str(w));
            body["weights"] = ws;
            if (sme_expand) {
                VertexSet e(sme_r);
                for (int i = 0; i < sme_r; ++i) e[i] = i;
                body["packing"] = packing_to_json(missing_edge_packing(sme_q, sme_r, e));
            }
            emit(make_artifact(std::move(body), config), sme_out);
        } else if (*fix) {
            json config{{"cmd", "fix"}, {"r", fix_r}, {"q", fix_q}};
            json tj = read_json_file(fix_targets);
            std::map<std::uint64_t, Rat> targets;
            for (const auto& [key, val] : tj.at("targets").items())
                targets[std::stoull(key)] = parse_rat(val.get<std::string>());
            PackingView p = fix_packing(targets, fix_q, fix_r);
            json body{{"packing", packing_to_json(p)}};
            emit(make_artifact(std::move(body), config), fix_out);
        } else if (*atf) {
            json config{{"cmd", "almost-to-full"}, {"r", atf_r}, {"q", atf_q}};
            PackingView p = packing_from_json(read_json_file(atf_packing));
            PackingView full = almost_to_full(p, atf_q, atf_r);
            BoundaryReport rep = validate(full, Rat(0));
            json body{{"packing", packing_to_json(full)},
                      {"validation", boundary_report_json(rep)}};
            emit(make_artifact(std::move(body), config), atf_out);
            if (!rep.pass) return kExitPrecondition;
        } else if (*mat) {
            json config{{"cmd", "matching"}, {"n", mat_n}, {"r", mat_r}, {"q", mat_q},
                        {"p", mat_p}};
            json mj = read_json_file(mat_matching);
            std::vector<Matching> ms;
            if (mj.is_array() && !mj.empty() && mj[0].is_array() && !mj[0].empty() &&
                mj[0][0].is_array()) {
                for (const auto& one : mj) ms.push_back(matching_from_json(one));
            } else {
                ms.push_back(matching_from_json(mj));
            }
            Rat p = parse_rat(mat_p);
            if (mat_deficiency_only) {
                DeficiencyReport rep =
                    deficiency_report(mat_n, mat_r, mat_q, ms.front(), p);
                std::map<std::uint64_t, Rat> as_map(rep.per_edge_eta.begin(),
                                                    rep.per_edge_eta.end());
                emit_text(boundary_csv(as_map), mat_out);
                if (!rep.pass) return kExitPrecondition;
            } else {
                DecompositionResult res = decompose_minus_matchings(
                    mat_n, mat_r, mat_q, ms, p, budgets.materialize);
                json body{{"deficiency",
                           json{{"max_eta", rat_str(res.report.max_eta)},
                                {"threshold", rat_str(res.report.threshold)},
                                {"pass", res.report.pass}}}};
                if (!res.packing) {
                    body["error"] = res.error;
                    body["failed_depth"] = res.failed_depth;
                    emit(make_artifact(std::move(body), config), mat_out);
                    return kExitPrecondition;
                }
                BoundaryReport rep = validate(*res.packing, Rat(0));
                body["validation"] = boundary_report_json(rep);
                if (mat_expand) body["packing"] = packing_to_json(*res.packing);
                emit(make_artifact(std::move(body), config), mat_out);
            }
        } else if (*smp) {
            json config{{"cmd", "sample"}, {"k", smp_k}, {"m", smp_m}, {"mc", smp_mc}};
            Hypergraph g = graph_from_json(read_json_file(smp_graph));
            json body;
            if (smp_mc > 0) {
                if (smp_edge.empty())
                    throw std::invalid_argument("--mc needs a distinguished --edge");
                McReport rep = family_deficiency_mc(g, smp_k, smp_m,
                                                    parse_vertex_list(smp_edge), smp_mc, smp_seed);
                body = json{{"estimate", rep.estimate},
                            {"std_error", rep.std_error},
                            {"failures", rep.failures},
                            {"samples", rep.samples}};
                emit(make_artifact(std::move(body), config, rep.seed, rep.generator), smp_out);
            } else if (!smp_edge.empty()) {
                Rat def = family_deficiency_exact(g, smp_k, smp_m, parse_vertex_list(smp_edge),
                                                 budgets.materialize);
                body = json{{"deficiency", rat_str(def)}};
                emit(make_artifact(std::move(body), config), smp_out);
            } else {
                json per_edge = json::object();
                Rat worst = 0;
                for (std::uint64_t rk : g.edge_ranks()) {
                    Rat def = family_deficiency_exact(g, smp_k, smp_m, g.edge_vertices(rk),
                                                      budgets.materialize);
                    worst = std::max(worst, def);
                    per_edge[std::to_string(rk)] = rat_str(def);
                }
                body = json{{"per_edge_deficiency", per_edge}, {"max_deficiency", rat_str(worst)}};
                emit(make_artifact(std::move(body), config), smp_out);
            }
        } else if (*lp) {
            json config{{"cmd", "lp"}, {"q", lp_q}, {"orbit", lp_orbit}};
            Hypergraph g = graph_from_json(read_json_file(lp_graph));
            LPInstance inst = build_feasibility_lp(g, lp_q);
            if (lp_orbit == "edge") {
                if (lp_edge.empty()) throw std::invalid_argument("--orbit edge needs --edge");
                inst = orbit_reduce(inst, edge_intersection_signature(
                                              inst, parse_vertex_list(lp_edge)));
            } else if (lp_orbit == "matching") {
                if (lp_matching.empty())
                    throw std::invalid_argument("--orbit matching needs --matching");
                inst = orbit_reduce(
                    inst, matching_signature(inst, matching_from_json(read_json_file(lp_matching))));
            } else if (!lp_orbit.empty()) {
                throw std::invalid_argument("unknown --orbit '" + lp_orbit + "'");
            }
            SolveResult res = feasible(inst, budgets.pivots, budgets.columns);
            json body{{"rows", inst.rows}, {"cols", inst.col_count()}, {"pivots", res.pivots}};
            if (res.status == SolveResult::Status::budget_exceeded) {
                body["status"] = "budget-exceeded";
                body["detail"] = res.detail;
                emit(make_artifact(std::move(body), config), lp_out);
                return kExitBudget;
            }
            body["status"] =
                res.status == SolveResult::Status::feasible ? "feasible" : "infeasible";
            body["certificate_verified"] = verify_certificate(inst, *res.cert);
            if (!lp_cert.empty()) {
                json cj{{"kind", res.cert->kind == Certificate::Kind::feasible ? "feasible"
                                                                               : "infeasible"}};
                json vals = json::array();
                const auto& vec = res.cert->kind == Certificate::Kind::feasible
                                      ? res.cert->solution
                                      : res.cert->farkas;
                for (const Rat& v : vec) vals.push_back(rat_str(v));
                cj["values"] = vals;
                emit(make_artifact(std::move(cj), config), lp_cert);
            }
            emit(make_artifact(std::move(body), config), lp_out);
            if (res.status == SolveResult::Status::infeasible) return kExitPrecondition;
        } else if (*par) {
            json config{{"cmd", "params"}, {"r", par_r}, {"eps", par_eps}, {"q", par_q}};
            ParamReport rep = main_parameters(par_r, parse_rat(par_eps), par_q);
            json body{{"r", rep.r},
                      {"q", rep.q},
                      {"epsilon", rat_str(rep.epsilon)},
                      {"C", rep.C},
                      {"m", rep.m.get_str()},
                      {"beta", "2^" + std::to_string(rep.beta_log2)},
                      {"k", rep.k.get_str()},
                      {"alpha", rep.alpha},
                      {"d", rep.d},
                      {"final_bound", rep.final_bound},
                      {"vacuous", rep.vacuous},
                      {"checks",
                       json{{"m_inequality", rep.m_inequality},
                            {"dk_product_lt_one", rep.dk_product_lt_one},
                            {"exponent_chain", rep.exponent_chain},
                            {"final_bound_ok", rep.final_bound_ok}}}};
            emit(make_artifact(std::move(body), config), par_out);
        } else if (*pip) {
            json config{{"cmd", "pipeline"}, {"q", pip_q}, {"strategy", pip_strategy},
                        {"k", pip_k}, {"m", pip_m}};
            Hypergraph g = graph_from_json(read_json_file(pip_graph));
            PipelineOptions opt;
            opt.k = pip_k;
            opt.m = pip_m;
            opt.budget = budgets.materialize;
            opt.max_pivots = budgets.pivots;
            opt.max_cols = budgets.columns;
            PipelineReport rep = pipeline(g, pip_q, pip_strategy, opt);
            json stages = json::array();
            for (const auto& s : rep.stages)
                stages.push_back(json{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
            json body{{"strategy", rep.strategy}, {"stages", stages}, {"success", rep.success}};
            if (rep.success && !pip_packing_out.empty())
                emit(make_artifact(json{{"packing", packing_to_json(*rep.packing)}}, config),
                     pip_packing_out);
            emit(make_artifact(std::move(body), config), pip_out);
            if (!rep.success) return kExitPrecondition;
        } else if (*ver) {
            json config{{"cmd", "verify"}, {"eta", ver_eta}};
            json pj = read_json_file(ver_packing);
            if (pj.contains("packing")) pj = pj.at("packing");
            if (!ver_graph.empty()) pj["host"] = read_json_file(ver_graph);
            PackingView p = packing_from_json(pj);
            BoundaryReport rep = validate(p, parse_rat(ver_eta));
            emit(make_artifact(boundary_report_json(rep), config), ver_out);
            if (!rep.pass) return kExitPrecondition;
        }
    } catch (const std::length_error& ex) {
        std::cerr << "error (budget): " << ex.what() << "\n";
        return kExitBudget;
    } catch (const std::domain_error& ex) {
        std::cerr << "error (precondition): " << ex.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}
