#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracdec/compose.hpp"
#include "fracdec/driver.hpp"
#include "fracdec/lp.hpp"
#include "fracdec/matching_decomp.hpp"
#include "fracdec/sampling.hpp"
#include "fracdec/symmetric_decomp.hpp"

namespace py = pybind11;
using namespace fracdec;

namespace {

// Rationals cross the boundary as "p/q" strings to stay exact.
py::list entries_out(const std::vector<SupportEntry>& entries) {
    py::list out;
    for (const auto& en : entries)
        out.append(py::make_tuple(en.vertices, rat_str(en.weight), en.tag));
    return out;
}

py::dict report_out(const BoundaryReport& rep) {
    py::dict d;
    d["min_boundary"] = rat_str(rep.min_boundary);
    d["max_boundary"] = rat_str(rep.max_boundary);
    d["eta"] = rat_str(rep.eta);
    d["pass"] = rep.pass;
    return d;
}

Matching matching_in(const std::vector<VertexSet>& edges) { return Matching{edges}; }

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact fractional clique decompositions of uniform hypergraphs";

    py::class_<Hypergraph>(mod, "Hypergraph")
        .def(py::init<int, int, const std::vector<VertexSet>&>(), py::arg("n"), py::arg("r"),
             py::arg("edges"))
        .def_static("complete", &Hypergraph::complete)
        .def_static("complete_minus_edge", &Hypergraph::complete_minus_edge)
        .def_static("complete_minus_matching",
                    [](int n, int r, const std::vector<VertexSet>& m) {
                        return Hypergraph::complete_minus_matching(n, r, matching_in(m));
                    })
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("r", &Hypergraph::r)
        .def("edge_count", &Hypergraph::edge_count)
        .def("edges",
             [](const Hypergraph& g) {
                 std::vector<VertexSet> out;
                 for (std::uint64_t rk : g.edge_ranks()) out.push_back(g.edge_vertices(rk));
                 return out;
             })
        .def("has_edge", &Hypergraph::has_edge)
        .def("complement", &Hypergraph::complement)
        .def("induced", &Hypergraph::induced)
        .def("link_graph", &Hypergraph::link_graph)
        .def("codegree_min", &Hypergraph::codegree_min)
        .def("vertex_degree_max", &Hypergraph::vertex_degree_max)
        .def("is_divisible", &Hypergraph::is_divisible)
        .def("enumerate_cliques", &Hypergraph::enumerate_cliques);

    py::class_<PackingView>(mod, "Packing")
        .def("entries", [](const PackingView& p) { return entries_out(p.materialize().entries()); })
        .def("boundary",
             [](const PackingView& p, const VertexSet& e) { return rat_str(p.boundary(e)); })
        .def("validate",
             [](const PackingView& p, const std::string& eta) {
                 return report_out(validate(p, parse_rat(eta)));
             },
             py::arg("eta") = "0");

    mod.def("colex_rank", [](const VertexSet& s) { return colex_rank(s); });
    mod.def("colex_unrank", &colex_unrank);

    mod.def("solve_weights", [](int q, int r) {
        std::vector<std::string> out;
        for (const Rat& w : solve_weights(q, r)) out.push_back(rat_str(w));
        return out;
    });
    mod.def("build_matrix", [](int q, int r) { return build_matrix(q, r).a; });
    mod.def("complete_symmetric", &complete_symmetric);
    mod.def("missing_edge_packing", &missing_edge_packing);

    mod.def("fix_packing", [](const std::map<std::uint64_t, std::string>& targets, int q, int r) {
        std::map<std::uint64_t, Rat> t;
        for (const auto& [k, v] : targets) t[k] = parse_rat(v);
        return fix_packing(t, q, r);
    });
    mod.def("almost_to_full", &almost_to_full);

    mod.def("quasi_independent_distribution", [](int r, const std::string& p) {
        std::vector<std::string> out;
        for (const Rat& v : quasi_independent_distribution(r, parse_rat(p)).by_size)
            out.push_back(rat_str(v));
        return out;
    });
    mod.def("deficiency_exact",
            [](int n, int r, int q, const std::vector<VertexSet>& m, const std::string& p,
               const VertexSet& e) {
                return rat_str(deficiency_exact(n, r, q, matching_in(m), parse_rat(p), e));
            });
    mod.def("decompose_minus_matching",
            [](int n, int r, int q, const std::vector<VertexSet>& m) {
                DecompositionResult res = decompose_minus_matching(n, r, q, matching_in(m));
                if (!res.packing) throw std::runtime_error(res.error);
                return *res.packing;
            });

    mod.def("family_deficiency_exact",
            [](const Hypergraph& g, int k, long m, const VertexSet& f) {
                return rat_str(family_deficiency_exact(g, k, m, f));
            });
    mod.def("uniform_family_packing",
            [](const Hypergraph& g, int k, long m) { return uniform_family_packing(g, k, m); });

    mod.def("lp_feasible", [](const Hypergraph& g, int q) {
        SolveResult res = feasible(build_feasibility_lp(g, q));
        switch (res.status) {
            case SolveResult::Status::feasible: return "feasible";
            case SolveResult::Status::infeasible: return "infeasible";
            default: return "budget-exceeded";
        }
    });

    mod.def("main_parameters", [](int r, const std::string& eps, int q) {
        ParamReport rep = main_parameters(r, parse_rat(eps), q);
        py::dict d;
        d["C"] = rep.C;
        d["m"] = rep.m.get_str();
        d["beta_log2"] = rep.beta_log2;
        d["k"] = rep.k.get_str();
        d["vacuous"] = rep.vacuous;
        d["m_inequality"] = rep.m_inequality;
        d["dk_product_lt_one"] = rep.dk_product_lt_one;
        d["exponent_chain"] = rep.exponent_chain;
        d["final_bound_ok"] = rep.final_bound_ok;
        return d;
    });

    mod.def("pipeline", [](const Hypergraph& g, int q, const std::string& strategy, long k, long m) {
        PipelineOptions opt;
        opt.k = k;
        opt.m = m;
        PipelineReport rep = pipeline(g, q, strategy, opt);
        py::dict d;
        d["success"] = rep.success;
        py::list stages;
        for (const auto& s : rep.stages) {
            py::dict sd;
            sd["name"] = s.name;
            sd["ok"] = s.ok;
            sd["detail"] = s.detail;
            stages.append(sd);
        }
        d["stages"] = stages;
        if (rep.packing) d["packing"] = py::cast(*rep.packing);
        return d;
    });
}
