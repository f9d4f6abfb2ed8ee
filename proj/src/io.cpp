#include "fracdec/io.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

namespace fracdec {

using nlohmann::json;

namespace {

VertexSet vertex_set_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a vertex array");
    VertexSet out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

std::vector<VertexSet> edge_list_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an edge array");
    std::vector<VertexSet> out;
    for (const auto& e : j) out.push_back(vertex_set_from_json(e));
    return out;
}

}  // namespace

json graph_to_json(const Hypergraph& g) {
    json edges = json::array();
    for (std::uint64_t rk : g.edge_ranks()) edges.push_back(g.edge_vertices(rk));
    return json{{"n", g.n()}, {"r", g.r()}, {"edges", edges}};
}

Hypergraph graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph: expected an object");
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    if (j.contains("gen")) {
        const std::string gen = j.at("gen").get<std::string>();
        if (gen == "complete") return Hypergraph::complete(n, r);
        if (gen == "complete_minus_edge")
            return Hypergraph::complete_minus_edge(n, r, vertex_set_from_json(j.at("edge")));
        if (gen == "complete_minus_matching")
            return Hypergraph::complete_minus_matching(n, r,
                                                       Matching{edge_list_from_json(j.at("matching"))});
        if (gen == "complete_minus_matchings") {
            std::vector<Matching> ms;
            for (const auto& m : j.at("matchings")) ms.push_back(Matching{edge_list_from_json(m)});
            return Hypergraph::complete_minus_matchings(n, r, ms);
        }
        throw std::invalid_argument("graph: unknown generator '" + gen + "'");
    }
    return Hypergraph(n, r, edge_list_from_json(j.at("edges")));
}

Matching matching_from_json(const json& j) {
    if (j.is_array()) return Matching{edge_list_from_json(j)};
    return Matching{edge_list_from_json(j.at("edges"))};
}

json matching_to_json(const Matching& m) {
    json edges = json::array();
    for (const auto& e : m.edges) edges.push_back(e);
    return json{{"edges", edges}};
}

json packing_to_json(const PackingView& p) {
    const PackingView pe = p.is_explicit() ? p : p.materialize();
    json entries = json::array();
    for (const auto& en : pe.entries()) {
        json e{{"vertices", en.vertices}, {"weight", rat_str(en.weight)}};
        if (!en.tag.empty()) e["tag"] = en.tag;
        entries.push_back(std::move(e));
    }
    return json{{"host", graph_to_json(p.host())}, {"entries", entries}};
}

PackingView packing_from_json(const json& j) {
    auto host = std::make_shared<Hypergraph>(graph_from_json(j.at("host")));
    std::vector<SupportEntry> entries;
    for (const auto& e : j.at("entries")) {
        SupportEntry en;
        en.vertices = canonical_vertex_set(vertex_set_from_json(e.at("vertices")), host->n());
        en.weight = parse_rat(e.at("weight").get<std::string>());
        if (e.contains("tag")) en.tag = e.at("tag").get<std::string>();
        entries.push_back(std::move(en));
    }
    return PackingView::make_explicit(std::move(host), std::move(entries));
}

std::string boundary_csv(const std::map<std::uint64_t, Rat>& per_edge) {
    std::ostringstream os;
    os << "edge_rank,numerator,denominator\n";
    for (const auto& [rk, v] : per_edge)
        os << rk << "," << v.get_num().get_str() << "," << v.get_den().get_str() << "\n";
    return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::string config_digest(const json& config) {
    // json object dump is key-sorted, i.e. canonical for our configs
    std::ostringstream os;
    os << std::hex << fnv1a(config.dump());
    return os.str();
}

json make_artifact(json body, const json& config, std::optional<std::uint64_t> seed,
                   const std::string& generator) {
    json meta{{"tool", kToolVersion}, {"config_digest", config_digest(config)}};
    if (seed) meta["seed"] = *seed;
    if (!generator.empty()) meta["generator"] = generator;
    body["meta"] = std::move(meta);
    return body;
}

}  // namespace fracdec
