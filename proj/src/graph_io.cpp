#include "flipcover/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flipcover/error.hpp"

namespace flipcover {

using nlohmann::json;

graph read_edge_list(std::istream& in) {
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) fail(errc::format_error, "edge list header must be 'n m'");
    require(n >= 0 && m >= 0, errc::format_error, "negative counts in edge list header");
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) fail(errc::format_error, "edge list truncated at edge " + std::to_string(i));
        es.emplace_back(u, v);
    }
    return build_graph(n, es);
}

void write_edge_list(const graph& g, std::ostream& out) {
    auto es = g.edge_list();
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

graph read_graph_json(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(errc::format_error, std::string("bad JSON: ") + e.what());
    }
    require(j.is_object() && j.contains("n") && j.contains("edges"), errc::format_error,
            "graph JSON needs 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j.at("edges")) {
        require(e.is_array() && e.size() == 2, errc::format_error, "each edge must be a pair");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    graph g = build_graph(n, es);
    if (j.contains("layer")) {
        g.layer = j.at("layer").get<std::vector<int>>();
        require(static_cast<int>(g.layer.size()) == n, errc::format_error, "'layer' length != n");
    }
    if (j.contains("native")) {
        auto nat = j.at("native").get<std::vector<int>>();
        require(static_cast<int>(nat.size()) == n, errc::format_error, "'native' length != n");
        g.native.assign(nat.begin(), nat.end());
    }
    return g;
}

void write_graph_json(const graph& g, std::ostream& out) {
    json j;
    j["schema_version"] = 1;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (!g.layer.empty()) j["layer"] = g.layer;
    if (!g.native.empty()) j["native"] = std::vector<int>(g.native.begin(), g.native.end());
    out << j.dump(2) << '\n';
}

graph load_graph(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    require(in.good(), errc::format_error, "cannot open " + path);
    if (format == "edgelist") return read_edge_list(in);
    if (format == "json") return read_graph_json(in);
    fail(errc::bad_params, "unknown format '" + format + "'");
}

void save_graph(const graph& g, const std::string& path, const std::string& format) {
    std::ofstream out(path);
    require(out.good(), errc::format_error, "cannot open " + path + " for writing");
    if (format == "edgelist") {
        write_edge_list(g, out);
    } else if (format == "json") {
        write_graph_json(g, out);
    } else {
        fail(errc::bad_params, "unknown format '" + format + "'");
    }
}

} // namespace flipcover
