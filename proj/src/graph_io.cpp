#include "pgaut/graph_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pgaut {

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "dot") return GraphFormat::dot;
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "json") return GraphFormat::json;
    throw std::invalid_argument("unknown graph format: " + name);
}

std::string format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::edgelist: return "edgelist";
        case GraphFormat::dot: return "dot";
        case GraphFormat::dimacs: return "dimacs";
        case GraphFormat::json: return "json";
    }
    return "?";
}

namespace {

template <typename Fn>
void for_each_edge(const Graph& g, Fn&& fn) {
    for (int u = 0; u < g.vertex_count(); ++u)
        g.row(u).for_each_set([&](std::size_t v) {
            if (int(v) > u) fn(u, int(v));
        });
}

}  // namespace

std::string export_graph(const PowerGraph& g, GraphFormat format) {
    std::ostringstream out;
    switch (format) {
        case GraphFormat::edgelist:
            for_each_edge(g.graph,
                          [&](int u, int v) { out << u << ' ' << v << '\n'; });
            break;
        case GraphFormat::dimacs:
            out << "p edge " << g.graph.vertex_count() << ' '
                << g.graph.edge_count() << '\n';
            for_each_edge(g.graph, [&](int u, int v) {
                out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
            });
            break;
        case GraphFormat::dot: {
            out << "graph powergraph {\n";
            for (int v = 0; v < g.graph.vertex_count(); ++v)
                if (g.graph.degree(v) == 0) out << "  " << v << ";\n";
            for_each_edge(g.graph, [&](int u, int v) {
                out << "  " << u << " -- " << v << ";\n";
            });
            out << "}\n";
            break;
        }
        case GraphFormat::json: {
            nlohmann::json j;
            j["n"] = g.n;
            j["orders"] = g.orders;
            auto edges = nlohmann::json::array();
            for_each_edge(g.graph, [&](int u, int v) {
                edges.push_back({u, v});
            });
            j["edges"] = std::move(edges);
            out << j.dump() << '\n';
            break;
        }
    }
    return out.str();
}

namespace {

Graph import_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int max_v = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("edgelist: bad line: " + line);
        if (u < 0 || v < 0 || u == v)
            throw std::invalid_argument("edgelist: bad edge: " + line);
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    return Graph::from_edges(max_v + 1, edges);
}

Graph import_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            long m;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "edges" &&
                                            kind != "col"))
                throw std::invalid_argument("dimacs: bad problem line: " + line);
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v))
                throw std::invalid_argument("dimacs: bad edge line: " + line);
            if (n < 0)
                throw std::invalid_argument("dimacs: edge before problem line");
            if (u < 1 || v < 1 || u > n || v > n || u == v)
                throw std::invalid_argument("dimacs: edge out of range: " + line);
            edges.emplace_back(u - 1, v - 1);
        }
    }
    if (n < 0) throw std::invalid_argument("dimacs: missing problem line");
    return Graph::from_edges(n, edges);
}

Graph import_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json graph: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("json graph: need fields n and edges");
    const int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("json graph: negative n");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("json graph: edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("json graph: edge out of range");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph import_graph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edgelist: return import_edgelist(text);
        case GraphFormat::dimacs: return import_dimacs(text);
        case GraphFormat::json: return import_json(text);
        case GraphFormat::dot:
            throw std::invalid_argument("dot is an export-only format");
    }
    throw std::invalid_argument("bad format");
}

}  // namespace pgaut
