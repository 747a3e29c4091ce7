// JSON schemas for graphs and star algebras, and DOT export.
//
// Graph JSON:        {"r": int, "s": int, "edges": [[i, j], ...]}   (1-based)
// Star algebra JSON: {"r": int, "s": int, "relations": [[i, j], ...]}
#pragma once

#include "starquiver/graph.hpp"
#include "starquiver/star_algebra.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>

namespace starquiver {

using nlohmann::json;

inline json graph_to_json(const BipartiteGraph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
    return json{{"r", g.r()}, {"s", g.s()}, {"edges", edges}};
}

inline BipartiteGraph graph_from_json(const json& j) {
    if (!j.contains("r") || !j.contains("s") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON: expected keys r, s, edges");
    const auto r = j.at("r").get<long>();
    const auto s = j.at("s").get<long>();
    if (r < 1 || s < 1) throw std::invalid_argument("graph JSON: r, s must be positive");
    BipartiteGraph g(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON: edges must be [i, j] pairs");
        const long i = e[0].get<long>(), jj = e[1].get<long>();
        if (i < 1 || i > r || jj < 1 || jj > s)
            throw std::invalid_argument("graph JSON: edge index out of range");
        g.add_edge(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(jj) - 1);
    }
    return g;
}

inline json star_to_json(const StarAlgebra& lam) {
    json rels = json::array();
    for (const auto& [i, j] : lam.relations()) rels.push_back({i, j});
    return json{{"r", lam.r()}, {"s", lam.s()}, {"relations", rels}};
}

inline StarAlgebra star_from_json(const json& j) {
    if (!j.contains("r") || !j.contains("s") || !j.contains("relations"))
        throw std::invalid_argument("star algebra JSON: expected keys r, s, relations");
    const auto r = j.at("r").get<long>();
    const auto s = j.at("s").get<long>();
    if (r < 1 || s < 1) throw std::invalid_argument("star algebra JSON: r, s must be positive");
    std::set<std::pair<int, int>> rels;
    for (const auto& e : j.at("relations")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("star algebra JSON: relations must be [i, j] pairs");
        const long i = e[0].get<long>(), jj = e[1].get<long>();
        if (i < 1 || i > r || jj < 1 || jj > s)
            throw std::invalid_argument("star algebra JSON: relation index out of range");
        rels.insert({static_cast<int>(i), static_cast<int>(jj)});
    }
    return StarAlgebra(static_cast<std::size_t>(r), static_cast<std::size_t>(s), std::move(rels));
}

/// DOT export with X-vertices boxed and Y-vertices circled.
inline std::string graph_to_dot(const BipartiteGraph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 1; i <= g.r(); ++i)
        os << "  x" << i << " [shape=box];\n";
    for (std::size_t j = 1; j <= g.s(); ++j)
        os << "  y" << j << " [shape=circle];\n";
    for (const auto& [i, j] : g.edges()) os << "  x" << i << " -- y" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace starquiver
