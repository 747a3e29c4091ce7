// The built-in catalog: the nine star algebras that drive the classification
// pipeline, with their graphs and classification metadata.
#pragma once

#include "starquiver/diophantine.hpp"
#include "starquiver/graph.hpp"
#include "starquiver/star_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace starquiver {

struct CatalogEntry {
    std::string name;          // graph name, e.g. "heawood"
    std::string algebra_name;  // star algebra name, e.g. "heawood" or "a3"
    StarAlgebra algebra;
    StarParameters parameters;  // (r, Sigma1, s, Sigma2) as used in the tables
    bool regular;               // B graph is regular (Sigma1 == Sigma2)
    /// In the regular/edge-transitive classification: the algebra is
    /// 2-representation-finite. The one catalog entry with classified ==
    /// false (Mobius-Kantor) passes every implemented filter but is excluded
    /// in the literature by a homological computation this library does not
    /// perform.
    bool classified;
};

namespace detail {

inline StarAlgebra make_star(std::size_t r, std::size_t s,
                             std::initializer_list<std::pair<int, int>> rels) {
    return StarAlgebra(r, s, std::set<std::pair<int, int>>(rels));
}

/// The Mobius-Kantor graph as the generalized Petersen graph GP(8,3), with
/// the bipartition X = even outer + odd inner, Y = odd outer + even inner.
inline BipartiteGraph mobius_kantor_graph() {
    // vertex ids: outer i -> i, inner i -> 8 + i
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) {
        edges.emplace_back(i, (i + 1) % 8);
        edges.emplace_back(i, 8 + i);
        edges.emplace_back(8 + i, 8 + (i + 3) % 8);
    }
    std::map<int, int> x_index, y_index;
    for (int i = 0; i < 8; i += 2) x_index[i] = static_cast<int>(x_index.size());
    for (int i = 1; i < 8; i += 2) x_index[8 + i] = static_cast<int>(x_index.size());
    for (int i = 1; i < 8; i += 2) y_index[i] = static_cast<int>(y_index.size());
    for (int i = 0; i < 8; i += 2) y_index[8 + i] = static_cast<int>(y_index.size());
    BipartiteGraph g(8, 8);
    for (auto [u, v] : edges) {
        if (!x_index.count(u)) std::swap(u, v);
        g.set_multiplicity(x_index.at(u), y_index.at(v), 1);
    }
    return g;
}

inline StarAlgebra star_of_graph(const BipartiteGraph& g) {
    std::set<std::pair<int, int>> rels;
    for (std::size_t i = 0; i < g.r(); ++i)
        for (std::size_t j = 0; j < g.s(); ++j)
            if (!g.multiplicity(i, j)) rels.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
    return StarAlgebra(g.r(), g.s(), std::move(rels));
}

}  // namespace detail

/// All nine catalog entries, keyed by graph name. Relation sets are
/// transcribed from the defining presentations of the algebras.
inline const std::vector<CatalogEntry>& catalog() {
    using detail::make_star;
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        out.push_back({"p2-complement", "a3", make_star(1, 1, {{1, 1}}),
                       {1, 1, 1, 1}, true, true});
        out.push_back({"c8", "c8",
                       make_star(4, 4,
                                 {{1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 2}, {4, 2}, {4, 3}}),
                       {4, 2, 4, 2}, true, true});
        out.push_back({"heawood", "heawood",
                       make_star(7, 7, {{1, 3}, {1, 4}, {1, 5}, {1, 7},
                                        {2, 1}, {2, 4}, {2, 5}, {2, 6},
                                        {3, 2}, {3, 5}, {3, 6}, {3, 7},
                                        {4, 1}, {4, 3}, {4, 6}, {4, 7},
                                        {5, 1}, {5, 2}, {5, 4}, {5, 7},
                                        {6, 1}, {6, 2}, {6, 3}, {6, 5},
                                        {7, 2}, {7, 3}, {7, 4}, {7, 6}}),
                       {7, 3, 7, 3}, true, true});
        out.push_back({"heawood-c", "heawood-c",
                       make_star(7, 7, {{1, 1}, {1, 2}, {1, 6},
                                        {2, 2}, {2, 3}, {2, 7},
                                        {3, 1}, {3, 3}, {3, 4},
                                        {4, 2}, {4, 4}, {4, 5},
                                        {5, 3}, {5, 5}, {5, 6},
                                        {6, 4}, {6, 6}, {6, 7},
                                        {7, 1}, {7, 5}, {7, 7}}),
                       {7, 4, 7, 4}, true, true});
        out.push_back({"g9p730", "g9p730",
                       make_star(6, 9, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 7}, {1, 9},
                                        {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                                        {3, 1}, {3, 4}, {3, 5}, {3, 6}, {3, 8}, {3, 9},
                                        {4, 1}, {4, 2}, {4, 5}, {4, 6}, {4, 7}, {4, 9},
                                        {5, 1}, {5, 2}, {5, 3}, {5, 6}, {5, 7}, {5, 8},
                                        {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 8}, {6, 9}}),
                       {6, 3, 9, 2}, false, true});
        out.push_back({"g9p730-c", "g9p730-c",
                       make_star(6, 9, {{1, 1}, {1, 6}, {1, 8},
                                        {2, 1}, {2, 2}, {2, 9},
                                        {3, 2}, {3, 3}, {3, 7},
                                        {4, 3}, {4, 4}, {4, 8},
                                        {5, 4}, {5, 5}, {5, 9},
                                        {6, 5}, {6, 6}, {6, 7}}),
                       {6, 6, 9, 4}, false, true});
        out.push_back({"g9p731", "g9p731",
                       make_star(5, 10, {{1, 2}, {1, 3}, {1, 4}, {1, 7}, {1, 8}, {1, 10},
                                         {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 8}, {2, 9},
                                         {3, 1}, {3, 4}, {3, 5}, {3, 7}, {3, 9}, {3, 10},
                                         {4, 1}, {4, 2}, {4, 5}, {4, 6}, {4, 8}, {4, 10},
                                         {5, 1}, {5, 2}, {5, 3}, {5, 6}, {5, 7}, {5, 9}}),
                       {5, 4, 10, 2}, false, true});
        out.push_back({"g9p731-c", "g9p731-c",
                       make_star(5, 10, {{1, 1}, {1, 5}, {1, 6}, {1, 9},
                                         {2, 1}, {2, 2}, {2, 7}, {2, 10},
                                         {3, 2}, {3, 3}, {3, 6}, {3, 8},
                                         {4, 3}, {4, 4}, {4, 7}, {4, 9},
                                         {5, 4}, {5, 5}, {5, 8}, {5, 10}}),
                       {5, 6, 10, 3}, false, true});
        out.push_back({"mobius-kantor", "mobius-kantor",
                       detail::star_of_graph(detail::mobius_kantor_graph()),
                       {8, 3, 8, 3}, true, false});
        return out;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name || e.algebra_name == name) return e;
    throw std::out_of_range("unknown fixture: " + name);
}

/// Named graph lookup; each graph is B of its catalog star algebra.
inline BipartiteGraph named_graph(const std::string& name) {
    return b_lambda(catalog_entry(name).algebra);
}

/// Named star algebra lookup (accepts "a3" for the (1,1) algebra).
inline StarAlgebra named_star_algebra(const std::string& name) {
    return catalog_entry(name).algebra;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
}

}  // namespace starquiver
