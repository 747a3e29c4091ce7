// Star algebras K S_(r,s) / I with quadratic monomial relations, and the
// bipartite quiver B encoding their non-relations.
#pragma once

#include "starquiver/graph.hpp"
#include "starquiver/quiver.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace starquiver {

/// The data of Lambda = K S_(r,s) / I: a relation (i, j) means the length-2
/// path a_i b_j is zero. Pairs are 1-based, matching the written form.
class StarAlgebra {
   public:
    StarAlgebra(std::size_t r, std::size_t s, std::set<std::pair<int, int>> relations = {})
        : r_(r), s_(s), relations_(std::move(relations)) {
        if (r < 1 || s < 1) throw std::invalid_argument("StarAlgebra: r, s must be positive");
        for (const auto& [i, j] : relations_)
            if (i < 1 || j < 1 || i > static_cast<int>(r) || j > static_cast<int>(s))
                throw std::invalid_argument("StarAlgebra: relation index out of range");
    }

    std::size_t r() const { return r_; }
    std::size_t s() const { return s_; }
    const std::set<std::pair<int, int>>& relations() const { return relations_; }
    bool is_relation(int i, int j) const { return relations_.count({i, j}) > 0; }

    bool operator==(const StarAlgebra& o) const {
        return r_ == o.r_ && s_ == o.s_ && relations_ == o.relations_;
    }

   private:
    std::size_t r_, s_;
    std::set<std::pair<int, int>> relations_;
};

/// The bipartite graph underlying B_Lambda: an edge y_j -- x_i whenever
/// a_i b_j is not a relation.
inline BipartiteGraph b_lambda(const StarAlgebra& lam) {
    BipartiteGraph g(lam.r(), lam.s());
    for (std::size_t i = 1; i <= lam.r(); ++i)
        for (std::size_t j = 1; j <= lam.s(); ++j)
            if (!lam.is_relation(static_cast<int>(i), static_cast<int>(j)))
                g.set_multiplicity(i - 1, j - 1, 1);
    return g;
}

struct ZeroSets {
    std::vector<std::vector<int>> at_x;  // Z(x_i): the j with a_i b_j in I
    std::vector<std::vector<int>> at_y;  // Z(y_j): the i with a_i b_j in I
};

inline ZeroSets zero_sets(const StarAlgebra& lam) {
    ZeroSets z;
    z.at_x.resize(lam.r());
    z.at_y.resize(lam.s());
    for (const auto& [i, j] : lam.relations()) {
        z.at_x[i - 1].push_back(j);
        z.at_y[j - 1].push_back(i);
    }
    return z;
}

/// Every arrow sits in at least one nonzero and at least one zero length-2
/// path: 1 <= |Z(x_i)| <= s-1 and 1 <= |Z(y_j)| <= r-1.
inline bool is_balanced(const StarAlgebra& lam) {
    const auto z = zero_sets(lam);
    for (const auto& zx : z.at_x)
        if (zx.empty() || zx.size() > lam.s() - 1) return false;
    for (const auto& zy : z.at_y)
        if (zy.empty() || zy.size() > lam.r() - 1) return false;
    return true;
}

/// Necessary shape for 2-representation-finiteness: either the (1,1) algebra
/// with its single relation, or r, s >= 4 with 2 <= |Z(x_i)| <= s-2 and
/// 2 <= |Z(y_j)| <= r-2 throughout.
inline bool is_2rf_shape(const StarAlgebra& lam) {
    if (lam.r() == 1 && lam.s() == 1) return lam.relations().size() == 1;
    if (lam.r() < 4 || lam.s() < 4) return false;
    const auto z = zero_sets(lam);
    for (const auto& zx : z.at_x)
        if (zx.size() < 2 || zx.size() > lam.s() - 2) return false;
    for (const auto& zy : z.at_y)
        if (zy.size() < 2 || zy.size() > lam.r() - 2) return false;
    return true;
}

/// Quadratic dual: swap the two arms and take the complementary transposed
/// relation set, so that B of the dual is the bipartite complement of B.
inline StarAlgebra koszul_dual_star(const StarAlgebra& lam) {
    std::set<std::pair<int, int>> dual_relations;
    for (int i = 1; i <= static_cast<int>(lam.r()); ++i)
        for (int j = 1; j <= static_cast<int>(lam.s()); ++j)
            if (!lam.is_relation(i, j)) dual_relations.insert({j, i});
    return StarAlgebra(lam.s(), lam.r(), std::move(dual_relations));
}

/// The star quiver S_(r,s): arrows a_i: x_i -> z and b_j: z -> y_j.
inline Quiver star_quiver(std::size_t r, std::size_t s) {
    Quiver q;
    for (std::size_t i = 1; i <= r; ++i) q.add_vertex("x" + std::to_string(i));
    int z = q.add_vertex("z");
    for (std::size_t j = 1; j <= s; ++j) q.add_vertex("y" + std::to_string(j));
    for (std::size_t i = 1; i <= r; ++i)
        q.add_arrow(static_cast<int>(i) - 1, z, "a" + std::to_string(i));
    for (std::size_t j = 1; j <= s; ++j)
        q.add_arrow(z, z + static_cast<int>(j), "b" + std::to_string(j));
    return q;
}

/// The quiver of B_Lambda: arrows beta_ji: y_j -> x_i for non-relations.
inline Quiver b_quiver(const StarAlgebra& lam) {
    Quiver q;
    for (std::size_t i = 1; i <= lam.r(); ++i) q.add_vertex("x" + std::to_string(i));
    for (std::size_t j = 1; j <= lam.s(); ++j) q.add_vertex("y" + std::to_string(j));
    for (int j = 1; j <= static_cast<int>(lam.s()); ++j)
        for (int i = 1; i <= static_cast<int>(lam.r()); ++i)
            if (!lam.is_relation(i, j))
                q.add_arrow(static_cast<int>(lam.r()) + j - 1, i - 1,
                            "B" + std::to_string(j) + "_" + std::to_string(i));
    return q;
}

}  // namespace starquiver
