// Quivers, level functions and one-point extensions.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starquiver {

struct Arrow {
    int source;
    int target;
    std::string label;
};

/// A finite quiver with named vertices. Loops are rejected; every
/// construction in this library lives on acyclic quivers.
class Quiver {
   public:
    int add_vertex(std::string name) {
        vertices_.push_back(std::move(name));
        return static_cast<int>(vertices_.size()) - 1;
    }

    void add_arrow(int source, int target, std::string label) {
        if (source < 0 || target < 0 || source >= vertex_count() || target >= vertex_count())
            throw std::invalid_argument("Quiver: arrow endpoint out of range");
        if (source == target) throw std::invalid_argument("Quiver: loops are not supported");
        arrows_.push_back({source, target, std::move(label)});
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_.at(v); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& name) const {
        for (int v = 0; v < vertex_count(); ++v)
            if (vertices_[v] == name) return v;
        throw std::out_of_range("Quiver: no vertex named " + name);
    }

    bool is_connected() const {
        if (vertices_.empty()) return true;
        std::vector<char> seen(vertices_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& a : arrows_) {
                int other = -1;
                if (a.source == v) other = a.target;
                else if (a.target == v) other = a.source;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    ++count;
                    stack.push_back(other);
                }
            }
        }
        return count == vertex_count();
    }

    bool is_acyclic() const {
        std::vector<int> indeg(vertices_.size(), 0);
        for (const auto& a : arrows_) ++indeg[a.target];
        std::vector<int> queue;
        for (int v = 0; v < vertex_count(); ++v)
            if (!indeg[v]) queue.push_back(v);
        int removed = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++removed;
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) queue.push_back(a.target);
        }
        return removed == vertex_count();
    }

   private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// A surjective level function onto {0, ..., n} dropping by one along arrows.
struct LevelMap {
    std::vector<int> level;  // per vertex
    int top;                 // n

    std::vector<int> level_sizes() const {
        std::vector<int> sizes(top + 1, 0);
        for (int l : level) ++sizes[l];
        return sizes;
    }
};

/// The unique level map with minimum level 0, when one exists.
/// Throws on disconnected input; returns nullopt when the quiver cannot be
/// levelled (e.g. it has a cycle or incompatible path lengths).
inline std::optional<LevelMap> compute_levels(const Quiver& q) {
    if (!q.is_connected()) throw std::invalid_argument("compute_levels: quiver is disconnected");
    const int n = q.vertex_count();
    std::vector<int> level(n, 0);
    std::vector<char> assigned(n, 0);
    // propagate level(source) = level(target) + 1 over the underlying graph
    std::vector<int> stack{0};
    assigned[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& a : q.arrows()) {
            int other;
            int expected;
            if (a.source == v) {
                other = a.target;
                expected = level[v] - 1;
            } else if (a.target == v) {
                other = a.source;
                expected = level[v] + 1;
            } else {
                continue;
            }
            if (!assigned[other]) {
                assigned[other] = 1;
                level[other] = expected;
                stack.push_back(other);
            } else if (level[other] != expected) {
                return std::nullopt;
            }
        }
    }
    int lo = level[0], hi = level[0];
    for (int v = 0; v < n; ++v) {
        lo = std::min(lo, level[v]);
        hi = std::max(hi, level[v]);
    }
    for (int v = 0; v < n; ++v) level[v] -= lo;
    const int top = hi - lo;
    std::vector<char> occupied(top + 1, 0);
    for (int v = 0; v < n; ++v) occupied[level[v]] = 1;
    for (int l = 0; l <= top; ++l)
        if (!occupied[l]) return std::nullopt;  // not surjective onto {0..top}
    return LevelMap{std::move(level), top};
}

/// Adjoins a vertex omega with topdims(v) arrows omega -> v per vertex.
inline Quiver one_point_extension_quiver(const Quiver& q, const std::vector<int>& topdims,
                                         const std::string& omega_name = "w") {
    if (static_cast<int>(topdims.size()) != q.vertex_count())
        throw std::invalid_argument("one_point_extension_quiver: topdims size mismatch");
    Quiver ext = q;
    int omega = ext.add_vertex(omega_name);
    for (int v = 0; v < q.vertex_count(); ++v)
        for (int m = 0; m < topdims[v]; ++m) {
            std::string label = "e_" + q.vertex_name(v);
            if (topdims[v] > 1) label += "_" + std::to_string(m + 1);
            ext.add_arrow(omega, v, std::move(label));
        }
    return ext;
}

}  // namespace starquiver
