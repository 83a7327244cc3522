#pragma once

#include "happy/model.hpp"

#include <limits>
#include <vector>

namespace happy {

struct ForestCheck {
    bool is_forest = true;
    /// Components of the subgraph induced by the free vertices, each sorted,
    /// ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components;
};

/// Whether the free vertices induce a forest; components are returned either way.
ForestCheck uncolored_forest(const Instance& inst);

/// Per free vertex v and color i, the best happy weight of edges touching the
/// subtree rooted at v when v gets color i.
class TreeDPTable {
public:
    static constexpr Weight kNone = std::numeric_limits<Weight>::min() / 4;

    TreeDPTable() = default;
    TreeDPTable(int n, int k) : k_(k), values_(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0) {}

    int colors() const { return k_; }
    Weight at(Vertex v, Color i) const { return values_[slot(v, i)]; }
    Weight& at(Vertex v, Color i) { return values_[slot(v, i)]; }
    /// max over all colors.
    Weight best(Vertex v) const;
    /// max over colors other than i; kNone when k = 1.
    Weight best_excluding(Vertex v, Color i) const;

private:
    std::size_t slot(Vertex v, Color i) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(i - 1);
    }

    int k_ = 0;
    std::vector<Weight> values_;
};

struct TreeDPRun {
    TreeDPTable table;
    /// Happy weight among precolored-precolored edges.
    Weight precolored_weight = 0;
    /// Root (smallest vertex) of each component.
    std::vector<Vertex> roots;
    Weight optimum = 0;
};

/// Bottom-up pass only. Requires a forest of free vertices.
TreeDPRun tree_dp_tables(const Instance& inst);

/// Exact Weighted k-MHE when the free vertices induce a forest, in O(k(n+m)).
/// Throws ContractError on MHV instances or when the free vertices contain a cycle.
Solution solve_tree_mhe(const Instance& inst);

namespace detail {

/// Solves tree components of free vertices and writes their colors into `coloring`.
/// Returns, per component, the happy weight of the edges touching it. No validation.
std::vector<Weight> solve_tree_components(const Instance& inst, std::span<const std::vector<Vertex>> components,
                                          std::vector<Color>& coloring);

}  // namespace detail

}  // namespace happy
