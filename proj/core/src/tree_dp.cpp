#include "happy/tree_dp.hpp"

#include <algorithm>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

struct RootedTree {
    std::vector<Vertex> preorder;
    std::vector<Vertex> parent;
    std::vector<int> parent_edge;
};

// Iterative DFS over free vertices starting at root. `parent` and `parent_edge`
// are indexed by vertex and must be sized n.
void root_component(const Instance& inst, Vertex root, RootedTree& tree) {
    tree.parent[idx(root)] = -1;
    tree.parent_edge[idx(root)] = -1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        tree.preorder.push_back(v);
        for (const auto& inc : inst.graph.incident(v)) {
            if (inst.is_precolored(inc.to) || inc.edge == tree.parent_edge[idx(v)]) {
                continue;
            }
            tree.parent[idx(inc.to)] = v;
            tree.parent_edge[idx(inc.to)] = inc.edge;
            stack.push_back(inc.to);
        }
    }
}

// Fills table rows for the vertices of one rooted component (post-order = reversed preorder).
void fill_rows(const Instance& inst, const RootedTree& tree, std::size_t begin, TreeDPTable& table) {
    for (std::size_t i = tree.preorder.size(); i-- > begin;) {
        Vertex v = tree.preorder[i];
        for (Color c = 1; c <= inst.k; ++c) {
            table.at(v, c) = 0;
        }
        for (const auto& inc : inst.graph.incident(v)) {
            if (inst.is_precolored(inc.to)) {
                table.at(v, inst.color_of(inc.to)) += inst.edge_weight[idx(inc.edge)];
            }
        }
    }
    // Descendants appear after their ancestors in preorder, so walking it backwards
    // completes each child's row before folding it into the parent.
    for (std::size_t i = tree.preorder.size(); i-- > begin;) {
        Vertex u = tree.preorder[i];
        Vertex p = tree.parent[idx(u)];
        if (p < 0) {
            continue;
        }
        Weight w = inst.edge_weight[idx(tree.parent_edge[idx(u)])];
        for (Color c = 1; c <= inst.k; ++c) {
            table.at(p, c) += std::max(w + table.at(u, c), table.best_excluding(u, c));
        }
    }
}

}  // namespace

Weight TreeDPTable::best(Vertex v) const {
    Weight out = kNone;
    for (Color c = 1; c <= k_; ++c) {
        out = std::max(out, at(v, c));
    }
    return out;
}

Weight TreeDPTable::best_excluding(Vertex v, Color i) const {
    Weight out = kNone;
    for (Color c = 1; c <= k_; ++c) {
        if (c != i) {
            out = std::max(out, at(v, c));
        }
    }
    return out;
}

ForestCheck uncolored_forest(const Instance& inst) {
    ForestCheck out;
    const int n = inst.n();
    // Label components by BFS, then bucket vertices in index order so each list comes out sorted.
    std::vector<int> label(idx(n), -1);
    std::vector<std::size_t> sizes;
    std::vector<Vertex> queue;
    queue.reserve(idx(n));
    for (Vertex s = 0; s < n; ++s) {
        if (inst.is_precolored(s) || label[idx(s)] >= 0) {
            continue;
        }
        const int id = static_cast<int>(sizes.size());
        queue.clear();
        queue.push_back(s);
        label[idx(s)] = id;
        long long inner_degree = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (const auto& inc : inst.graph.incident(queue[i])) {
                if (inst.is_precolored(inc.to)) {
                    continue;
                }
                ++inner_degree;
                if (label[idx(inc.to)] < 0) {
                    label[idx(inc.to)] = id;
                    queue.push_back(inc.to);
                }
            }
        }
        if (inner_degree / 2 != static_cast<long long>(queue.size()) - 1) {
            out.is_forest = false;
        }
        sizes.push_back(queue.size());
    }
    out.components.resize(sizes.size());
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        out.components[c].reserve(sizes[c]);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (label[idx(v)] >= 0) {
            out.components[idx(label[idx(v)])].push_back(v);
        }
    }
    return out;
}

TreeDPRun tree_dp_tables(const Instance& inst) {
    auto forest = uncolored_forest(inst);
    if (!forest.is_forest) {
        throw ContractError("free vertices contain a cycle; use another solver");
    }
    TreeDPRun run;
    run.table = TreeDPTable(inst.n(), inst.k);
    const auto& edges = inst.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (inst.is_precolored(e.u) && inst.is_precolored(e.v) && inst.color_of(e.u) == inst.color_of(e.v)) {
            run.precolored_weight += inst.edge_weight[i];
        }
    }
    RootedTree tree;
    tree.parent.assign(idx(inst.n()), -1);
    tree.parent_edge.assign(idx(inst.n()), -1);
    run.optimum = run.precolored_weight;
    for (const auto& comp : forest.components) {
        std::size_t begin = tree.preorder.size();
        root_component(inst, comp.front(), tree);
        fill_rows(inst, tree, begin, run.table);
        run.roots.push_back(comp.front());
        run.optimum += run.table.best(comp.front());
    }
    return run;
}

namespace detail {

namespace {

// One component laid out in preorder: slot 0 is the root, parents precede
// children, and rows hold k values per slot.
struct LocalTree {
    struct Pending {
        Vertex v;
        int parent;
        int edge;
    };
    std::vector<Vertex> vertex;
    std::vector<int> parent;
    std::vector<Weight> up_weight;
    std::vector<Weight> rows;
    std::vector<Pending> stack;

    Weight* row(std::size_t slot, std::size_t k) { return rows.data() + slot * k; }
};

// Single pass over the adjacency: preorder, parent links and precolored gains.
void load_component(const Instance& inst, Vertex root, LocalTree& t) {
    const auto k = idx(inst.k);
    t.vertex.clear();
    t.parent.clear();
    t.up_weight.clear();
    t.rows.clear();
    t.stack.assign(1, {root, -1, -1});
    while (!t.stack.empty()) {
        auto [v, parent, edge] = t.stack.back();
        t.stack.pop_back();
        const int slot = static_cast<int>(t.vertex.size());
        t.vertex.push_back(v);
        t.parent.push_back(parent);
        t.up_weight.push_back(edge < 0 ? 0 : inst.edge_weight[idx(edge)]);
        t.rows.resize(t.rows.size() + k, 0);
        Weight* row = t.row(idx(slot), k);
        for (const auto& inc : inst.graph.incident(v)) {
            if (inst.is_precolored(inc.to)) {
                row[idx(inst.color_of(inc.to) - 1)] += inst.edge_weight[idx(inc.edge)];
            } else if (inc.edge != edge) {
                t.stack.push_back({inc.to, slot, inc.edge});
            }
        }
    }
}

Weight best_excluding(const Weight* row, std::size_t k, std::size_t skip) {
    Weight out = TreeDPTable::kNone;
    for (std::size_t c = 0; c < k; ++c) {
        if (c != skip) {
            out = std::max(out, row[c]);
        }
    }
    return out;
}

std::size_t argmax_excluding(const Weight* row, std::size_t k, std::size_t skip) {
    std::size_t best = k;
    for (std::size_t c = 0; c < k; ++c) {
        if (c != skip && (best == k || row[c] > row[best])) {
            best = c;
        }
    }
    return best;
}

}  // namespace

std::vector<Weight> solve_tree_components(const Instance& inst, std::span<const std::vector<Vertex>> components,
                                          std::vector<Color>& coloring) {
    const auto k = idx(inst.k);
    LocalTree t;
    std::vector<Weight> values;
    values.reserve(components.size());
    std::vector<std::size_t> local_color;
    for (const auto& comp : components) {
        load_component(inst, *std::min_element(comp.begin(), comp.end()), t);
        const std::size_t size = t.vertex.size();
        for (std::size_t s = size; s-- > 1;) {
            const Weight* child = t.row(s, k);
            Weight* up = t.row(idx(t.parent[s]), k);
            for (std::size_t c = 0; c < k; ++c) {
                up[c] += std::max(t.up_weight[s] + child[c], best_excluding(child, k, c));
            }
        }
        const Weight* root = t.row(0, k);
        values.push_back(*std::max_element(root, root + k));
        // Top-down backtracking in preorder.
        local_color.resize(size);
        local_color[0] = argmax_excluding(root, k, k);
        for (std::size_t s = 1; s < size; ++s) {
            const Weight* row = t.row(s, k);
            const std::size_t pc = local_color[idx(t.parent[s])];
            bool follow = k == 1 || t.up_weight[s] + row[pc] >= best_excluding(row, k, pc);
            local_color[s] = follow ? pc : argmax_excluding(row, k, pc);
        }
        for (std::size_t s = 0; s < size; ++s) {
            coloring[idx(t.vertex[s])] = static_cast<Color>(local_color[s] + 1);
        }
    }
    return values;
}

}  // namespace detail

Solution solve_tree_mhe(const Instance& inst) {
    require_valid(inst);
    if (inst.problem != Problem::edges) {
        throw ContractError("the tree DP solves MHE only");
    }
    auto forest = uncolored_forest(inst);
    if (!forest.is_forest) {
        throw ContractError("free vertices contain a cycle; use another solver");
    }
    Solution s;
    s.coloring = inst.precolor;
    Weight total = 0;
    for (std::size_t i = 0; i < inst.graph.edges().size(); ++i) {
        const auto& e = inst.graph.edges()[i];
        if (inst.is_precolored(e.u) && inst.is_precolored(e.v) && inst.color_of(e.u) == inst.color_of(e.v)) {
            total += inst.edge_weight[i];
        }
    }
    for (Weight value : detail::solve_tree_components(inst, forest.components, s.coloring)) {
        total += value;
    }
    s.happy_weight = total;
    s.algorithm = "tree-dp";
    return s;
}

}  // namespace happy
