#include "happy/transforms.hpp"

#include <algorithm>
#include <set>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

bool unit_weights(const Instance& inst) {
    return std::all_of(inst.edge_weight.begin(), inst.edge_weight.end(), [](Weight w) { return w == 1; });
}

void require_mhe(const Instance& inst, const char* what) {
    require_valid(inst);
    if (inst.problem != Problem::edges) {
        throw ContractError(std::string(what) + " takes an MHE instance");
    }
}

void require_unit(const Instance& inst, const char* what) {
    if (!unit_weights(inst)) {
        throw ContractError(std::string(what) + " needs unit edge weights");
    }
}

void require_two_colors(const Instance& inst, const char* what) {
    std::set<Color> used;
    for (Color c : inst.precolor) {
        if (c != kUncolored) {
            used.insert(c);
        }
    }
    if (used.size() < 2) {
        throw ContractError(std::string(what) + " needs at least two distinct precolors");
    }
}

// Original vertices first, then one free vertex per edge adjacent to its endpoints.
Instance edge_vertex_graph(const Instance& inst, bool with_clique, int extra) {
    const int n = inst.n();
    const int m = inst.m();
    InstanceBuilder b(Problem::vertices, n + m + extra, inst.k);
    b.weighted(!unit_weights(inst));
    for (Vertex v = 0; v < n; ++v) {
        if (inst.is_precolored(v)) {
            b.color(v, inst.color_of(v));
        }
    }
    if (with_clique) {
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                b.edge(u, v);
            }
        }
    }
    for (int e = 0; e < m; ++e) {
        const auto& edge = inst.graph.edges()[idx(e)];
        b.edge(edge.u, n + e).edge(edge.v, n + e);
        b.vertex_weight(n + e, inst.edge_weight[idx(e)]);
    }
    return b.build();
}

}  // namespace

Solution solve_complete_mhv(const Instance& inst) {
    require_valid(inst);
    if (inst.problem != Problem::vertices || !is_complete(inst.graph)) {
        throw ContractError("the complete-graph MHV solver needs MHV on a complete graph");
    }
    std::set<Color> used;
    for (Color c : inst.precolor) {
        if (c != kUncolored) {
            used.insert(c);
        }
    }
    Solution s;
    s.algorithm = "complete-mhv";
    s.coloring = complete_with(inst, used.empty() ? 1 : *used.begin());
    s.happy_weight = used.size() <= 1 ? inst.total_vertex_weight() : 0;
    return s;
}

bool precolored_dominate_free(const Instance& inst) {
    std::vector<Vertex> colored;
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (inst.is_precolored(v)) {
            colored.push_back(v);
        }
    }
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (inst.is_precolored(v)) {
            continue;
        }
        for (Vertex u : colored) {
            if (!inst.graph.adjacent(u, v)) {
                return false;
            }
        }
    }
    return true;
}

Solution solve_complete_mhe(const Instance& inst) {
    require_mhe(inst, "the complete-graph MHE solver");
    require_unit(inst, "the complete-graph MHE solver");
    if (!precolored_dominate_free(inst)) {
        throw ContractError("the complete-graph MHE solver needs every precolored vertex adjacent to every free one");
    }
    std::vector<int> count(idx(inst.k) + 1, 0);
    for (Color c : inst.precolor) {
        ++count[idx(c)];
    }
    Color plurality = 1;
    for (Color c = 2; c <= inst.k; ++c) {
        if (count[idx(c)] > count[idx(plurality)]) {
            plurality = c;
        }
    }
    Solution s;
    s.algorithm = "complete-mhe";
    s.coloring = complete_with(inst, plurality);
    s.happy_weight = happy_weight_unchecked(inst, s.coloring);
    return s;
}

Instance to_split_mhv(const Instance& inst) {
    require_mhe(inst, "to_split_mhv");
    require_two_colors(inst, "to_split_mhv");
    return edge_vertex_graph(inst, true, 0);
}

Instance to_bipartite_mhv(const Instance& inst) {
    require_mhe(inst, "to_bipartite_mhv");
    if (inst.k < 3) {
        throw ContractError("to_bipartite_mhv needs k >= 3");
    }
    require_two_colors(inst, "to_bipartite_mhv");
    const int n = inst.n();
    const int m = inst.m();
    Instance base = edge_vertex_graph(inst, false, 3 * n);
    InstanceBuilder b(Problem::vertices, n + m + 3 * n, inst.k);
    b.weighted(base.weighted);
    for (Vertex v = 0; v < base.n(); ++v) {
        if (base.is_precolored(v)) {
            b.color(v, base.color_of(v));
        }
        b.vertex_weight(v, base.vertex_weight[idx(v)]);
    }
    for (const auto& e : base.graph.edges()) {
        b.edge(e.u, e.v);
    }
    for (Vertex x = 0; x < n; ++x) {
        Vertex a = n + m + 3 * x;
        b.color(a, 1).color(a + 1, 2).color(a + 2, 3);
        b.edge(x, a).edge(a, a + 1).edge(a + 1, a + 2).edge(a + 2, x);
    }
    return b.build();
}

Instance subdivide_mhe(const Instance& inst) {
    require_mhe(inst, "subdivide_mhe");
    require_unit(inst, "subdivide_mhe");
    const int n = inst.n();
    InstanceBuilder b(Problem::edges, n + inst.m(), inst.k);
    for (Vertex v = 0; v < n; ++v) {
        if (inst.is_precolored(v)) {
            b.color(v, inst.color_of(v));
        }
    }
    for (int e = 0; e < inst.m(); ++e) {
        const auto& edge = inst.graph.edges()[idx(e)];
        b.edge(edge.u, n + e).edge(n + e, edge.v);
    }
    return b.build();
}

WeightedComplete to_weighted_complete(const Instance& inst) {
    require_mhe(inst, "to_weighted_complete");
    require_unit(inst, "to_weighted_complete");
    const auto n = static_cast<Weight>(inst.n());
    WeightedComplete out;
    out.alpha = n * (n - 1) / 2 - inst.m() + 1;
    InstanceBuilder b(Problem::edges, inst.n(), inst.k);
    b.weighted();
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (inst.is_precolored(v)) {
            b.color(v, inst.color_of(v));
        }
        for (Vertex u = v + 1; u < inst.n(); ++u) {
            b.edge(v, u, inst.graph.adjacent(v, u) ? out.alpha : 1);
        }
    }
    out.instance = b.build();
    return out;
}

}  // namespace happy
