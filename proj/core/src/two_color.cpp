#include "happy/two_color.hpp"

#include "happy/flow.hpp"
#include "two_color_internal.hpp"

#include <algorithm>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

void require_two_colors(const Instance& inst, Problem expected) {
    require_valid(inst);
    if (inst.k != 2) {
        throw ContractError("two-color solver called with k = " + std::to_string(inst.k));
    }
    if (inst.problem != expected) {
        throw ContractError("two-color solver called on the wrong objective");
    }
}

// If at most one color is precolored, the monochromatic completion makes everything happy.
std::optional<Solution> monochromatic(const Instance& inst, const char* name) {
    bool has1 = false;
    bool has2 = false;
    for (Color c : inst.precolor) {
        has1 |= c == 1;
        has2 |= c == 2;
    }
    if (has1 && has2) {
        return std::nullopt;
    }
    Solution s;
    s.coloring = complete_with(inst, has2 ? 2 : 1);
    s.happy_weight = happy_weight_unchecked(inst, s.coloring);
    s.algorithm = name;
    return s;
}

// Adjacency of the graph whose edges join vertices at distance one or two.
std::vector<std::vector<Vertex>> distance_two_graph(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<Vertex>> out(idx(n));
    std::vector<int> mark(idx(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        mark[idx(v)] = v;
        for (const auto& a : g.incident(v)) {
            if (mark[idx(a.to)] != v) {
                mark[idx(a.to)] = v;
                out[idx(v)].push_back(a.to);
            }
            for (const auto& b : g.incident(a.to)) {
                if (mark[idx(b.to)] != v) {
                    mark[idx(b.to)] = v;
                    out[idx(v)].push_back(b.to);
                }
            }
        }
        std::sort(out[idx(v)].begin(), out[idx(v)].end());
    }
    return out;
}

}  // namespace

bool touches_bichromatic_edge(const Graph& g, std::span<const Color> coloring, Vertex v) {
    for (const auto& inc : g.incident(v)) {
        if (coloring[idx(inc.to)] != coloring[idx(v)]) {
            return true;
        }
    }
    return false;
}

namespace detail {

Solution two_color_mhe(const Instance& inst) {
    if (auto mono = monochromatic(inst, "flow2-mhe")) {
        return *mono;
    }
    // Node 0 is color 1 merged, node 1 is color 2 merged, free vertices follow.
    const int n = inst.n();
    std::vector<int> node(idx(n));
    int next = 2;
    for (Vertex v = 0; v < n; ++v) {
        Color c = inst.color_of(v);
        node[idx(v)] = c == 1 ? 0 : c == 2 ? 1 : next++;
    }
    FlowNetwork net(next);
    const auto& edges = inst.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int a = node[idx(edges[i].u)];
        int b = node[idx(edges[i].v)];
        if (a == b || (a < 2 && b < 2)) {
            continue;  // constant: always happy or always unhappy
        }
        net.add_edge(a, b, inst.edge_weight[i]);
    }
    auto cut = max_flow(net, 0, 1);

    Solution s;
    s.coloring = inst.precolor;
    for (Vertex v = 0; v < n; ++v) {
        if (!inst.is_precolored(v)) {
            s.coloring[idx(v)] = cut.source_side[idx(node[idx(v)])] ? 1 : 2;
        }
    }
    s.happy_weight = happy_weight_unchecked(inst, s.coloring);
    s.algorithm = "flow2-mhe";
    return s;
}

Solution two_color_mhv(const Instance& inst) {
    if (auto mono = monochromatic(inst, "flow2-mhv")) {
        return *mono;
    }
    const int n = inst.n();
    const Graph& g = inst.graph;
    // side[v] bit 0: v in N[S1], bit 1: v in N[S2].
    std::vector<int> side(idx(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        Color c = inst.color_of(v);
        if (c == kUncolored) {
            continue;
        }
        int bit = c == 1 ? 1 : 2;
        side[idx(v)] |= bit;
        for (const auto& inc : g.incident(v)) {
            side[idx(inc.to)] |= bit;
        }
    }

    // Node splitting: v_in = 2v, v_out = 2v + 1.
    const auto h2 = distance_two_graph(g);
    const int source = 2 * n;
    const int sink = 2 * n + 1;
    FlowNetwork net(2 * n + 2);
    for (Vertex v = 0; v < n; ++v) {
        net.add_arc(2 * v, 2 * v + 1, inst.vertex_weight[idx(v)]);
        for (Vertex u : h2[idx(v)]) {
            net.add_arc(2 * v + 1, 2 * u, kInfiniteCapacity);
        }
        if (side[idx(v)] & 1) {
            net.add_arc(source, 2 * v, kInfiniteCapacity);
        }
        if (side[idx(v)] & 2) {
            net.add_arc(2 * v + 1, sink, kInfiniteCapacity);
        }
    }
    auto cut = max_flow(net, source, sink);

    std::vector<bool> in_cut(idx(n), false);
    for (Vertex v = 0; v < n; ++v) {
        in_cut[idx(v)] = cut.source_side[idx(2 * v)] && !cut.source_side[idx(2 * v + 1)];
    }

    // Label components of H2 minus the cut by their forced side.
    std::vector<Color> label(idx(n), kUncolored);
    for (Vertex start = 0; start < n; ++start) {
        if (in_cut[idx(start)] || label[idx(start)] != kUncolored) {
            continue;
        }
        std::vector<Vertex> comp{start};
        label[idx(start)] = 1;
        int forced = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            Vertex v = comp[i];
            forced |= side[idx(v)];
            for (Vertex u : h2[idx(v)]) {
                if (!in_cut[idx(u)] && label[idx(u)] == kUncolored) {
                    label[idx(u)] = 1;
                    comp.push_back(u);
                }
            }
        }
        Color c = (forced & 2) ? 2 : 1;
        for (Vertex v : comp) {
            label[idx(v)] = c;
        }
    }

    Solution s;
    s.coloring.assign(idx(n), kUncolored);
    for (Vertex v = 0; v < n; ++v) {
        if (inst.is_precolored(v)) {
            s.coloring[idx(v)] = inst.color_of(v);
        } else if (!in_cut[idx(v)]) {
            s.coloring[idx(v)] = label[idx(v)];
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (s.coloring[idx(v)] != kUncolored) {
            continue;
        }
        Color c = 1;
        for (const auto& inc : g.incident(v)) {
            if (!in_cut[idx(inc.to)]) {
                c = label[idx(inc.to)];
                break;
            }
        }
        s.coloring[idx(v)] = c;
    }
    s.happy_weight = happy_weight_unchecked(inst, s.coloring);
    s.algorithm = "flow2-mhv";
    return s;
}

}  // namespace detail

Solution solve_mhe_2(const Instance& inst) {
    require_two_colors(inst, Problem::edges);
    return detail::two_color_mhe(inst);
}

Solution solve_mhv_2(const Instance& inst) {
    require_two_colors(inst, Problem::vertices);
    return detail::two_color_mhv(inst);
}

}  // namespace happy
