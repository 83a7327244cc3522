#include "happy/diversity.hpp"

#include "happy/partition.hpp"

#include <algorithm>
#include <map>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

using Signature = std::vector<std::pair<Vertex, Weight>>;

// Splits a closed-twin group until members of each part agree on the weight toward
// every vertex outside their part. A nonempty precolor seeds the split by status.
template <class WeightOf>
std::vector<std::vector<Vertex>> refine(const Graph& g, const std::vector<Vertex>& members,
                                        std::span<const Color> precolor, const WeightOf& weight) {
    std::vector<std::vector<Vertex>> parts;
    if (precolor.empty()) {
        parts.push_back(members);
    } else {
        std::vector<Vertex> colored;
        std::vector<Vertex> free;
        for (Vertex v : members) {
            (precolor[idx(v)] != kUncolored ? colored : free).push_back(v);
        }
        for (auto* part : {&free, &colored}) {
            if (!part->empty()) {
                parts.push_back(std::move(*part));
            }
        }
    }
    std::vector<int> part_of(idx(g.order()), -1);
    while (true) {
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (Vertex v : parts[p]) {
                part_of[idx(v)] = static_cast<int>(p);
            }
        }
        std::map<std::pair<int, Signature>, std::vector<Vertex>> refined;
        for (Vertex v : members) {
            Signature sig;
            for (const auto& inc : g.incident(v)) {
                if (part_of[idx(inc.to)] != part_of[idx(v)]) {
                    sig.push_back({inc.to, weight(inc.edge)});
                }
            }
            refined[{part_of[idx(v)], sig}].push_back(v);
        }
        if (refined.size() == parts.size()) {
            return parts;
        }
        for (Vertex v : members) {
            part_of[idx(v)] = -1;
        }
        parts.clear();
        for (auto& entry : refined) {
            parts.push_back(std::move(entry.second));
        }
    }
}

TypePartition build_types(const Graph& g, std::span<const Color> precolor, const std::vector<Weight>* weights) {
    const int n = g.order();
    auto weight = [&](int edge) { return weights != nullptr ? (*weights)[idx(edge)] : Weight{1}; };

    std::vector<int> type(idx(n), -1);
    std::vector<bool> clique;
    // Open twins first: any class of two or more is independent.
    std::map<Signature, std::vector<Vertex>> open;
    for (Vertex v = 0; v < n; ++v) {
        Signature sig;
        for (const auto& inc : g.incident(v)) {
            sig.push_back({inc.to, weight(inc.edge)});
        }
        open[sig].push_back(v);
    }
    std::vector<Vertex> rest;
    for (const auto& [sig, members] : open) {
        if (members.size() < 2) {
            rest.push_back(members[0]);
            continue;
        }
        for (Vertex v : members) {
            type[idx(v)] = static_cast<int>(clique.size());
        }
        clique.push_back(false);
    }
    // Closed twins among the rest: equal N[v], then equal weights toward outside neighbors.
    std::map<std::vector<Vertex>, std::vector<Vertex>> closed;
    for (Vertex v : rest) {
        std::vector<Vertex> key{v};
        for (const auto& inc : g.incident(v)) {
            key.push_back(inc.to);
        }
        std::sort(key.begin(), key.end());
        closed[key].push_back(v);
    }
    int diversity = static_cast<int>(clique.size());
    for (const auto& [key, members] : closed) {
        if (weights == nullptr) {
            for (Vertex v : members) {
                type[idx(v)] = static_cast<int>(clique.size());
            }
            clique.push_back(true);
            ++diversity;
            continue;
        }
        // Weights toward the rest of the group can differ too, so refine until stable.
        // The split by precolored status has to come first: members on the other side
        // of the split count as outside vertices.
        diversity += static_cast<int>(refine(g, members, {}, weight).size());
        for (const auto& part : refine(g, members, precolor, weight)) {
            for (Vertex v : part) {
                type[idx(v)] = static_cast<int>(clique.size());
            }
            clique.push_back(true);
        }
    }

    TypePartition tp;
    tp.diversity = diversity;
    tp.class_of.assign(idx(n), -1);
    // Split by precolored status; number classes by smallest member.
    std::map<std::pair<int, bool>, int> slot;
    for (Vertex v = 0; v < n; ++v) {
        bool colored = precolor[idx(v)] != kUncolored;
        auto [it, fresh] = slot.try_emplace({type[idx(v)], colored}, static_cast<int>(tp.classes.size()));
        if (fresh) {
            tp.classes.push_back({{}, clique[idx(type[idx(v)])], colored});
        }
        tp.classes[idx(it->second)].members.push_back(v);
        tp.class_of[idx(v)] = it->second;
    }
    for (auto& c : tp.classes) {
        c.clique = c.clique || c.members.size() == 1;
    }
    return tp;
}

struct Grouping {
    std::vector<std::vector<Vertex>> groups;
    std::vector<int> group_of;
};

Grouping group_vertices(const Instance& inst, const TypePartition& tp) {
    if (static_cast<int>(tp.class_of.size()) != inst.n()) {
        throw ValidationError("type partition does not match the instance");
    }
    Grouping out;
    out.group_of.assign(idx(inst.n()), -1);
    for (const auto& cls : tp.classes) {
        std::map<Color, int> by_color;
        for (Vertex v : cls.members) {
            auto [it, fresh] = by_color.try_emplace(inst.color_of(v), static_cast<int>(out.groups.size()));
            if (fresh) {
                out.groups.emplace_back();
            }
            out.groups[idx(it->second)].push_back(v);
            out.group_of[idx(v)] = it->second;
        }
    }
    return out;
}

Instance shell(const Instance& inst, const Grouping& grouping) {
    Instance h;
    h.problem = inst.problem;
    h.k = inst.k;
    h.weighted = true;
    for (const auto& group : grouping.groups) {
        h.precolor.push_back(inst.color_of(group.front()));
        h.vertex_weight.push_back(1);
    }
    return h;
}

}  // namespace

TypePartition type_partition(const Graph& g, std::span<const Color> precolor) {
    return build_types(g, precolor, nullptr);
}

TypePartition type_partition(const Instance& inst) {
    return build_types(inst.graph, inst.precolor, inst.problem == Problem::edges ? &inst.edge_weight : nullptr);
}

NdReduction nd_reduce_mhe(const Instance& inst, const TypePartition& tp) {
    require_valid(inst);
    if (inst.problem != Problem::edges) {
        throw ContractError("nd_reduce_mhe needs an MHE instance");
    }
    auto grouping = group_vertices(inst, tp);
    NdReduction out;
    out.reduced = shell(inst, grouping);
    std::map<std::pair<int, int>, Weight> merged;
    const auto& edges = inst.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int a = grouping.group_of[idx(edges[e].u)];
        int b = grouping.group_of[idx(edges[e].v)];
        if (a == b) {
            out.constant += inst.edge_weight[e];
        } else {
            merged[{std::min(a, b), std::max(a, b)}] += inst.edge_weight[e];
        }
    }
    std::vector<Edge> h_edges;
    for (const auto& [key, w] : merged) {
        h_edges.push_back({key.first, key.second});
        out.reduced.edge_weight.push_back(w);
    }
    out.reduced.graph = Graph(static_cast<int>(grouping.groups.size()), std::move(h_edges));
    out.groups = std::move(grouping.groups);
    return out;
}

NdReduction nd_reduce_mhv(const Instance& inst, const TypePartition& tp) {
    require_valid(inst);
    if (inst.problem != Problem::vertices) {
        throw ContractError("nd_reduce_mhv needs an MHV instance");
    }
    auto grouping = group_vertices(inst, tp);
    NdReduction out;
    out.reduced = shell(inst, grouping);
    for (std::size_t h = 0; h < grouping.groups.size(); ++h) {
        Weight total = 0;
        for (Vertex v : grouping.groups[h]) {
            total += inst.vertex_weight[idx(v)];
        }
        out.reduced.vertex_weight[h] = total;
    }
    std::map<std::pair<int, int>, bool> merged;
    for (const auto& e : inst.graph.edges()) {
        int a = grouping.group_of[idx(e.u)];
        int b = grouping.group_of[idx(e.v)];
        if (a != b) {
            merged[{std::min(a, b), std::max(a, b)}] = true;
        }
    }
    std::vector<Edge> h_edges;
    for (const auto& entry : merged) {
        h_edges.push_back({entry.first.first, entry.first.second});
        out.reduced.edge_weight.push_back(1);
    }
    out.reduced.graph = Graph(static_cast<int>(grouping.groups.size()), std::move(h_edges));
    out.groups = std::move(grouping.groups);
    return out;
}

Solution solve_nd(const Instance& inst, const Limits& limits) {
    require_valid(inst);
    auto tp = type_partition(inst);
    auto red = inst.problem == Problem::edges ? nd_reduce_mhe(inst, tp) : nd_reduce_mhv(inst, tp);
    if (red.reduced.uncolored_count() > limits.max_ground_set) {
        throw CapExceeded("reduced instance has " + std::to_string(red.reduced.uncolored_count()) +
                          " free vertices, cap is " + std::to_string(limits.max_ground_set));
    }
    auto h = solve_exact(red.reduced, limits);
    Solution s;
    s.coloring.assign(idx(inst.n()), kUncolored);
    for (std::size_t g = 0; g < red.groups.size(); ++g) {
        for (Vertex v : red.groups[g]) {
            s.coloring[idx(v)] = h.coloring[g];
        }
    }
    s.happy_weight = evaluate_objective(inst, s.coloring);
    if (s.happy_weight != h.happy_weight + red.constant) {
        throw std::logic_error("lifted coloring does not match the reduced optimum");
    }
    s.algorithm = "nd";
    return s;
}

}  // namespace happy
