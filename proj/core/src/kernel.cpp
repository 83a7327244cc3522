#include "happy/kernel.hpp"

#include "happy/partition.hpp"
#include "happy/tree_dp.hpp"

#include <algorithm>
#include <map>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Subgraph on the vertices with keep[v], in index order, with their weights and colors.
RuleResult induced(const Instance& inst, const std::vector<bool>& keep) {
    RuleResult r;
    std::vector<int> renum(idx(inst.n()), -1);
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (keep[idx(v)]) {
            renum[idx(v)] = static_cast<int>(r.origin.size());
            r.origin.push_back({v});
        }
    }
    const int n = static_cast<int>(r.origin.size());
    Instance& out = r.instance;
    out.problem = inst.problem;
    out.weighted = inst.weighted;
    out.k = inst.k;
    out.target = inst.target;
    out.precolor.resize(idx(n));
    out.vertex_weight.resize(idx(n));
    for (int i = 0; i < n; ++i) {
        out.precolor[idx(i)] = inst.color_of(r.origin[idx(i)][0]);
        out.vertex_weight[idx(i)] = inst.vertex_weight[idx(r.origin[idx(i)][0])];
    }
    std::vector<Edge> edges;
    const auto& all = inst.graph.edges();
    for (std::size_t e = 0; e < all.size(); ++e) {
        int u = renum[idx(all[e].u)];
        int v = renum[idx(all[e].v)];
        if (u >= 0 && v >= 0) {
            edges.push_back({u, v});
            out.edge_weight.push_back(inst.edge_weight[e]);
        }
    }
    out.graph = Graph(n, std::move(edges));
    r.changed = n != inst.n();
    return r;
}

void require_mhe(const Instance& inst) {
    require_valid(inst);
    if (inst.problem != Problem::edges) {
        throw ContractError("kernelization applies to MHE instances only");
    }
}

}  // namespace

RuleResult rule_isolated(const Instance& inst) {
    require_valid(inst);
    std::vector<bool> keep(idx(inst.n()));
    for (Vertex v = 0; v < inst.n(); ++v) {
        keep[idx(v)] = inst.graph.degree(v) > 0;
    }
    return induced(inst, keep);
}

RuleResult rule_colored_edge(const Instance& inst) {
    require_valid(inst);
    RuleResult r;
    for (Vertex v = 0; v < inst.n(); ++v) {
        r.origin.push_back({v});
    }
    Instance& out = r.instance;
    out = inst;
    std::vector<Edge> edges;
    out.edge_weight.clear();
    const auto& all = inst.graph.edges();
    for (std::size_t e = 0; e < all.size(); ++e) {
        const auto& edge = all[e];
        if (inst.is_precolored(edge.u) && inst.is_precolored(edge.v)) {
            if (inst.color_of(edge.u) == inst.color_of(edge.v)) {
                r.decrement += inst.edge_weight[e];
            }
            r.changed = true;
            continue;
        }
        edges.push_back(edge);
        out.edge_weight.push_back(inst.edge_weight[e]);
    }
    out.graph = Graph(inst.n(), std::move(edges));
    if (out.target) {
        *out.target -= r.decrement;
    }
    return r;
}

RuleResult rule_contract_classes(const Instance& inst) {
    require_valid(inst);
    for (const auto& e : inst.graph.edges()) {
        if (inst.is_precolored(e.u) && inst.is_precolored(e.v)) {
            throw ContractError("contracting color classes needs no edge between precolored vertices, found " +
                                std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
        }
    }
    RuleResult r;
    std::vector<int> renum(idx(inst.n()), -1);
    std::vector<int> class_vertex(idx(inst.k) + 1, -1);
    for (Vertex v = 0; v < inst.n(); ++v) {
        Color c = inst.color_of(v);
        if (c != kUncolored && class_vertex[idx(c)] >= 0) {
            renum[idx(v)] = class_vertex[idx(c)];
            r.origin[idx(renum[idx(v)])].push_back(v);
            r.changed = true;
            continue;
        }
        renum[idx(v)] = static_cast<int>(r.origin.size());
        if (c != kUncolored) {
            class_vertex[idx(c)] = renum[idx(v)];
        }
        r.origin.push_back({v});
    }
    const int n = static_cast<int>(r.origin.size());
    Instance& out = r.instance;
    out.problem = inst.problem;
    out.k = inst.k;
    out.target = inst.target;
    out.precolor.resize(idx(n));
    out.vertex_weight.assign(idx(n), 1);
    for (int i = 0; i < n; ++i) {
        out.precolor[idx(i)] = inst.color_of(r.origin[idx(i)][0]);
    }
    std::map<std::pair<int, int>, Weight> merged;
    const auto& all = inst.graph.edges();
    for (std::size_t e = 0; e < all.size(); ++e) {
        int u = renum[idx(all[e].u)];
        int v = renum[idx(all[e].v)];
        merged[{std::min(u, v), std::max(u, v)}] += inst.edge_weight[e];
    }
    std::vector<Edge> edges;
    bool unit = true;
    for (const auto& [key, w] : merged) {
        edges.push_back({key.first, key.second});
        out.edge_weight.push_back(w);
        unit &= w == 1;
    }
    out.weighted = inst.weighted || !unit;
    out.graph = Graph(n, std::move(edges));
    return r;
}

std::string to_string(KernelStep::Kind kind) {
    switch (kind) {
    case KernelStep::Kind::isolated:
        return "isolated";
    case KernelStep::Kind::colored_edge:
        return "colored-edge";
    case KernelStep::Kind::contract:
        return "contract";
    case KernelStep::Kind::tree:
        return "tree";
    }
    return "?";
}

std::vector<Color> KernelTrace::lift(std::span<const Color> kernel_coloring) const {
    std::vector<Color> out = fixed;
    for (std::size_t v = 0; v < members.size(); ++v) {
        for (Vertex o : members[v]) {
            out[idx(o)] = kernel_coloring[v];
        }
    }
    for (auto& c : out) {
        if (c == kUncolored) {
            c = 1;
        }
    }
    return out;
}

namespace {

class Kernelizer {
public:
    Kernelizer(const Instance& inst, Weight ell) : k_(inst.k), ell_(ell), cur_(without_target(inst)) {
        trace_.fixed.assign(idx(inst.n()), kUncolored);
        for (Vertex v = 0; v < inst.n(); ++v) {
            trace_.members.push_back({v});
        }
    }

    KernelOutcome run() {
        while (true) {
            if (ell_ <= 0) {
                return yes_with(complete_with(cur_, 1), "target reached by fixed contributions");
            }
            bool changed = apply(rule_isolated(cur_), KernelStep::Kind::isolated);
            changed |= apply(rule_colored_edge(cur_), KernelStep::Kind::colored_edge);
            changed |= apply(rule_contract_classes(cur_), KernelStep::Kind::contract);
            if (ell_ <= 0) {
                return yes_with(complete_with(cur_, 1), "target reached by fixed contributions");
            }
            if (cur_.n() == 0) {
                Decided d;
                d.answer = Answer::no;
                d.witness = trace_.lift({});
                d.reason = "graph exhausted below the target";
                return d;
            }
            if (auto d = heavy_edge()) {
                return *d;
            }
            changed |= eliminate_trees();
            if (ell_ <= 0) {
                return yes_with(complete_with(cur_, 1), "target reached by tree components");
            }
            Weight inner = 0;
            const auto& edges = cur_.graph.edges();
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (!cur_.is_precolored(edges[e].u) && !cur_.is_precolored(edges[e].v)) {
                    inner += cur_.edge_weight[e];
                }
            }
            if (inner >= ell_) {
                return yes_with(complete_with(cur_, 1), "free subgraph weight reaches the target");
            }
            if (!changed) {
                break;
            }
        }
        if (static_cast<Weight>(cur_.n()) > static_cast<Weight>(k_) + ell_) {
            Decided d;
            d.reason = "kernel size bound exceeded";
            return d;
        }
        Reduced r;
        r.kernel = cur_;
        r.kernel.target = ell_;
        r.remaining_target = ell_;
        r.trace = trace_;
        return r;
    }

private:
    bool apply(RuleResult r, KernelStep::Kind kind) {
        if (!r.changed) {
            return false;
        }
        std::vector<bool> alive(idx(cur_.n()), false);
        std::vector<std::vector<Vertex>> members;
        for (const auto& group : r.origin) {
            std::vector<Vertex> merged;
            for (Vertex old : group) {
                alive[idx(old)] = true;
                merged.insert(merged.end(), trace_.members[idx(old)].begin(), trace_.members[idx(old)].end());
            }
            std::sort(merged.begin(), merged.end());
            members.push_back(std::move(merged));
        }
        for (Vertex v = 0; v < cur_.n(); ++v) {
            if (!alive[idx(v)]) {
                Color c = cur_.is_precolored(v) ? cur_.color_of(v) : 1;
                for (Vertex o : trace_.members[idx(v)]) {
                    // Tree elimination has already stored its solved colors.
                    if (trace_.fixed[idx(o)] == kUncolored) {
                        trace_.fixed[idx(o)] = c;
                    }
                }
            }
        }
        trace_.steps.push_back({kind, cur_.n(), r.instance.n(), r.decrement});
        trace_.members = std::move(members);
        trace_.total_decrement += r.decrement;
        ell_ -= r.decrement;
        cur_ = std::move(r.instance);
        cur_.target.reset();
        return true;
    }

    std::optional<Decided> heavy_edge() {
        const auto& edges = cur_.graph.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (cur_.edge_weight[e] < ell_ || (cur_.is_precolored(u) && cur_.is_precolored(v))) {
                continue;
            }
            auto coloring = complete_with(cur_, 1);
            Color c = cur_.is_precolored(u) ? cur_.color_of(u) : cur_.is_precolored(v) ? cur_.color_of(v) : 1;
            coloring[idx(u)] = c;
            coloring[idx(v)] = c;
            return yes_with(coloring, "edge of weight at least the target");
        }
        return std::nullopt;
    }

    bool eliminate_trees() {
        auto forest = uncolored_forest(cur_);
        std::vector<std::vector<Vertex>> trees;
        for (auto& comp : forest.components) {
            std::size_t inner_degree = 0;
            for (Vertex v : comp) {
                for (const auto& inc : cur_.graph.incident(v)) {
                    inner_degree += cur_.is_precolored(inc.to) ? 0 : 1;
                }
            }
            if (inner_degree / 2 + 1 == comp.size()) {
                trees.push_back(std::move(comp));
            }
        }
        if (trees.empty()) {
            return false;
        }
        auto coloring = cur_.precolor;
        auto values = detail::solve_tree_components(cur_, trees, coloring);
        RuleResult r;
        std::vector<bool> keep(idx(cur_.n()), true);
        for (const auto& comp : trees) {
            for (Vertex v : comp) {
                keep[idx(v)] = false;
                for (Vertex o : trace_.members[idx(v)]) {
                    trace_.fixed[idx(o)] = coloring[idx(v)];
                }
            }
        }
        r = induced(cur_, keep);
        for (Weight value : values) {
            r.decrement += value;
        }
        return apply(std::move(r), KernelStep::Kind::tree);
    }

    Decided yes_with(const std::vector<Color>& coloring, std::string reason) const {
        Decided d;
        d.witness = trace_.lift(coloring);
        d.reason = std::move(reason);
        return d;
    }

    int k_;
    Weight ell_;
    Instance cur_;
    KernelTrace trace_;
};

}  // namespace

KernelOutcome kernelize(const Instance& inst, Weight ell) {
    require_mhe(inst);
    if (ell < 0) {
        throw ValidationError("negative target");
    }
    return Kernelizer(inst, ell).run();
}

KernelOutcome kernelize(const Instance& inst) {
    if (!inst.target) {
        throw ContractError("kernelization needs a target");
    }
    return kernelize(inst, *inst.target);
}

namespace {

Solution lifted(const Instance& inst, std::vector<Color> coloring) {
    Solution s;
    s.happy_weight = evaluate_objective(inst, coloring);
    s.coloring = std::move(coloring);
    s.algorithm = "kernel+exact";
    return s;
}

}  // namespace

KernelDecision decide_with_kernel(const Instance& inst, Weight ell, const Limits& limits) {
    auto outcome = kernelize(inst, ell);
    KernelDecision out;
    if (auto* d = std::get_if<Decided>(&outcome)) {
        out.yes = d->answer == Answer::yes;
        if (d->witness) {
            out.witness = lifted(inst, *d->witness);
        }
        return out;
    }
    const auto& r = std::get<Reduced>(outcome);
    auto kernel_best = solve_exact(without_target(r.kernel), limits);
    out.witness = lifted(inst, r.trace.lift(kernel_best.coloring));
    out.yes = out.witness->happy_weight >= ell;
    return out;
}

Solution solve_kernel_exact(const Instance& inst, const Limits& limits) {
    require_mhe(inst);
    Weight ell = std::max<Weight>(inst.target.value_or(1), 1);
    while (true) {
        auto outcome = kernelize(inst, ell);
        if (auto* d = std::get_if<Decided>(&outcome)) {
            if (d->answer == Answer::no) {
                return lifted(inst, *d->witness);
            }
            Weight reached = d->witness ? evaluate_objective(inst, *d->witness) : 0;
            ell = std::max(reached + 1, 2 * ell);
            continue;
        }
        const auto& r = std::get<Reduced>(outcome);
        auto kernel_best = solve_exact(without_target(r.kernel), limits);
        return lifted(inst, r.trace.lift(kernel_best.coloring));
    }
}

}  // namespace happy
