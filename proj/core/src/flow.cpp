#include "happy/flow.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

class Dinic {
public:
    Dinic(const FlowNetwork& net) : head_(idx(net.node_count()), -1) {
        for (const auto& arc : net.arcs()) {
            push(arc.from, arc.to, arc.capacity);
            push(arc.to, arc.from, 0);
        }
    }

    Weight run(int s, int t) {
        Weight total = 0;
        while (bfs(s, t)) {
            cursor_ = head_;
            while (Weight pushed = dfs(s, t, kInfiniteCapacity)) {
                total += pushed;
            }
        }
        return total;
    }

    std::vector<bool> reachable(int s) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{s};
        seen[idx(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[idx(v)]; a != -1; a = next_[idx(a)]) {
                if (residual_[idx(a)] > 0 && !seen[idx(to_[idx(a)])]) {
                    seen[idx(to_[idx(a)])] = true;
                    stack.push_back(to_[idx(a)]);
                }
            }
        }
        return seen;
    }

private:
    void push(int from, int to, Weight cap) {
        to_.push_back(to);
        residual_.push_back(cap);
        next_.push_back(head_[idx(from)]);
        head_[idx(from)] = static_cast<int>(to_.size()) - 1;
    }

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        level_[idx(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a = head_[idx(v)]; a != -1; a = next_[idx(a)]) {
                int w = to_[idx(a)];
                if (residual_[idx(a)] > 0 && level_[idx(w)] < 0) {
                    level_[idx(w)] = level_[idx(v)] + 1;
                    q.push(w);
                }
            }
        }
        return level_[idx(t)] >= 0;
    }

    // Iterative would be nicer for huge networks; depth is bounded by the BFS level.
    Weight dfs(int v, int t, Weight limit) {
        if (v == t) {
            return limit;
        }
        for (int& a = cursor_[idx(v)]; a != -1; a = next_[idx(a)]) {
            int w = to_[idx(a)];
            if (residual_[idx(a)] > 0 && level_[idx(w)] == level_[idx(v)] + 1) {
                Weight got = dfs(w, t, std::min(limit, residual_[idx(a)]));
                if (got > 0) {
                    residual_[idx(a)] -= got;
                    residual_[idx(a ^ 1)] += got;
                    return got;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> next_;
    std::vector<int> to_;
    std::vector<Weight> residual_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

}  // namespace

int FlowNetwork::add_arc(int from, int to, Weight capacity) {
    if (from < 0 || from >= nodes_ || to < 0 || to >= nodes_) {
        throw ValidationError("arc endpoint outside the network");
    }
    if (capacity < 0) {
        throw ValidationError("negative arc capacity");
    }
    arcs_.push_back({from, to, capacity});
    return static_cast<int>(arcs_.size()) - 1;
}

void FlowNetwork::add_edge(int a, int b, Weight capacity) {
    add_arc(a, b, capacity);
    add_arc(b, a, capacity);
}

MaxFlowResult max_flow(const FlowNetwork& net, int s, int t) {
    const int n = net.node_count();
    if (s < 0 || s >= n || t < 0 || t >= n) {
        throw ValidationError("source or sink is not a node of the network");
    }
    if (s == t) {
        throw ValidationError("source and sink coincide");
    }
    Dinic dinic(net);
    MaxFlowResult result;
    result.value = dinic.run(s, t);
    result.source_side = dinic.reachable(s);
    const auto& arcs = net.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (result.source_side[idx(arcs[i].from)] && !result.source_side[idx(arcs[i].to)]) {
            result.cut_arcs.push_back(static_cast<int>(i));
        }
    }
    return result;
}

}  // namespace happy
