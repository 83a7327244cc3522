#pragma once

#include "happy/model.hpp"

#include <limits>
#include <vector>

namespace happy {

/// Capacity used for arcs that must never be cut.
inline constexpr Weight kInfiniteCapacity = std::numeric_limits<Weight>::max() / 8;

/// Directed network with nonnegative integer capacities. Antiparallel arcs are fine.
class FlowNetwork {
public:
    struct Arc {
        int from;
        int to;
        Weight capacity;
    };

    explicit FlowNetwork(int nodes = 0) : nodes_(nodes) {}

    int add_node() { return nodes_++; }
    /// Returns the arc id.
    int add_arc(int from, int to, Weight capacity);
    /// Two opposite arcs of the same capacity.
    void add_edge(int a, int b, Weight capacity);

    int node_count() const { return nodes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    int nodes_;
    std::vector<Arc> arcs_;
};

struct MaxFlowResult {
    Weight value = 0;
    /// Arc ids leaving the source side.
    std::vector<int> cut_arcs;
    /// Nodes reachable from s in the final residual network.
    std::vector<bool> source_side;
};

/// Dinic's blocking-flow algorithm. The returned cut certifies optimality:
/// its capacity equals `value`.
MaxFlowResult max_flow(const FlowNetwork& net, int s, int t);

}  // namespace happy
