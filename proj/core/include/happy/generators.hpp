#pragma once

#include "happy/model.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace happy {

enum class GraphModel { gnp, random_tree, random_split, planted };

std::string to_string(GraphModel model);
std::optional<GraphModel> parse_graph_model(const std::string& name);

struct GenParams {
    GraphModel model = GraphModel::gnp;
    Problem problem = Problem::edges;
    bool weighted = false;
    int n = 10;
    int k = 3;
    /// Edge probability (gnp, planted inside parts, split clique-to-independent).
    double p = 0.3;
    /// Chance that a vertex keeps a precolor.
    double precolor_fraction = 0.3;
    /// Weights are drawn from [1, max_weight] when weighted.
    Weight max_weight = 5;
    std::uint64_t seed = 1;
};

/// Reproducible random instance: the same parameters give the same instance.
///  - gnp: each pair independently with probability p.
///  - random-tree: vertex i attaches to a uniform earlier vertex, labels shuffled.
///  - random-split: a clique on the first ceil(n/2) vertices, the rest independent,
///    clique-to-independent pairs with probability p.
///  - planted: a hidden k-partition, pairs inside a part with probability p and across
///    with probability p/4; precolored vertices take their part's color.
/// Throws ValidationError on bad parameters.
Instance generate(const GenParams& params);

}  // namespace happy
