#include "happy/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace happy {

std::string to_string(GraphModel model) {
    switch (model) {
    case GraphModel::gnp:
        return "gnp";
    case GraphModel::random_tree:
        return "random-tree";
    case GraphModel::random_split:
        return "random-split";
    case GraphModel::planted:
        return "planted";
    }
    return "?";
}

std::optional<GraphModel> parse_graph_model(const std::string& name) {
    for (auto m : {GraphModel::gnp, GraphModel::random_tree, GraphModel::random_split, GraphModel::planted}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

Instance generate(const GenParams& params) {
    if (params.n < 0 || params.k < 1) {
        throw ValidationError("generator needs n >= 0 and k >= 1");
    }
    if (!(params.p >= 0 && params.p <= 1) || !(params.precolor_fraction >= 0 && params.precolor_fraction <= 1)) {
        throw ValidationError("generator probabilities must lie in [0, 1]");
    }
    if (params.max_weight < 1) {
        throw ValidationError("generator max weight must be at least 1");
    }
    const int n = params.n;
    std::mt19937_64 rng(params.seed);
    auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    std::vector<Color> hidden(static_cast<std::size_t>(n));
    for (auto& c : hidden) {
        c = uniform(1, params.k);
    }
    std::vector<Edge> edges;
    switch (params.model) {
    case GraphModel::gnp:
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(params.p)) {
                    edges.push_back({u, v});
                }
            }
        }
        break;
    case GraphModel::random_tree: {
        std::vector<Vertex> label(static_cast<std::size_t>(n));
        std::iota(label.begin(), label.end(), 0);
        std::shuffle(label.begin(), label.end(), rng);
        for (Vertex v = 1; v < n; ++v) {
            edges.push_back({label[static_cast<std::size_t>(uniform(0, v - 1))], label[static_cast<std::size_t>(v)]});
        }
        break;
    }
    case GraphModel::random_split: {
        const int clique = (n + 1) / 2;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (v < clique || (u < clique && coin(params.p))) {
                    edges.push_back({u, v});
                }
            }
        }
        break;
    }
    case GraphModel::planted:
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                double p = hidden[static_cast<std::size_t>(u)] == hidden[static_cast<std::size_t>(v)] ? params.p
                                                                                                      : params.p / 4;
                if (coin(p)) {
                    edges.push_back({u, v});
                }
            }
        }
        break;
    }

    InstanceBuilder b(params.problem, n, params.k);
    b.weighted(params.weighted);
    auto weight = [&]() -> Weight {
        return params.weighted ? std::uniform_int_distribution<Weight>(1, params.max_weight)(rng) : 1;
    };
    for (const auto& e : edges) {
        b.edge(e.u, e.v, params.problem == Problem::edges ? weight() : 1);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (coin(params.precolor_fraction)) {
            b.color(v, params.model == GraphModel::planted ? hidden[static_cast<std::size_t>(v)] : uniform(1, params.k));
        }
        if (params.problem == Problem::vertices) {
            b.vertex_weight(v, weight());
        }
    }
    return b.build();
}

}  // namespace happy
