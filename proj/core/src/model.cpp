#include "happy/model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace happy {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::string id(Vertex v) { return std::to_string(v + 1); }

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) {
        throw ValidationError("negative vertex count");
    }
    for (auto& e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::stable_sort(edges_.begin(), edges_.end());
    std::vector<std::size_t> fill(idx(n) + 1, 0);
    auto valid = [n](const Edge& e) { return e.u >= 0 && e.v < n; };  // others are reported by validate_instance
    for (const auto& e : edges_) {
        if (valid(e)) {
            ++fill[idx(e.u) + 1];
            fill[idx(e.v) + 1] += e.u != e.v ? 1 : 0;
        }
    }
    for (std::size_t v = 0; v < idx(n); ++v) {
        fill[v + 1] += fill[v];
    }
    offset_ = fill;
    adj_.resize(fill.back());
    // Edges are sorted, so smaller neighbors first and then larger ones keeps each list sorted.
    for (int i = 0; i < size(); ++i) {
        const auto& e = edges_[idx(i)];
        if (valid(e)) {
            adj_[fill[idx(e.v)]++] = {e.u, i};
        }
    }
    for (int i = 0; i < size(); ++i) {
        const auto& e = edges_[idx(i)];
        if (valid(e) && e.u != e.v) {
            adj_[fill[idx(e.u)]++] = {e.v, i};
        }
    }
}

int Graph::edge_index(Vertex u, Vertex v) const {
    auto list = incident(u);
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Incidence& inc, Vertex x) { return inc.to < x; });
    if (it != list.end() && it->to == v) {
        return it->edge;
    }
    return -1;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::int64_t>(g.order());
    if (static_cast<std::int64_t>(g.size()) != n * (n - 1) / 2) {
        return false;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != g.order() - 1) {
            return false;
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(idx(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[idx(s)] != -1) {
            continue;
        }
        side[idx(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (const auto& inc : g.incident(v)) {
                if (side[idx(inc.to)] == -1) {
                    side[idx(inc.to)] = 1 - side[idx(v)];
                    q.push(inc.to);
                } else if (side[idx(inc.to)] == side[idx(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_split(const Graph& g) {
    std::vector<std::int64_t> deg(idx(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        deg[idx(v)] = g.degree(v);
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    std::int64_t m = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] >= static_cast<std::int64_t>(i)) {
            m = static_cast<std::int64_t>(i) + 1;
        }
    }
    std::int64_t head = 0;
    std::int64_t tail = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        (static_cast<std::int64_t>(i) < m ? head : tail) += deg[i];
    }
    return head == m * (m - 1) + tail;
}

bool is_forest(const Graph& g) {
    std::vector<int> parent(idx(g.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[idx(x)] != x) {
            parent[idx(x)] = parent[idx(parent[idx(x)])];
            x = parent[idx(x)];
        }
        return x;
    };
    for (const auto& e : g.edges()) {
        int a = find(e.u);
        int b = find(e.v);
        if (a == b) {
            return false;
        }
        parent[idx(a)] = b;
    }
    return true;
}

int Instance::uncolored_count() const {
    return static_cast<int>(std::count(precolor.begin(), precolor.end(), kUncolored));
}

std::vector<Vertex> Instance::uncolored_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n(); ++v) {
        if (!is_precolored(v)) {
            out.push_back(v);
        }
    }
    return out;
}

Weight Instance::total_edge_weight() const {
    return std::accumulate(edge_weight.begin(), edge_weight.end(), Weight{0});
}

Weight Instance::total_vertex_weight() const {
    return std::accumulate(vertex_weight.begin(), vertex_weight.end(), Weight{0});
}

InstanceBuilder::InstanceBuilder(Problem problem, int n, int k)
    : problem_(problem), n_(n), k_(k), precolor_(idx(std::max(n, 0)), kUncolored),
      vertex_weight_(idx(std::max(n, 0)), 1) {}

InstanceBuilder& InstanceBuilder::weighted(bool on) {
    weighted_ = on;
    return *this;
}

InstanceBuilder& InstanceBuilder::edge(Vertex u, Vertex v, Weight w) {
    edges_.push_back({u, v, w});
    return *this;
}

InstanceBuilder& InstanceBuilder::color(Vertex v, Color c) {
    precolor_.at(idx(v)) = c;
    return *this;
}

InstanceBuilder& InstanceBuilder::vertex_weight(Vertex v, Weight w) {
    vertex_weight_.at(idx(v)) = w;
    return *this;
}

InstanceBuilder& InstanceBuilder::target(Weight ell) {
    target_ = ell;
    return *this;
}

Instance InstanceBuilder::build() const {
    auto sorted = edges_;
    for (auto& e : sorted) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::stable_sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    edges.reserve(sorted.size());
    for (const auto& e : sorted) {
        edges.push_back({e.u, e.v});
        weights.push_back(e.w);
    }
    Instance inst;
    inst.graph = Graph(n_, std::move(edges));
    inst.problem = problem_;
    inst.weighted = weighted_;
    inst.k = k_;
    inst.precolor = precolor_;
    inst.edge_weight = std::move(weights);
    inst.vertex_weight = vertex_weight_;
    inst.target = target_;
    return inst;
}

std::vector<std::string> validate_instance(const Instance& inst) {
    std::vector<std::string> out;
    const int n = inst.n();
    if (inst.k < 1) {
        out.push_back("color count k must be at least 1");
    }
    if (static_cast<int>(inst.precolor.size()) != n) {
        out.push_back("precoloring size does not match vertex count");
        return out;
    }
    if (static_cast<int>(inst.vertex_weight.size()) != n) {
        out.push_back("vertex weight table size does not match vertex count");
        return out;
    }
    if (static_cast<int>(inst.edge_weight.size()) != inst.m()) {
        out.push_back("edge weight table size does not match edge count");
        return out;
    }
    const auto& edges = inst.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u < 0 || e.v >= n) {
            out.push_back("edge endpoint out of range: " + id(e.u) + "-" + id(e.v));
            continue;
        }
        if (e.u == e.v) {
            out.push_back("self-loop at " + id(e.u));
        }
        if (i > 0 && edges[i - 1] == e) {
            out.push_back("duplicate edge " + id(e.u) + "-" + id(e.v));
        }
        if (inst.edge_weight[i] < 1) {
            out.push_back("nonpositive weight on edge " + id(e.u) + "-" + id(e.v));
        } else if (!inst.weighted && inst.edge_weight[i] != 1) {
            out.push_back("non-unit weight on edge " + id(e.u) + "-" + id(e.v) + " in an unweighted instance");
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        Color c = inst.precolor[idx(v)];
        if (c != kUncolored && (c < 1 || c > inst.k)) {
            out.push_back("color out of range at vertex " + id(v) + ": " + std::to_string(c));
        }
        Weight w = inst.vertex_weight[idx(v)];
        if (w < 1) {
            out.push_back("nonpositive weight on vertex " + id(v));
        } else if (!inst.weighted && w != 1) {
            out.push_back("non-unit weight on vertex " + id(v) + " in an unweighted instance");
        }
    }
    if (inst.target && *inst.target < 0) {
        out.push_back("negative target");
    }
    return out;
}

void require_valid(const Instance& inst) {
    auto violations = validate_instance(inst);
    if (violations.empty()) {
        return;
    }
    std::ostringstream msg;
    msg << "invalid instance:";
    for (const auto& v : violations) {
        msg << "\n  " << v;
    }
    throw ValidationError(msg.str());
}

void require_extension(const Instance& inst, std::span<const Color> coloring) {
    if (static_cast<int>(coloring.size()) != inst.n()) {
        throw ValidationError("coloring has " + std::to_string(coloring.size()) + " entries, expected " +
                              std::to_string(inst.n()));
    }
    for (Vertex v = 0; v < inst.n(); ++v) {
        Color c = coloring[idx(v)];
        if (c == kUncolored) {
            throw ValidationError("vertex " + id(v) + " is not colored");
        }
        if (c < 1 || c > inst.k) {
            throw ValidationError("vertex " + id(v) + " has color " + std::to_string(c) + " outside [1," +
                                  std::to_string(inst.k) + "]");
        }
        if (inst.is_precolored(v) && inst.color_of(v) != c) {
            throw ValidationError("vertex " + id(v) + " is precolored " + std::to_string(inst.color_of(v)) +
                                  " but colored " + std::to_string(c));
        }
    }
}

Weight happy_weight_unchecked(const Instance& inst, std::span<const Color> coloring) {
    Weight total = 0;
    const auto& edges = inst.graph.edges();
    if (inst.problem == Problem::edges) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (coloring[idx(edges[i].u)] == coloring[idx(edges[i].v)]) {
                total += inst.edge_weight[i];
            }
        }
        return total;
    }
    for (Vertex v = 0; v < inst.n(); ++v) {
        bool happy = true;
        for (const auto& inc : inst.graph.incident(v)) {
            if (coloring[idx(inc.to)] != coloring[idx(v)]) {
                happy = false;
                break;
            }
        }
        if (happy) {
            total += inst.vertex_weight[idx(v)];
        }
    }
    return total;
}

Weight evaluate_objective(const Instance& inst, std::span<const Color> coloring) {
    require_extension(inst, coloring);
    return happy_weight_unchecked(inst, coloring);
}

std::vector<Color> complete_with(const Instance& inst, Color fill) {
    std::vector<Color> out = inst.precolor;
    for (auto& c : out) {
        if (c == kUncolored) {
            c = fill;
        }
    }
    return out;
}

Instance without_target(Instance inst) {
    inst.target.reset();
    return inst;
}

std::string to_string(Problem p) { return p == Problem::edges ? "MHE" : "MHV"; }

}  // namespace happy
