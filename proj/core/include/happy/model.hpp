#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace happy {

/// Vertices are dense indices 0..n-1. Anything printed for a human uses 1-based ids,
/// matching the instance file format.
using Vertex = int;
/// Colors are 1..k. kUncolored marks a vertex outside the precolored set.
using Color = int;
using Weight = std::int64_t;

inline constexpr Color kUncolored = 0;

/// Malformed input: bad instance, bad coloring, bad file.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A solver was called outside its precondition (wrong k, wrong variant, cyclic forest...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An enumeration or memory cap would be exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

struct Incidence {
    Vertex to;
    int edge;
};

/// Simple undirected graph. Edges are stored normalized (u <= v) and sorted, so the
/// edge order is canonical and edge indices are stable across equal graphs.
/// Self-loops and duplicates are representable so that validate_instance can report them.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Incidence> incident(Vertex v) const {
        const auto i = static_cast<std::size_t>(v);
        return {adj_.data() + offset_[i], offset_[i + 1] - offset_[i]};
    }
    int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;
    /// Edge index of uv, or -1.
    int edge_index(Vertex u, Vertex v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offset_{0};
    std::vector<Incidence> adj_;
};

bool is_complete(const Graph& g);
bool is_bipartite(const Graph& g);
/// Hammer-Simeone degree sequence test.
bool is_split(const Graph& g);
bool is_forest(const Graph& g);

enum class Problem { edges, vertices };

/// A happy-coloring instance. For Problem::edges the edge weights matter, for
/// Problem::vertices the vertex weights do; the other vector is all ones.
struct Instance {
    Graph graph;
    Problem problem = Problem::edges;
    bool weighted = false;
    int k = 1;
    std::vector<Color> precolor;
    std::vector<Weight> edge_weight;
    std::vector<Weight> vertex_weight;
    std::optional<Weight> target;

    int n() const { return graph.order(); }
    int m() const { return graph.size(); }
    bool is_precolored(Vertex v) const { return precolor[static_cast<std::size_t>(v)] != kUncolored; }
    Color color_of(Vertex v) const { return precolor[static_cast<std::size_t>(v)]; }
    int uncolored_count() const;
    std::vector<Vertex> uncolored_vertices() const;
    Weight total_edge_weight() const;
    Weight total_vertex_weight() const;
    /// Total weight of whatever the objective counts.
    Weight total_weight() const { return problem == Problem::edges ? total_edge_weight() : total_vertex_weight(); }

    bool operator==(const Instance&) const = default;
};

struct Solution {
    std::vector<Color> coloring;
    Weight happy_weight = 0;
    std::string algorithm;

    bool operator==(const Solution&) const = default;
};

/// Fluent construction. build() canonicalizes the edge order (weights travel with
/// their edges) but does not validate.
class InstanceBuilder {
public:
    InstanceBuilder(Problem problem, int n, int k);

    InstanceBuilder& weighted(bool on = true);
    InstanceBuilder& edge(Vertex u, Vertex v, Weight w = 1);
    InstanceBuilder& color(Vertex v, Color c);
    InstanceBuilder& vertex_weight(Vertex v, Weight w);
    InstanceBuilder& target(Weight ell);

    Instance build() const;

private:
    struct WeightedEdge {
        Vertex u;
        Vertex v;
        Weight w;
    };
    Problem problem_;
    int n_;
    int k_;
    bool weighted_ = false;
    std::vector<WeightedEdge> edges_;
    std::vector<Color> precolor_;
    std::vector<Weight> vertex_weight_;
    std::optional<Weight> target_;
};

/// Every invariant violation of the instance, in a stable order. Empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

/// Throws ValidationError listing all violations.
void require_valid(const Instance& inst);

/// Checks that `coloring` is a total extension of the precoloring with colors in [k].
void require_extension(const Instance& inst, std::span<const Color> coloring);

/// Total weight of happy edges (MHE) or happy vertices (MHV).
Weight evaluate_objective(const Instance& inst, std::span<const Color> coloring);

/// Same as evaluate_objective without the extension check. Zero vertex weights are fine.
Weight happy_weight_unchecked(const Instance& inst, std::span<const Color> coloring);

/// The precoloring with every free vertex set to `fill`.
std::vector<Color> complete_with(const Instance& inst, Color fill);

/// Same instance, with the optimization target removed.
Instance without_target(Instance inst);

std::string to_string(Problem p);

}  // namespace happy
