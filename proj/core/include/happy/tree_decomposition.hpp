#pragma once

#include "happy/model.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace happy {

struct TreeDecomposition {
    /// Sorted bags, one per tree node.
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> edges;
    int root = 0;

    int width() const;
};

/// Elimination-order decomposition: min-fill for up to 400 vertices, min-degree above.
/// Always valid; the width is heuristic.
TreeDecomposition decompose(const Graph& g);

/// Every violated tree-decomposition property; empty means valid.
std::vector<std::string> verify_decomposition(const Graph& g, const TreeDecomposition& td);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
    NiceKind kind = NiceKind::leaf;
    /// Introduced or forgotten vertex; -1 otherwise.
    Vertex vertex = -1;
    std::vector<Vertex> bag;
    std::vector<int> children;
};

/// Children always precede their parent, so the root is the last node.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
};

/// Leaf bags have at most one vertex, introduce/forget nodes differ from their only
/// child by one vertex, joins have two children with equal bags. The root keeps the
/// bag of the input root. Throws ValidationError if td is not a tree.
NiceDecomposition make_nice(const TreeDecomposition& td);

/// Nice-form rules plus the decomposition properties against g.
std::vector<std::string> verify_nice(const Graph& g, const NiceDecomposition& nd);

/// PACE .td format: "s td <bags> <max bag> <n>", "b <id> <vertices...>", "<id> <id>" edges,
/// "c" comments; all ids 1-based.
TreeDecomposition read_td(std::istream& in);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

}  // namespace happy
