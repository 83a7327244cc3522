#pragma once

#include "happy/limits.hpp"
#include "happy/model.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace happy {

/// Output of one reduction rule. origin[v'] lists the input vertices merged into
/// output vertex v'; input vertices absent from every list were deleted.
struct RuleResult {
    Instance instance;
    std::vector<std::vector<Vertex>> origin;
    Weight decrement = 0;
    bool changed = false;
};

/// Deletes every isolated vertex.
RuleResult rule_isolated(const Instance& inst);
/// Deletes every edge with two precolored endpoints; decrement = weight of the happy ones.
/// The instance target, if any, is lowered by the decrement.
RuleResult rule_colored_edge(const Instance& inst);
/// Contracts each precolor class into one vertex, summing parallel edges.
/// Throws ContractError if an edge joins two precolored vertices.
RuleResult rule_contract_classes(const Instance& inst);

struct KernelStep {
    enum class Kind { isolated, colored_edge, contract, tree };
    Kind kind;
    /// Vertices of the working instance before and after the step.
    int vertices_before = 0;
    int vertices_after = 0;
    Weight decrement = 0;
};

std::string to_string(KernelStep::Kind kind);

/// Maps colorings of the kernel back to the original instance.
struct KernelTrace {
    std::vector<KernelStep> steps;
    /// Original vertices behind each kernel vertex.
    std::vector<std::vector<Vertex>> members;
    /// Colors of deleted original vertices (tree components are solved before deletion).
    std::vector<Color> fixed;
    Weight total_decrement = 0;

    /// Original objective of lift(c) = kernel objective of c + total_decrement.
    std::vector<Color> lift(std::span<const Color> kernel_coloring) const;
};

enum class Answer { yes, no };

struct Decided {
    Answer answer = Answer::yes;
    /// Original-graph coloring reaching the target (YES), or an optimal one (NO).
    std::optional<std::vector<Color>> witness;
    std::string reason;
};

struct Reduced {
    Instance kernel;
    Weight remaining_target = 0;
    KernelTrace trace;
};

using KernelOutcome = std::variant<Decided, Reduced>;

/// Reduction-rule fixpoint for Weighted k-MHE with target ell. A Reduced kernel has at
/// most k precolored and at most ell'-1 free vertices. Throws ContractError for MHV.
KernelOutcome kernelize(const Instance& inst, Weight ell);
/// Uses inst.target; ContractError when absent.
KernelOutcome kernelize(const Instance& inst);

struct KernelDecision {
    bool yes = false;
    /// Present unless the size bound alone decided YES.
    std::optional<Solution> witness;
};

/// Kernelizes and, if needed, solves the kernel exactly.
KernelDecision decide_with_kernel(const Instance& inst, Weight ell, const Limits& limits = {});

/// Optimum of a Weighted k-MHE instance through repeated kernelization with growing
/// targets: every Reduced or NO outcome carries the optimum. Starts at inst.target if set.
Solution solve_kernel_exact(const Instance& inst, const Limits& limits = {});

}  // namespace happy
