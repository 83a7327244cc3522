#pragma once

#include "happy/limits.hpp"
#include "happy/model.hpp"

#include <span>
#include <vector>

namespace happy {

struct TypeClass {
    /// Sorted members.
    std::vector<Vertex> members;
    /// Members are pairwise adjacent (always true for singletons).
    bool clique = true;
    /// All members precolored (after splitting no class mixes the two).
    bool precolored = false;
};

struct TypePartition {
    /// Ordered by smallest member.
    std::vector<TypeClass> classes;
    /// class_of[v] indexes classes.
    std::vector<int> class_of;
    /// Number of types before splitting by precolored status.
    int diversity = 0;
};

/// Coarsest partition into vertices of equal type (N(u)\{v} = N(v)\{u}), then each
/// class split into its precolored and free members.
TypePartition type_partition(const Graph& g, std::span<const Color> precolor);

/// Same, but for MHE two vertices also need equal weights toward every shared
/// outside neighbor; otherwise merging them would change the optimum.
TypePartition type_partition(const Instance& inst);

/// Reduced instance H plus the map from H's vertices to the original ones.
struct NdReduction {
    Instance reduced;
    /// groups[h] = original vertices merged into vertex h of H.
    std::vector<std::vector<Vertex>> groups;
    /// MHE only: weight of edges inside a group, happy in every class-monochromatic coloring.
    Weight constant = 0;
};

/// One vertex per free class and per (precolored class, color); parallel edges summed,
/// edges inside a group moved to the constant. Requires MHE.
NdReduction nd_reduce_mhe(const Instance& inst, const TypePartition& tp);

/// Same grouping for MHV; group weight = total member weight, internal edges dropped.
NdReduction nd_reduce_mhv(const Instance& inst, const TypePartition& tp);

/// Reduces, solves H exactly and copies each group's color to its members.
/// Throws CapExceeded when H has more than limits.max_ground_set free vertices.
Solution solve_nd(const Instance& inst, const Limits& limits = {});

}  // namespace happy
