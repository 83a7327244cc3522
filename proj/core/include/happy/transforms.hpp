#pragma once

#include "happy/model.hpp"

namespace happy {

/// MHV on a complete graph: everything is happy when the precoloring uses at most one
/// color, nothing otherwise. ContractError unless MHV on a complete graph.
Solution solve_complete_mhv(const Instance& inst);

/// True when every precolored vertex is adjacent to every free vertex.
bool precolored_dominate_free(const Instance& inst);

/// Unit-weight MHE where every precolored vertex sees every free vertex (complete
/// graphs in particular): color all free vertices with the most frequent precolor.
/// ContractError when those conditions fail.
Solution solve_complete_mhe(const Instance& inst);

/// MHE -> MHV on a split graph: the original vertices form a clique, and each edge e
/// becomes a free vertex adjacent to the two endpoints of e (weighted by w(e)).
/// Optima coincide. Needs at least two distinct precolors.
Instance to_split_mhv(const Instance& inst);

/// As to_split_mhv without the clique edges; every original vertex x gets a 4-cycle
/// x, a, b, c with a, b, c precolored 1, 2, 3 so that it can never be happy. The result
/// is bipartite and optima coincide. Needs k >= 3 and two distinct precolors.
Instance to_bipartite_mhv(const Instance& inst);

/// Replaces each edge by a path of length two through a new free vertex.
/// Unit weights only; opt(result) = m + opt(inst).
Instance subdivide_mhe(const Instance& inst);

struct WeightedComplete {
    Instance instance;
    Weight alpha = 1;
};

/// Complete graph with weight alpha = C(n,2) - m + 1 on original edges and 1 elsewhere.
/// Unit weights only; opt(inst) = floor(opt(result) / alpha).
WeightedComplete to_weighted_complete(const Instance& inst);

}  // namespace happy
