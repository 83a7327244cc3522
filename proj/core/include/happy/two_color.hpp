#pragma once

#include "happy/model.hpp"

namespace happy {

/// Exact 2-MHE by merging each color class into a terminal and cutting.
/// Requires k = 2 and Problem::edges.
Solution solve_mhe_2(const Instance& inst);

/// Exact 2-MHV as a minimum-weight vertex separator between N[S1] and N[S2]
/// in the distance-two graph. Requires k = 2 and Problem::vertices.
Solution solve_mhv_2(const Instance& inst);

/// True when some neighbor of v has a different color (the vertex is unhappy).
bool touches_bichromatic_edge(const Graph& g, std::span<const Color> coloring, Vertex v);

}  // namespace happy
