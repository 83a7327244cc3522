#pragma once

#include "happy/limits.hpp"
#include "happy/model.hpp"
#include "happy/tree_decomposition.hpp"

#include <cstdint>

namespace happy {

struct TwdpStats {
    int nodes = 0;
    int width = 0;
    /// Largest table built: k^|X| entries for MHE, (2k)^|X| for MHV.
    std::uint64_t max_table = 0;
};

/// Dynamic programming over a nice decomposition of inst.graph, for both objectives.
/// MHE tables are indexed by bag colorings. MHV tables add one bit per bag vertex
/// meaning "every neighbor seen so far has this vertex's color"; an entry with the bit
/// set is a lower bound for the same entry with it cleared.
///
/// Throws ValidationError when nd does not fit the graph and CapExceeded when a table
/// would exceed limits.max_colorings entries.
Solution solve_twdp(const Instance& inst, const NiceDecomposition& nd, TwdpStats* stats = nullptr,
                    const Limits& limits = {});

/// decompose + make_nice + the above.
Solution solve_twdp(const Instance& inst, TwdpStats* stats = nullptr, const Limits& limits = {});

}  // namespace happy
