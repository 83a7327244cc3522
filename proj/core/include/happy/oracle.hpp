#pragma once

#include "happy/limits.hpp"
#include "happy/model.hpp"

#include <cstdint>
#include <optional>

namespace happy {

/// k^n' if it fits in 64 bits.
std::optional<std::uint64_t> extension_count(const Instance& inst);

/// Exhaustive search over every extension of the precoloring. Free vertices are
/// enumerated as a mixed-radix counter in index order, so the first optimum found
/// is the lexicographically smallest optimal coloring.
///
/// Throws CapExceeded when k^n' exceeds limits.max_colorings.
Solution solve_brute(const Instance& inst, const Limits& limits = {});

}  // namespace happy
