#pragma once

#include <cstdint>

namespace happy {

/// Resource caps shared by the exponential solvers.
struct Limits {
    /// Colorings the brute-force oracle may enumerate (k^n').
    std::uint64_t max_colorings = 20'000'000;
    /// Subset guesses the k=3 splitting solver may try.
    std::uint64_t max_subsets = 50'000'000;
    /// Largest ground set the partition solvers accept.
    int max_ground_set = 25;
    /// Memory budget of the value-indexed 2^n partition solver.
    std::uint64_t fast_partition_bytes = std::uint64_t{2} << 30;
    /// Arithmetic budget of the same solver (polynomial products dominate).
    std::uint64_t fast_partition_work = 50'000'000;

    /// Defaults, with HAPPY_MAX_SUBSETS (if set) overriding both enumeration caps.
    static Limits from_env();
};

}  // namespace happy
