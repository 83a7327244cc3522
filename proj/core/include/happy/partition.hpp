#pragma once

#include "happy/limits.hpp"
#include "happy/model.hpp"

#include <cstdint>
#include <vector>

namespace happy {

using SubsetMask = std::uint32_t;

/// Max Weighted Partition: split a ground set N into d ordered parts S_1..S_d
/// maximizing f_1(S_1) + ... + f_d(S_d). Value functions are stored as full
/// tables indexed by bitmask.
struct PartitionProblem {
    int ground_size = 0;
    int parts = 1;
    /// values[i][S] = f_{i+1}(S), each of size 2^ground_size.
    std::vector<std::vector<Weight>> values;
    /// Bound on |f_i(S)|.
    Weight bound = 0;
    /// Instance vertex behind each ground bit (empty for synthetic problems).
    std::vector<Vertex> ground;

    Weight value(int part, SubsetMask s) const { return values[static_cast<std::size_t>(part)][s]; }
    SubsetMask full() const { return ground_size == 0 ? 0u : static_cast<SubsetMask>((std::uint64_t{1} << ground_size) - 1); }
};

struct PartitionSolution {
    Weight value = 0;
    /// parts[i] is the mask given to f_{i+1}.
    std::vector<SubsetMask> parts;
};

/// Thrown by solve_mwp_2n when its memory or work budget would be exceeded.
class BudgetExceeded : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

/// Ground set = free vertices, d = k, f_i = happy weight inside S_i plus the color-i
/// precolored vertices. For MHV, f_i also counts precolored color-i vertices, so the
/// partition value equals the instance objective exactly.
PartitionProblem reduce_to_mwp(const Instance& inst);

/// Layered subset DP g_j[S] = max over T subset of S of g_{j-1}[S \ T] + f_j(T).
/// O(d 3^n) time. Throws CapExceeded above limits.max_ground_set.
PartitionSolution solve_mwp_3n(const PartitionProblem& p, const Limits& limits = {});

/// Fast subset convolution in the (max,+) semiring via rank- and value-indexed
/// zeta/Moebius transforms; pseudo-polynomial in the value range. Requires
/// integer values; each f_i is shifted by its minimum internally.
/// Throws BudgetExceeded when the estimated memory or work is over budget.
PartitionSolution solve_mwp_2n(const PartitionProblem& p, const Limits& limits = {});

/// d^n exhaustive assignment; test oracle for the two solvers above.
PartitionSolution solve_mwp_exhaustive(const PartitionProblem& p);

/// Exact solver for both objectives through reduce_to_mwp, using the 2^n route when
/// within budget and the 3^n route otherwise.
Solution solve_exact(const Instance& inst, const Limits& limits = {});

struct SplitStats {
    std::uint64_t guesses = 0;
};

/// 3 * sum_{j <= floor(free/3)} C(free, j): the number of guesses solve_k3_split makes.
std::uint64_t k3_guess_bound(int free_count);

/// k = 3: guess the smallest color class (at most n'/3 free vertices) and solve the
/// remaining two colors in polynomial time.
Solution solve_k3_split(const Instance& inst, SplitStats* stats = nullptr, const Limits& limits = {});

}  // namespace happy
