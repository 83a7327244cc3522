#include "happy/dispatch.hpp"

#include "happy/diversity.hpp"
#include "happy/kernel.hpp"
#include "happy/oracle.hpp"
#include "happy/partition.hpp"
#include "happy/transforms.hpp"
#include "happy/tree_dp.hpp"
#include "happy/treewidth_dp.hpp"
#include "happy/two_color.hpp"

#include <algorithm>

namespace happy {

namespace {

constexpr int kNdMaxFree = 20;
constexpr int kTwdpMaxVertices = 400;
constexpr std::uint64_t kTwdpMaxTable = std::uint64_t{1} << 20;

bool unit_edges(const Instance& inst) {
    return std::all_of(inst.edge_weight.begin(), inst.edge_weight.end(), [](Weight w) { return w == 1; });
}

Solution run_complete(const Instance& inst) {
    return inst.problem == Problem::vertices ? solve_complete_mhv(inst) : solve_complete_mhe(inst);
}

Solution run_flow2(const Instance& inst) {
    if (inst.k != 2) {
        throw ContractError("flow2 needs k = 2, got k = " + std::to_string(inst.k));
    }
    return inst.problem == Problem::edges ? solve_mhe_2(inst) : solve_mhv_2(inst);
}

Solution run_explicit(const Instance& inst, Algorithm algo, const Limits& limits) {
    switch (algo) {
    case Algorithm::brute:
        return solve_brute(inst, limits);
    case Algorithm::flow2:
        return run_flow2(inst);
    case Algorithm::tree:
        return solve_tree_mhe(inst);
    case Algorithm::kernel:
        return solve_kernel_exact(inst, limits);
    case Algorithm::exact:
        return solve_exact(inst, limits);
    case Algorithm::k3split:
        return solve_k3_split(inst, nullptr, limits);
    case Algorithm::nd:
        return solve_nd(inst, limits);
    case Algorithm::twdp:
        return solve_twdp(inst, nullptr, limits);
    case Algorithm::complete:
        return run_complete(inst);
    case Algorithm::automatic:
        break;
    }
    throw ContractError("no explicit algorithm given");
}

bool small_width(const Instance& inst, const NiceDecomposition& nd) {
    const auto radix = static_cast<double>(inst.problem == Problem::vertices ? 2 * inst.k : inst.k);
    double largest = 1;
    for (int i = 0; i <= nd.width(); ++i) {
        largest *= radix;
    }
    return largest <= static_cast<double>(kTwdpMaxTable);
}

Solution run_auto(const Instance& inst, const Limits& limits) {
    const bool mhe = inst.problem == Problem::edges;
    if (mhe ? unit_edges(inst) && precolored_dominate_free(inst) : is_complete(inst.graph)) {
        return run_complete(inst);
    }
    if (inst.k == 1) {
        Solution s;
        s.coloring = complete_with(inst, 1);
        s.happy_weight = happy_weight_unchecked(inst, s.coloring);
        s.algorithm = "monochrome";
        return s;
    }
    if (inst.k == 2) {
        return run_flow2(inst);
    }
    if (mhe && uncolored_forest(inst).is_forest) {
        return solve_tree_mhe(inst);
    }
    if (mhe && inst.target) {
        try {
            return solve_kernel_exact(inst, limits);
        } catch (const CapExceeded&) {
        }
    }
    if (inst.k == 3) {
        try {
            return solve_k3_split(inst, nullptr, limits);
        } catch (const CapExceeded&) {
        }
    }
    {
        auto tp = type_partition(inst);
        int free_classes = 0;
        for (const auto& c : tp.classes) {
            free_classes += c.precolored ? 0 : 1;
        }
        if (free_classes <= kNdMaxFree && free_classes < inst.uncolored_count()) {
            try {
                return solve_nd(inst, limits);
            } catch (const CapExceeded&) {
            }
        }
    }
    if (inst.n() <= kTwdpMaxVertices) {
        auto nd = make_nice(decompose(inst.graph));
        if (small_width(inst, nd)) {
            try {
                return solve_twdp(inst, nd, nullptr, limits);
            } catch (const CapExceeded&) {
            }
        }
    }
    try {
        return solve_exact(inst, limits);
    } catch (const CapExceeded&) {
    }
    try {
        return solve_brute(inst, limits);
    } catch (const CapExceeded&) {
        throw CapExceeded("no solver fits this instance within the caps (" + std::to_string(inst.uncolored_count()) +
                          " free vertices, k = " + std::to_string(inst.k) + ")");
    }
}

}  // namespace

std::string to_string(Algorithm algo) {
    switch (algo) {
    case Algorithm::automatic:
        return "auto";
    case Algorithm::brute:
        return "brute";
    case Algorithm::flow2:
        return "flow2";
    case Algorithm::tree:
        return "tree";
    case Algorithm::kernel:
        return "kernel";
    case Algorithm::exact:
        return "exact";
    case Algorithm::k3split:
        return "k3split";
    case Algorithm::nd:
        return "nd";
    case Algorithm::twdp:
        return "twdp";
    case Algorithm::complete:
        return "complete";
    }
    return "?";
}

std::vector<Algorithm> all_algorithms() {
    return {Algorithm::automatic, Algorithm::brute, Algorithm::flow2, Algorithm::tree,     Algorithm::kernel,
            Algorithm::exact,     Algorithm::k3split, Algorithm::nd,  Algorithm::twdp, Algorithm::complete};
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    for (auto a : all_algorithms()) {
        if (to_string(a) == name) {
            return a;
        }
    }
    return std::nullopt;
}

Solution dispatch(const Instance& inst, Algorithm algo, const Limits& limits) {
    require_valid(inst);
    return algo == Algorithm::automatic ? run_auto(inst, limits) : run_explicit(inst, algo, limits);
}

}  // namespace happy
