#pragma once

#include "happy/limits.hpp"
#include "happy/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace happy {

enum class Algorithm { automatic, brute, flow2, tree, kernel, exact, k3split, nd, twdp, complete };

/// CLI names: auto, brute, flow2, tree, kernel, exact, k3split, nd, twdp, complete.
std::string to_string(Algorithm algo);
std::optional<Algorithm> parse_algorithm(const std::string& name);
std::vector<Algorithm> all_algorithms();

/// Runs the requested solver, or picks one: complete-graph fast paths, then two colors,
/// then a free forest (MHE), then kernelization (MHE with a target), then the k = 3
/// split, then few neighborhood types, then small treewidth, then the exact partition
/// solver, then brute force. A route that hits a cap falls through to the next.
/// Explicit algorithms throw ContractError when their preconditions fail.
Solution dispatch(const Instance& inst, Algorithm algo = Algorithm::automatic, const Limits& limits = Limits::from_env());

}  // namespace happy
