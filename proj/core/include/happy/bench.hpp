#pragma once

#include "happy/model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace happy {

struct NamedSolver {
    std::string name;
    std::function<Solution(const Instance&)> solve;
};

struct BenchRow {
    std::string file;
    std::string solver;
    std::optional<Weight> optimum;
    double median_ms = 0;
    /// Load or solve failure; the run goes on.
    std::string error;
    /// Optimum differs from another solver on the same file, or the coloring does
    /// not reach the reported value.
    bool disagreement = false;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<std::string> warnings;

    bool ok() const;
};

/// Runs every solver `repetitions` times on each *.happy file of dir (sorted by
/// path) and records the median wall time. Throws ValidationError if dir is not a
/// directory.
BenchReport run_bench(const std::string& dir, const std::vector<NamedSolver>& solvers, int repetitions = 3);

/// Aligned text table.
std::string bench_table(const BenchReport& report);
/// One JSON object per row.
std::string bench_json_lines(const BenchReport& report);

}  // namespace happy
