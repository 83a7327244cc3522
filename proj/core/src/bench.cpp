#include "happy/bench.hpp"

#include "happy/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <set>
#include <sstream>

namespace happy {

namespace fs = std::filesystem;

bool BenchReport::ok() const {
    return std::none_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.disagreement; });
}

BenchReport run_bench(const std::string& dir, const std::vector<NamedSolver>& solvers, int repetitions) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw ValidationError("not a directory: " + dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.size() > 6 && name.ends_with(".happy")) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    BenchReport report;
    if (files.empty()) {
        report.warnings.push_back("no .happy files in " + dir);
        return report;
    }
    repetitions = std::max(repetitions, 1);
    for (const auto& path : files) {
        const auto file = path.filename().string();
        Instance inst;
        try {
            inst = read_instance_file(path.string());
        } catch (const std::exception& e) {
            report.rows.push_back({file, "-", std::nullopt, 0, e.what(), false});
            continue;
        }
        const auto first = report.rows.size();
        for (const auto& solver : solvers) {
            BenchRow row{file, solver.name, std::nullopt, 0, "", false};
            std::vector<double> times;
            try {
                for (int r = 0; r < repetitions; ++r) {
                    auto start = std::chrono::steady_clock::now();
                    auto s = solver.solve(inst);
                    std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
                    times.push_back(took.count());
                    bool valid = false;
                    try {
                        valid = evaluate_objective(inst, s.coloring) == s.happy_weight;
                    } catch (const ValidationError&) {
                    }
                    row.disagreement |= !valid;
                    row.optimum = s.happy_weight;
                }
                std::sort(times.begin(), times.end());
                row.median_ms = times[times.size() / 2];
            } catch (const std::exception& e) {
                row.error = e.what();
                row.optimum.reset();
            }
            report.rows.push_back(std::move(row));
        }
        std::set<Weight> values;
        for (auto i = first; i < report.rows.size(); ++i) {
            if (report.rows[i].optimum) {
                values.insert(*report.rows[i].optimum);
            }
        }
        if (values.size() > 1) {
            for (auto i = first; i < report.rows.size(); ++i) {
                report.rows[i].disagreement |= report.rows[i].optimum.has_value();
            }
        }
    }
    return report;
}

std::string bench_table(const BenchReport& report) {
    std::size_t file_w = 4;
    std::size_t solver_w = 6;
    for (const auto& r : report.rows) {
        file_w = std::max(file_w, r.file.size());
        solver_w = std::max(solver_w, r.solver.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(file_w)) << "file" << "  " << std::setw(static_cast<int>(solver_w))
        << "solver" << "  " << std::right << std::setw(10) << "optimum" << "  " << std::setw(12) << "median_ms"
        << "  status\n";
    for (const auto& r : report.rows) {
        out << std::left << std::setw(static_cast<int>(file_w)) << r.file << "  "
            << std::setw(static_cast<int>(solver_w)) << r.solver << "  " << std::right << std::setw(10)
            << (r.optimum ? std::to_string(*r.optimum) : "-") << "  " << std::setw(12) << std::fixed
            << std::setprecision(3) << r.median_ms << "  ";
        if (r.disagreement) {
            out << "DISAGREE";
        } else if (!r.error.empty()) {
            out << "error: " << r.error;
        } else {
            out << "ok";
        }
        out << '\n';
    }
    for (const auto& w : report.warnings) {
        out << "warning: " << w << '\n';
    }
    return out.str();
}

std::string bench_json_lines(const BenchReport& report) {
    std::ostringstream out;
    for (const auto& r : report.rows) {
        nlohmann::ordered_json j;
        j["file"] = r.file;
        j["solver"] = r.solver;
        j["optimum"] = r.optimum ? nlohmann::ordered_json(*r.optimum) : nlohmann::ordered_json(nullptr);
        j["medianMs"] = r.median_ms;
        j["disagreement"] = r.disagreement;
        if (!r.error.empty()) {
            j["error"] = r.error;
        }
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace happy
