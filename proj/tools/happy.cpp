#include "happy/bench.hpp"
#include "happy/dispatch.hpp"
#include "happy/generators.hpp"
#include "happy/io.hpp"
#include "happy/kernel.hpp"
#include "happy/transforms.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace happy;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kCap = 3, kDisagree = 4, kInternal = 5 };

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

Algorithm algorithm_named(const std::string& name) {
    auto algo = parse_algorithm(name);
    if (!algo) {
        throw CLI::ValidationError("--algo", "unknown algorithm '" + name + "'");
    }
    return *algo;
}

void print_solution(const Instance& inst, const ResultRecord& r) {
    std::cout << "variant:   " << r.variant << '\n'
              << "algorithm: " << r.algorithm << '\n'
              << "optimum:   " << r.optimum << '\n';
    if (inst.target) {
        std::cout << "target:    " << *inst.target << '\n'
                  << "answer:    " << (r.optimum >= *inst.target ? "yes" : "no") << '\n';
    }
    std::cout << "coloring: ";
    for (Color c : r.coloring) {
        std::cout << ' ' << c;
    }
    std::cout << '\n';
}

struct SolveArgs {
    std::string input;
    std::string algo = "auto";
    std::optional<Weight> target;
    bool json = false;
};

int run_solve(const SolveArgs& a) {
    auto inst = read_instance_file(a.input);
    if (a.target) {
        if (*a.target < 0) {
            throw ValidationError("negative target");
        }
        inst.target = *a.target > 0 ? a.target : std::nullopt;
    }
    auto start = std::chrono::steady_clock::now();
    auto solution = dispatch(inst, algorithm_named(a.algo), Limits::from_env());
    std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    auto record = make_record(inst, solution, took.count());
    if (a.json) {
        std::cout << to_json(record) << '\n';
    } else {
        print_solution(inst, record);
    }
    return kOk;
}

struct KernelArgs {
    std::string input;
    std::string output;
    std::optional<Weight> target;
};

int run_kernelize(const KernelArgs& a) {
    auto inst = read_instance_file(a.input);
    if (a.target) {
        inst.target = *a.target;
    }
    auto outcome = kernelize(inst);
    if (const auto* d = std::get_if<Decided>(&outcome)) {
        std::cout << "decided: " << (d->answer == Answer::yes ? "yes" : "no") << " (" << d->reason << ")\n";
        if (d->witness) {
            std::cout << "witness happy weight: " << evaluate_objective(inst, *d->witness) << '\n';
        }
        return kOk;
    }
    const auto& r = std::get<Reduced>(outcome);
    std::cout << "kernel: " << r.kernel.n() << " vertices (" << r.kernel.n() - r.kernel.uncolored_count()
              << " precolored), " << r.kernel.m() << " edges, target " << r.remaining_target << '\n';
    for (const auto& step : r.trace.steps) {
        std::cout << "  " << to_string(step.kind) << ": " << step.vertices_before << " -> " << step.vertices_after
                  << " vertices, decrement " << step.decrement << '\n';
    }
    if (a.output.empty()) {
        write_instance(std::cout, r.kernel);
    } else {
        write_instance_file(a.output, r.kernel);
    }
    return kOk;
}

struct TransformArgs {
    std::string kind;
    std::string input;
    std::string output;
};

int run_transform(const TransformArgs& a) {
    auto inst = read_instance_file(a.input);
    Instance out;
    if (a.kind == "split-mhv") {
        out = to_split_mhv(inst);
    } else if (a.kind == "bipartite-mhv") {
        out = to_bipartite_mhv(inst);
    } else if (a.kind == "subdivide") {
        out = subdivide_mhe(inst);
    } else {
        auto wc = to_weighted_complete(inst);
        std::cerr << "alpha = " << wc.alpha << '\n';
        out = std::move(wc.instance);
    }
    if (a.output.empty()) {
        write_instance(std::cout, out);
    } else {
        write_instance_file(a.output, out);
    }
    return kOk;
}

struct GenArgs {
    std::string model = "gnp";
    std::string variant = "mhe";
    GenParams params;
    Weight target = 0;
    std::string output;
};

int run_gen(GenArgs a) {
    a.params.model = *parse_graph_model(a.model);
    a.params.problem = a.variant.ends_with("mhe") ? Problem::edges : Problem::vertices;
    a.params.weighted = a.variant.starts_with("w");
    auto inst = generate(a.params);
    if (a.target > 0) {
        inst.target = a.target;
    }
    if (a.output.empty()) {
        write_instance(std::cout, inst);
    } else {
        write_instance_file(a.output, inst);
    }
    return kOk;
}

struct CheckArgs {
    std::string input;
    std::string coloring;
};

int run_check(const CheckArgs& a) {
    auto inst = read_instance_file(a.input);
    std::string text = a.coloring;
    std::error_code ec;
    if (std::filesystem::is_regular_file(a.coloring, ec)) {
        std::ifstream in(a.coloring);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto coloring = parse_coloring(text);
    std::cout << "happy weight: " << evaluate_objective(inst, coloring) << '\n';
    return kOk;
}

struct BenchArgs {
    std::string dir;
    std::string algos = "auto,brute";
    int reps = 3;
    bool json = false;
};

int run_bench_cmd(const BenchArgs& a) {
    std::vector<NamedSolver> solvers;
    const auto limits = Limits::from_env();
    for (const auto& name : split_list(a.algos)) {
        auto algo = algorithm_named(name);
        solvers.push_back({name, [algo, limits](const Instance& inst) { return dispatch(inst, algo, limits); }});
    }
    auto report = run_bench(a.dir, solvers, a.reps);
    std::cout << (a.json ? bench_json_lines(report) : bench_table(report));
    for (const auto& w : report.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    return report.ok() ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum happy edges / vertices solver suite"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
    solve_cmd->add_option("--input,-i", solve.input, "instance file")->required();
    solve_cmd->add_option("--algo,-a", solve.algo, "auto, brute, flow2, tree, kernel, exact, k3split, nd, twdp, complete");
    solve_cmd->add_option("--target,-t", solve.target, "decision target (0 = optimize)");
    solve_cmd->add_flag("--json", solve.json, "print a JSON result record");

    KernelArgs kern;
    auto* kern_cmd = app.add_subcommand("kernelize", "reduce an MHE instance with a target");
    kern_cmd->add_option("--input,-i", kern.input, "instance file")->required();
    kern_cmd->add_option("--output,-o", kern.output, "kernel file (stdout if omitted)");
    kern_cmd->add_option("--target,-t", kern.target, "target, overriding the file");

    TransformArgs tr;
    auto* tr_cmd = app.add_subcommand("transform", "rewrite an MHE instance");
    tr_cmd->add_option("--kind,-k", tr.kind, "transform")
        ->required()
        ->check(CLI::IsMember({"split-mhv", "bipartite-mhv", "subdivide", "weighted-complete"}));
    tr_cmd->add_option("--input,-i", tr.input, "instance file")->required();
    tr_cmd->add_option("--output,-o", tr.output, "output file (stdout if omitted)");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--model,-m", gen.model, "gnp, random-tree, random-split, planted")
        ->check(CLI::IsMember({"gnp", "random-tree", "random-split", "planted"}));
    gen_cmd->add_option("--seed,-s", gen.params.seed, "random seed");
    gen_cmd->add_option("--variant", gen.variant, "mhe, mhv, wmhe, wmhv")
        ->check(CLI::IsMember({"mhe", "mhv", "wmhe", "wmhv"}));
    gen_cmd->add_option("-n", gen.params.n, "vertex count");
    gen_cmd->add_option("-k", gen.params.k, "color count");
    gen_cmd->add_option("-p", gen.params.p, "edge probability");
    gen_cmd->add_option("--precolor", gen.params.precolor_fraction, "fraction of precolored vertices");
    gen_cmd->add_option("--max-weight", gen.params.max_weight, "largest weight for weighted variants");
    gen_cmd->add_option("--target", gen.target, "target written to the header");
    gen_cmd->add_option("--output,-o", gen.output, "output file (stdout if omitted)");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "evaluate a coloring");
    check_cmd->add_option("--input,-i", check.input, "instance file")->required();
    check_cmd->add_option("--coloring,-c", check.coloring, "colors in vertex order, or a file holding them")
        ->required();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "time solvers over a directory of instances");
    bench_cmd->add_option("--dir,-d", bench.dir, "directory of .happy files")->required();
    bench_cmd->add_option("--algos", bench.algos, "comma-separated algorithms");
    bench_cmd->add_option("--reps", bench.reps, "repetitions per instance")->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--json", bench.json, "JSON lines instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve_cmd) {
            return run_solve(solve);
        }
        if (*kern_cmd) {
            return run_kernelize(kern);
        }
        if (*tr_cmd) {
            return run_transform(tr);
        }
        if (*gen_cmd) {
            return run_gen(gen);
        }
        if (*check_cmd) {
            return run_check(check);
        }
        return run_bench_cmd(bench);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const ContractError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
