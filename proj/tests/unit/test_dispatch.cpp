#include "happy/bench.hpp"
#include "happy/dispatch.hpp"
#include "happy/generators.hpp"
#include "happy/io.hpp"
#include "happy/oracle.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace happy {
namespace {

namespace fs = std::filesystem;
using testing::Rng;

Instance complete_mhv(int n) {
    InstanceBuilder b(Problem::vertices, n, 3);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            b.edge(u, v);
        }
    }
    return b.color(0, 2).build();
}

TEST(Dispatch, Routing) {
    EXPECT_EQ(dispatch(complete_mhv(5)).algorithm, "complete-mhv");
    auto k2 = InstanceBuilder(Problem::edges, 4, 2).edge(0, 1).edge(1, 2).edge(2, 3).edge(0, 3).edge(1, 3).color(0, 1).build();
    EXPECT_EQ(dispatch(k2).algorithm, "flow2-mhe");
    auto tree = InstanceBuilder(Problem::edges, 4, 4).edge(0, 1).edge(1, 2).edge(1, 3).color(0, 1).color(3, 2).build();
    EXPECT_EQ(dispatch(tree).algorithm, "tree-dp");
    auto cyc = InstanceBuilder(Problem::edges, 5, 4)
                   .edge(0, 1)
                   .edge(1, 2)
                   .edge(2, 3)
                   .edge(3, 0)
                   .edge(0, 4)
                   .color(4, 1)
                   .target(3)
                   .build();
    EXPECT_EQ(dispatch(cyc).algorithm, "kernel+exact");
    auto k3 = InstanceBuilder(Problem::vertices, 4, 3).edge(0, 1).edge(1, 2).edge(2, 3).color(0, 1).color(3, 2).build();
    EXPECT_EQ(dispatch(k3).algorithm, "k3-split");
    auto mono = InstanceBuilder(Problem::vertices, 3, 1).edge(0, 1).build();
    EXPECT_EQ(dispatch(mono).algorithm, "monochrome");
    EXPECT_EQ(dispatch(mono).happy_weight, 3);
}

TEST(Dispatch, ExplicitPreconditions) {
    auto k3 = InstanceBuilder(Problem::edges, 3, 3).edge(0, 1).edge(1, 2).edge(0, 2).build();
    EXPECT_THROW(dispatch(k3, Algorithm::flow2), ContractError);
    EXPECT_THROW(dispatch(k3, Algorithm::tree), ContractError);
    auto k4 = InstanceBuilder(Problem::edges, 3, 4).edge(0, 1).build();
    EXPECT_THROW(dispatch(k4, Algorithm::k3split), ContractError);
    auto path = InstanceBuilder(Problem::vertices, 3, 3).edge(0, 1).edge(1, 2).build();
    EXPECT_THROW(dispatch(path, Algorithm::complete), ContractError);
}

TEST(Dispatch, AlgorithmNames) {
    for (auto a : all_algorithms()) {
        EXPECT_EQ(parse_algorithm(to_string(a)), a);
    }
    EXPECT_EQ(parse_algorithm("auto"), Algorithm::automatic);
    EXPECT_FALSE(parse_algorithm("magic"));
}

TEST(DispatchProperties, AutoAgreesWithBrute) {
    Rng rng(111);
    testing::RandomSpec spec;
    for (int round = 0; round < 400; ++round) {
        spec.problem = round % 2 == 0 ? Problem::edges : Problem::vertices;
        spec.free_forest = round % 5 == 0;
        auto inst = testing::random_instance(rng, spec);
        if (round % 3 == 0 && spec.problem == Problem::edges) {
            inst.target = testing::uniform_int(rng, 1, 15);
        }
        auto s = dispatch(inst);
        ASSERT_EQ(s.happy_weight, solve_brute(inst).happy_weight) << round << " " << s.algorithm;
        ASSERT_EQ(evaluate_objective(inst, s.coloring), s.happy_weight);
    }
}

TEST(DispatchProperties, EveryRouteOverCapIsReported) {
    GenParams p;
    p.n = 30;
    p.k = 4;
    p.p = 0.9;
    p.precolor_fraction = 0.1;
    p.seed = 7;
    auto inst = generate(p);
    ASSERT_GT(inst.uncolored_count(), 20);
    Limits limits;
    limits.max_ground_set = 10;
    limits.max_colorings = 1000;
    limits.max_subsets = 1000;
    EXPECT_THROW(dispatch(inst, Algorithm::automatic, limits), CapExceeded);
}

class BenchDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("happy_bench_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    void add(const std::string& name, const Instance& inst) { write_instance_file((dir_ / name).string(), inst); }

    fs::path dir_;
};

std::vector<NamedSolver> auto_and_brute() {
    return {{"auto", [](const Instance& i) { return dispatch(i); }},
            {"brute", [](const Instance& i) { return solve_brute(i); }}};
}

TEST_F(BenchDir, ConsistentSolvers) {
    Rng rng(113);
    for (int i = 0; i < 3; ++i) {
        add("i" + std::to_string(i) + ".happy", testing::random_instance(rng, {}));
    }
    std::ofstream(dir_ / "notes.txt") << "ignored";
    auto report = run_bench(dir_.string(), auto_and_brute(), 2);
    EXPECT_TRUE(report.ok());
    ASSERT_EQ(report.rows.size(), 6u);
    EXPECT_EQ(report.rows[0].file, "i0.happy");
    EXPECT_EQ(report.rows[0].optimum, report.rows[1].optimum);
    EXPECT_NE(bench_table(report).find("ok"), std::string::npos);
    const auto lines = bench_json_lines(report);
    EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 6);
}

TEST_F(BenchDir, FaultyStubIsFlagged) {
    Rng rng(114);
    add("a.happy", testing::random_instance(rng, {}));
    auto solvers = auto_and_brute();
    solvers.push_back({"stub", [](const Instance& i) {
                           auto s = solve_brute(i);
                           s.happy_weight += 1;
                           return s;
                       }});
    auto report = run_bench(dir_.string(), solvers, 1);
    EXPECT_FALSE(report.ok());
    EXPECT_NE(bench_table(report).find("DISAGREE"), std::string::npos);
}

TEST_F(BenchDir, EmptyDirectoryWarns) {
    auto report = run_bench(dir_.string(), auto_and_brute());
    EXPECT_TRUE(report.rows.empty());
    ASSERT_EQ(report.warnings.size(), 1u);
    EXPECT_TRUE(report.ok());
}

TEST_F(BenchDir, BadFilesAreReportedAndSkipped) {
    std::ofstream(dir_ / "bad.happy") << "happy mhe 2 1 2 0\ne 1 9\n";
    Rng rng(115);
    add("good.happy", testing::random_instance(rng, {}));
    auto report = run_bench(dir_.string(), auto_and_brute(), 1);
    ASSERT_EQ(report.rows.size(), 3u);
    EXPECT_FALSE(report.rows[0].error.empty());
    EXPECT_TRUE(report.ok());
    EXPECT_THROW(run_bench((dir_ / "nope").string(), auto_and_brute()), ValidationError);
}

}  // namespace
}  // namespace happy
