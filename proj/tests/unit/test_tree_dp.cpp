#include "happy/oracle.hpp"
#include "happy/tree_dp.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

namespace happy {
namespace {

using testing::Rng;

TEST(UncoloredForest, Examples) {
    auto colored = InstanceBuilder(Problem::edges, 3, 2).edge(0, 1).color(0, 1).color(1, 2).color(2, 1).build();
    auto f = uncolored_forest(colored);
    EXPECT_TRUE(f.is_forest);
    EXPECT_TRUE(f.components.empty());

    auto triangle = InstanceBuilder(Problem::edges, 3, 2).edge(0, 1).edge(1, 2).edge(0, 2).build();
    EXPECT_FALSE(uncolored_forest(triangle).is_forest);

    auto paths = InstanceBuilder(Problem::edges, 5, 2).edge(0, 1).edge(2, 3).edge(3, 4).build();
    auto g = uncolored_forest(paths);
    EXPECT_TRUE(g.is_forest);
    ASSERT_EQ(g.components.size(), 2u);
    EXPECT_EQ(g.components[0], (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(g.components[1], (std::vector<Vertex>{2, 3, 4}));
}

TEST(TreeDP, PathTables) {
    // a(1) - p1 - p2 - b(2), vertices a=0, p1=1, p2=2, b=3.
    auto inst = InstanceBuilder(Problem::edges, 4, 2).edge(0, 1).edge(1, 2).edge(2, 3).color(0, 1).color(3, 2).build();
    auto run = tree_dp_tables(inst);
    EXPECT_EQ(run.table.at(2, 1), 0);
    EXPECT_EQ(run.table.at(2, 2), 1);
    EXPECT_EQ(run.table.at(1, 1), 2);
    EXPECT_EQ(run.table.at(1, 2), 2);
    EXPECT_EQ(run.optimum, 2);
    auto s = solve_tree_mhe(inst);
    EXPECT_EQ(s.happy_weight, 2);
    EXPECT_EQ(evaluate_objective(inst, s.coloring), 2);
}

TEST(TreeDP, LeafRule) {
    auto inst = InstanceBuilder(Problem::edges, 4, 2).edge(0, 1).edge(0, 2).edge(0, 3).color(1, 1).color(2, 1).color(3, 2).build();
    auto run = tree_dp_tables(inst);
    EXPECT_EQ(run.table.at(0, 1), 2);
    EXPECT_EQ(run.table.at(0, 2), 1);
    EXPECT_EQ(solve_tree_mhe(inst).happy_weight, 2);
}

TEST(TreeDP, NoFreeVertices) {
    auto inst = InstanceBuilder(Problem::edges, 3, 2).weighted().edge(0, 1, 4).edge(1, 2, 3).color(0, 1).color(1, 1).color(2, 2).build();
    EXPECT_EQ(solve_tree_mhe(inst).happy_weight, 4);
    EXPECT_EQ(tree_dp_tables(inst).precolored_weight, 4);
}

TEST(TreeDP, Preconditions) {
    auto cycle = InstanceBuilder(Problem::edges, 3, 2).edge(0, 1).edge(1, 2).edge(0, 2).build();
    EXPECT_THROW(solve_tree_mhe(cycle), ContractError);
    auto mhv = InstanceBuilder(Problem::vertices, 2, 2).edge(0, 1).build();
    EXPECT_THROW(solve_tree_mhe(mhv), ContractError);
}

TEST(TreeDPProperties, MatchesOracle) {
    Rng rng(41);
    testing::RandomSpec spec;
    spec.free_forest = true;
    spec.max_n = 12;
    spec.max_free = 8;
    for (int round = 0; round < 500; ++round) {
        auto inst = testing::random_instance(rng, spec);
        auto s = solve_tree_mhe(inst);
        ASSERT_EQ(s.happy_weight, solve_brute(inst).happy_weight) << round;
        ASSERT_EQ(evaluate_objective(inst, s.coloring), s.happy_weight);
    }
}

TEST(TreeDPProperties, ColoredNeighborRaisesOneEntry) {
    Rng rng(42);
    testing::RandomSpec spec;
    spec.free_forest = true;
    spec.max_n = 10;
    for (int round = 0; round < 200; ++round) {
        auto inst = testing::random_instance(rng, spec);
        auto free = inst.uncolored_vertices();
        if (free.empty()) {
            continue;
        }
        Vertex v = free[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(free.size()) - 1))];
        Color i = testing::uniform_int(rng, 1, inst.k);
        Weight w = testing::uniform_int(rng, 1, 5);
        // Rebuild with one extra vertex precolored i, hanging off v.
        InstanceBuilder b(Problem::edges, inst.n() + 1, inst.k);
        b.weighted();
        for (std::size_t e = 0; e < inst.graph.edges().size(); ++e) {
            b.edge(inst.graph.edges()[e].u, inst.graph.edges()[e].v, inst.edge_weight[e]);
        }
        for (Vertex u = 0; u < inst.n(); ++u) {
            if (inst.is_precolored(u)) {
                b.color(u, inst.color_of(u));
            }
        }
        b.color(inst.n(), i).edge(v, inst.n(), w);
        auto bigger = b.build();
        auto before = tree_dp_tables(inst);
        auto after = tree_dp_tables(bigger);
        EXPECT_EQ(after.table.at(v, i), before.table.at(v, i) + w);
        for (Color j = 1; j <= inst.k; ++j) {
            if (j != i) {
                EXPECT_EQ(after.table.at(v, j), before.table.at(v, j));
            }
        }
    }
}

}  // namespace
}  // namespace happy
