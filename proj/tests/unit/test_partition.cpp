#include "happy/oracle.hpp"
#include "happy/partition.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

namespace happy {
namespace {

using testing::Rng;

PartitionProblem random_problem(Rng& rng, int n, int d, Weight lo, Weight hi) {
    PartitionProblem p;
    p.ground_size = n;
    p.parts = d;
    p.values.assign(static_cast<std::size_t>(d), std::vector<Weight>(std::size_t{1} << n));
    std::uniform_int_distribution<Weight> dist(lo, hi);
    for (auto& table : p.values) {
        for (auto& v : table) {
            v = dist(rng);
        }
    }
    p.bound = std::max(-lo, hi);
    return p;
}

Weight value_of(const PartitionProblem& p, const PartitionSolution& s) {
    SubsetMask seen = 0;
    Weight total = 0;
    for (int i = 0; i < p.parts; ++i) {
        SubsetMask part = s.parts[static_cast<std::size_t>(i)];
        EXPECT_EQ(seen & part, 0u);
        seen |= part;
        total += p.value(i, part);
    }
    EXPECT_EQ(seen, p.full());
    return total;
}

PartitionProblem singleton() {
    PartitionProblem p;
    p.ground_size = 1;
    p.parts = 2;
    p.values = {{0, 5}, {0, 3}};
    p.bound = 5;
    return p;
}

TEST(Mwp, Singleton) {
    for (auto s : {solve_mwp_3n(singleton()), solve_mwp_2n(singleton()), solve_mwp_exhaustive(singleton())}) {
        EXPECT_EQ(s.value, 5);
        EXPECT_EQ(s.parts, (std::vector<SubsetMask>{1, 0}));
    }
}

TEST(Mwp, OnePart) {
    Rng rng(51);
    auto p = random_problem(rng, 5, 1, 0, 20);
    EXPECT_EQ(solve_mwp_3n(p).value, p.value(0, p.full()));
    EXPECT_EQ(solve_mwp_2n(p).value, p.value(0, p.full()));
}

TEST(Mwp, AllZero) {
    PartitionProblem p;
    p.ground_size = 4;
    p.parts = 3;
    p.values.assign(3, std::vector<Weight>(16, 0));
    auto s = solve_mwp_2n(p);
    EXPECT_EQ(s.value, 0);
    EXPECT_EQ(value_of(p, s), 0);
}

TEST(Mwp, TwoPartsIsComplementSweep) {
    Rng rng(52);
    for (int round = 0; round < 30; ++round) {
        auto p = random_problem(rng, 6, 2, 0, 15);
        Weight best = 0;
        for (SubsetMask s = 0; s <= p.full(); ++s) {
            best = std::max(best, p.value(0, s) + p.value(1, p.full() ^ s));
        }
        EXPECT_EQ(solve_mwp_2n(p).value, best);
        EXPECT_EQ(solve_mwp_3n(p).value, best);
    }
}

TEST(Mwp, RandomSixElementProblems) {
    Rng rng(53);
    for (int round = 0; round < 40; ++round) {
        auto p = random_problem(rng, 6, testing::uniform_int(rng, 1, 4), -10, 10);
        auto expected = solve_mwp_exhaustive(p);
        auto a = solve_mwp_3n(p);
        auto b = solve_mwp_2n(p);
        EXPECT_EQ(a.value, expected.value);
        EXPECT_EQ(b.value, expected.value);
        EXPECT_EQ(value_of(p, a), a.value);
        EXPECT_EQ(value_of(p, b), b.value);
    }
}

TEST(Mwp, BudgetAndCap) {
    Rng rng(54);
    auto p = random_problem(rng, 6, 3, 0, 1000);
    Limits tight;
    tight.fast_partition_work = 10;
    EXPECT_THROW(solve_mwp_2n(p, tight), BudgetExceeded);
    Limits small;
    small.max_ground_set = 5;
    EXPECT_THROW(solve_mwp_3n(p, small), CapExceeded);
}

TEST(ReduceToMwp, TriangleMhe) {
    auto inst = InstanceBuilder(Problem::edges, 3, 2).edge(0, 1).edge(1, 2).edge(0, 2).color(0, 1).color(1, 2).build();
    auto p = reduce_to_mwp(inst);
    ASSERT_EQ(p.ground_size, 1);
    EXPECT_EQ(p.ground, std::vector<Vertex>{2});
    EXPECT_EQ(p.value(0, 1), 1);
    EXPECT_EQ(p.value(1, 1), 1);
    EXPECT_EQ(p.value(0, 0), 0);
    EXPECT_EQ(p.value(1, 0), 0);
    EXPECT_EQ(solve_mwp_3n(p).value, 1);
}

TEST(ReduceToMwp, NoFreeVertices) {
    auto inst = InstanceBuilder(Problem::edges, 4, 2)
                    .weighted()
                    .edge(0, 1, 2)
                    .edge(2, 3, 5)
                    .edge(1, 2, 7)
                    .color(0, 1)
                    .color(1, 1)
                    .color(2, 2)
                    .color(3, 2)
                    .build();
    auto p = reduce_to_mwp(inst);
    EXPECT_EQ(p.value(0, 0) + p.value(1, 0), 7);
    EXPECT_EQ(solve_exact(inst).happy_weight, 7);
}

TEST(ReduceToMwp, StarMhv) {
    auto inst = InstanceBuilder(Problem::vertices, 4, 2)
                    .edge(0, 1)
                    .edge(0, 2)
                    .edge(0, 3)
                    .color(1, 1)
                    .color(2, 1)
                    .color(3, 2)
                    .build();
    auto p = reduce_to_mwp(inst);
    EXPECT_EQ(p.value(0, 1), 2);
    EXPECT_EQ(solve_exact(inst).happy_weight, 2);
}

TEST(SolveExact, SingleColor) {
    auto inst = InstanceBuilder(Problem::edges, 4, 1).weighted().edge(0, 1, 3).edge(1, 2, 4).edge(2, 3, 2).build();
    EXPECT_EQ(solve_exact(inst).happy_weight, 9);
}

TEST(SolveExact, FallsBackWhenOverBudget) {
    Rng rng(55);
    testing::RandomSpec spec;
    Limits tight;
    tight.fast_partition_work = 1;
    for (int round = 0; round < 40; ++round) {
        auto inst = testing::random_instance(rng, spec);
        auto s = solve_exact(inst, tight);
        EXPECT_EQ(s.happy_weight, solve_brute(inst).happy_weight);
        if (inst.uncolored_count() > 0) {
            EXPECT_EQ(s.algorithm, "exact-3n");
        }
    }
}

TEST(K3Split, DistinctTriangleWithCenter) {
    auto inst = InstanceBuilder(Problem::edges, 4, 3)
                    .edge(0, 1)
                    .edge(1, 2)
                    .edge(0, 2)
                    .edge(3, 0)
                    .edge(3, 1)
                    .edge(3, 2)
                    .color(0, 1)
                    .color(1, 2)
                    .color(2, 3)
                    .build();
    EXPECT_EQ(solve_k3_split(inst).happy_weight, 1);
}

TEST(K3Split, NoFreeVertices) {
    auto inst = InstanceBuilder(Problem::vertices, 3, 3).edge(0, 1).color(0, 1).color(1, 1).color(2, 3).build();
    SplitStats stats;
    EXPECT_EQ(solve_k3_split(inst, &stats).happy_weight, 3);
    EXPECT_LE(stats.guesses, k3_guess_bound(0));
}

TEST(K3Split, WrongK) {
    auto inst = InstanceBuilder(Problem::edges, 2, 2).edge(0, 1).build();
    EXPECT_THROW(solve_k3_split(inst), ContractError);
}

TEST(K3Split, GuessBound) {
    EXPECT_EQ(k3_guess_bound(0), 3u);
    EXPECT_EQ(k3_guess_bound(3), 3u * (1 + 3));
    EXPECT_EQ(k3_guess_bound(6), 3u * (1 + 6 + 15));
    for (int n = 1; n <= 40; ++n) {
        EXPECT_LT(static_cast<double>(k3_guess_bound(n)), 3.0 * std::pow(1.89, n)) << n;
    }
}

TEST(PartitionProperties, ExactMatchesOracle) {
    Rng rng(56);
    testing::RandomSpec spec;
    for (int round = 0; round < 500; ++round) {
        spec.problem = round % 2 == 0 ? Problem::edges : Problem::vertices;
        auto inst = testing::random_instance(rng, spec);
        auto s = solve_exact(inst);
        ASSERT_EQ(s.happy_weight, solve_brute(inst).happy_weight) << round;
        ASSERT_EQ(evaluate_objective(inst, s.coloring), s.happy_weight);
    }
}

TEST(PartitionProperties, K3SplitMatchesExact) {
    Rng rng(57);
    testing::RandomSpec spec;
    spec.ks = {3};
    for (int round = 0; round < 300; ++round) {
        spec.problem = round % 2 == 0 ? Problem::edges : Problem::vertices;
        auto inst = testing::random_instance(rng, spec);
        SplitStats stats;
        auto s = solve_k3_split(inst, &stats);
        ASSERT_EQ(s.happy_weight, solve_exact(inst).happy_weight) << round;
        ASSERT_EQ(evaluate_objective(inst, s.coloring), s.happy_weight);
        ASSERT_LE(stats.guesses, k3_guess_bound(inst.uncolored_count()));
    }
}

TEST(PartitionProperties, SolversAgreeWithExhaustive) {
    Rng rng(58);
    for (int round = 0; round < 200; ++round) {
        auto p = random_problem(rng, testing::uniform_int(rng, 0, 8), testing::uniform_int(rng, 1, 4), 0, 12);
        auto expected = solve_mwp_exhaustive(p).value;
        auto a = solve_mwp_3n(p);
        auto b = solve_mwp_2n(p);
        ASSERT_EQ(a.value, expected);
        ASSERT_EQ(b.value, expected);
        ASSERT_EQ(value_of(p, a), expected);
        ASSERT_EQ(value_of(p, b), expected);
    }
}

}  // namespace
}  // namespace happy
