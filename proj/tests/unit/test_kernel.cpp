#include "happy/kernel.hpp"
#include "happy/oracle.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

namespace happy {
namespace {

using testing::Rng;

TEST(RuleIsolated, RemovesIsolatedOnly) {
    auto inst = InstanceBuilder(Problem::edges, 4, 2).edge(0, 1).color(0, 1).target(3).build();
    auto r = rule_isolated(inst);
    EXPECT_TRUE(r.changed);
    EXPECT_EQ(r.instance.n(), 2);
    EXPECT_EQ(r.instance.target, std::optional<Weight>(3));
    EXPECT_EQ(r.origin, (std::vector<std::vector<Vertex>>{{0}, {1}}));

    auto again = rule_isolated(r.instance);
    EXPECT_FALSE(again.changed);
    EXPECT_EQ(again.instance, r.instance);

    auto edgeless = InstanceBuilder(Problem::edges, 3, 2).build();
    EXPECT_EQ(rule_isolated(edgeless).instance.n(), 0);
}

TEST(RuleColoredEdge, DecrementsOnHappyEdges) {
    auto same = InstanceBuilder(Problem::edges, 2, 2).weighted().edge(0, 1, 3).color(0, 1).color(1, 1).target(5).build();
    auto r = rule_colored_edge(same);
    EXPECT_EQ(r.instance.m(), 0);
    EXPECT_EQ(r.decrement, 3);
    EXPECT_EQ(r.instance.target, std::optional<Weight>(2));

    auto diff = InstanceBuilder(Problem::edges, 2, 2).weighted().edge(0, 1, 3).color(0, 1).color(1, 2).target(5).build();
    auto d = rule_colored_edge(diff);
    EXPECT_EQ(d.instance.m(), 0);
    EXPECT_EQ(d.decrement, 0);
    EXPECT_EQ(d.instance.target, std::optional<Weight>(5));

    auto none = InstanceBuilder(Problem::edges, 2, 2).edge(0, 1).color(0, 1).build();
    EXPECT_FALSE(rule_colored_edge(none).changed);
}

TEST(RuleContract, MergesParallelEdges) {
    auto inst = InstanceBuilder(Problem::edges, 3, 2).edge(0, 2).edge(1, 2).color(0, 1).color(1, 1).build();
    auto r = rule_contract_classes(inst);
    EXPECT_TRUE(r.changed);
    ASSERT_EQ(r.instance.n(), 2);
    ASSERT_EQ(r.instance.m(), 1);
    EXPECT_EQ(r.instance.edge_weight[0], 2);
    EXPECT_TRUE(r.instance.weighted);

    auto single = InstanceBuilder(Problem::edges, 3, 2).edge(0, 2).edge(1, 2).color(0, 1).color(1, 2).build();
    EXPECT_FALSE(rule_contract_classes(single).changed);

    auto apart = InstanceBuilder(Problem::edges, 4, 2).edge(0, 2).edge(1, 3).color(0, 1).color(1, 1).build();
    auto a = rule_contract_classes(apart);
    EXPECT_EQ(a.instance.n(), 3);
    EXPECT_EQ(a.instance.m(), 2);
    EXPECT_EQ(a.instance.total_edge_weight(), 2);
}

TEST(RuleContract, RefusesColoredEdges) {
    auto inst = InstanceBuilder(Problem::edges, 2, 2).edge(0, 1).color(0, 1).color(1, 1).build();
    EXPECT_THROW(rule_contract_classes(inst), ContractError);
}

TEST(Kernelize, TargetOneIsImmediate) {
    auto inst = InstanceBuilder(Problem::edges, 4, 3).edge(0, 1).edge(1, 2).edge(2, 3).edge(0, 3).color(0, 1).color(2, 2).build();
    auto out = kernelize(inst, 1);
    ASSERT_TRUE(std::holds_alternative<Decided>(out));
    const auto& d = std::get<Decided>(out);
    EXPECT_EQ(d.answer, Answer::yes);
    ASSERT_TRUE(d.witness);
    EXPECT_GE(evaluate_objective(inst, *d.witness), 1);
}

TEST(Kernelize, FreeFourCycle) {
    auto inst = InstanceBuilder(Problem::edges, 4, 2).edge(0, 1).edge(1, 2).edge(2, 3).edge(0, 3).build();
    auto out = kernelize(inst, 4);
    ASSERT_TRUE(std::holds_alternative<Decided>(out));
    const auto& d = std::get<Decided>(out);
    EXPECT_EQ(d.answer, Answer::yes);
    ASSERT_TRUE(d.witness);
    EXPECT_EQ(evaluate_objective(inst, *d.witness), 4);
}

TEST(Kernelize, ForestIsDecided) {
    Rng rng(61);
    testing::RandomSpec spec;
    spec.free_forest = true;
    for (int round = 0; round < 200; ++round) {
        auto inst = testing::random_instance(rng, spec);
        auto opt = solve_brute(inst).happy_weight;
        Weight ell = testing::uniform_int(rng, 1, static_cast<int>(std::max<Weight>(1, inst.total_edge_weight())));
        auto out = kernelize(inst, ell);
        ASSERT_TRUE(std::holds_alternative<Decided>(out)) << round;
        const auto& d = std::get<Decided>(out);
        EXPECT_EQ(d.answer == Answer::yes, opt >= ell);
        if (d.answer == Answer::no) {
            ASSERT_TRUE(d.witness);
            EXPECT_EQ(evaluate_objective(inst, *d.witness), opt);
        }
    }
}

TEST(Kernelize, NeedsTargetAndMhe) {
    auto mhe = InstanceBuilder(Problem::edges, 2, 2).edge(0, 1).build();
    EXPECT_THROW(kernelize(mhe), ContractError);
    auto mhv = InstanceBuilder(Problem::vertices, 2, 2).edge(0, 1).target(1).build();
    EXPECT_THROW(kernelize(mhv), ContractError);
}

TEST(KernelProperties, DecisionAndSize) {
    Rng rng(62);
    testing::RandomSpec spec;
    int reduced = 0;
    for (int round = 0; round < 600; ++round) {
        auto inst = testing::random_instance(rng, spec);
        auto opt = solve_brute(inst).happy_weight;
        const Weight total = inst.total_edge_weight();
        Weight ell = testing::uniform_int(rng, 1, static_cast<int>(std::max<Weight>(1, total)));
        auto out = kernelize(inst, ell);
        bool yes = false;
        if (const auto* d = std::get_if<Decided>(&out)) {
            yes = d->answer == Answer::yes;
            if (d->witness) {
                auto value = evaluate_objective(inst, *d->witness);
                EXPECT_TRUE(yes ? value >= ell : value == opt) << round;
            }
        } else {
            ++reduced;
            const auto& r = std::get<Reduced>(out);
            const int free = r.kernel.uncolored_count();
            EXPECT_LE(r.kernel.n() - free, inst.k);
            EXPECT_LE(free, r.remaining_target - 1);
            EXPECT_LE(r.remaining_target, ell);
            auto kernel_best = solve_brute(without_target(r.kernel));
            yes = kernel_best.happy_weight >= r.remaining_target;
            auto lifted = r.trace.lift(kernel_best.coloring);
            EXPECT_EQ(evaluate_objective(inst, lifted), kernel_best.happy_weight + r.trace.total_decrement);
            EXPECT_EQ(evaluate_objective(inst, lifted), opt) << round;
        }
        ASSERT_EQ(yes, opt >= ell) << round;
        auto decision = decide_with_kernel(inst, ell);
        EXPECT_EQ(decision.yes, opt >= ell);
        if (decision.witness && decision.yes) {
            EXPECT_GE(decision.witness->happy_weight, ell);
        }
    }
    EXPECT_GT(reduced, 20);
}

TEST(KernelProperties, SolveKernelExactMatchesOracle) {
    Rng rng(63);
    testing::RandomSpec spec;
    for (int round = 0; round < 300; ++round) {
        auto inst = testing::random_instance(rng, spec);
        auto s = solve_kernel_exact(inst);
        ASSERT_EQ(s.happy_weight, solve_brute(inst).happy_weight) << round;
        ASSERT_EQ(evaluate_objective(inst, s.coloring), s.happy_weight);
    }
}

}  // namespace
}  // namespace happy
