#include "happy/diversity.hpp"
#include "happy/io.hpp"
#include "happy/oracle.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <set>

namespace happy {
namespace {

using testing::Rng;

// Direct reading of the definition: N(u)\{v} = N(v)\{u}.
bool same_type(const Instance& inst, Vertex u, Vertex v) {
    for (Vertex w = 0; w < inst.n(); ++w) {
        if (w != u && w != v && inst.graph.adjacent(u, w) != inst.graph.adjacent(v, w)) {
            return false;
        }
    }
    return true;
}

// Weighted MHE classes: members also agree on the weight toward each vertex outside the class.
bool weights_agree(const Instance& inst, const std::vector<Vertex>& members) {
    std::vector<bool> inside(static_cast<std::size_t>(inst.n()), false);
    for (Vertex v : members) {
        inside[static_cast<std::size_t>(v)] = true;
    }
    for (Vertex w = 0; w < inst.n(); ++w) {
        if (inside[static_cast<std::size_t>(w)]) {
            continue;
        }
        std::set<Weight> seen;
        for (Vertex v : members) {
            int e = inst.graph.edge_index(v, w);
            seen.insert(e < 0 ? 0 : inst.edge_weight[static_cast<std::size_t>(e)]);
        }
        if (seen.size() > 1) {
            return false;
        }
    }
    return true;
}

void expect_valid_classes(const Instance& inst, const TypePartition& tp) {
    for (std::size_t c = 0; c < tp.classes.size(); ++c) {
        const auto& cls = tp.classes[c];
        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            EXPECT_EQ(tp.class_of[static_cast<std::size_t>(cls.members[i])], static_cast<int>(c));
            EXPECT_EQ(inst.is_precolored(cls.members[i]), cls.precolored);
            for (std::size_t j = i + 1; j < cls.members.size(); ++j) {
                EXPECT_TRUE(same_type(inst, cls.members[i], cls.members[j]));
                EXPECT_EQ(inst.graph.adjacent(cls.members[i], cls.members[j]), cls.clique);
            }
        }
    }
}

// Plain types: the classes are exactly the same-type relation split by precolored status.
void expect_coarsest(const Instance& inst, const TypePartition& tp) {
    expect_valid_classes(inst, tp);
    for (Vertex u = 0; u < inst.n(); ++u) {
        for (Vertex v = u + 1; v < inst.n(); ++v) {
            bool together = tp.class_of[static_cast<std::size_t>(u)] == tp.class_of[static_cast<std::size_t>(v)];
            bool should = same_type(inst, u, v) && inst.is_precolored(u) == inst.is_precolored(v);
            EXPECT_EQ(together, should) << u + 1 << " " << v + 1;
        }
    }
}

// Weighted MHE types: valid classes with agreeing weights, and no two classes that
// could be merged into a larger valid one.
void expect_coarsest_weighted(const Instance& inst, const TypePartition& tp) {
    expect_valid_classes(inst, tp);
    for (const auto& cls : tp.classes) {
        EXPECT_TRUE(weights_agree(inst, cls.members));
    }
    for (std::size_t a = 0; a < tp.classes.size(); ++a) {
        for (std::size_t b = a + 1; b < tp.classes.size(); ++b) {
            const auto& x = tp.classes[a];
            const auto& y = tp.classes[b];
            if (x.precolored != y.precolored) {
                continue;
            }
            auto merged = x.members;
            merged.insert(merged.end(), y.members.begin(), y.members.end());
            bool mergeable = weights_agree(inst, merged);
            for (std::size_t i = 0; i < merged.size() && mergeable; ++i) {
                for (std::size_t j = i + 1; j < merged.size() && mergeable; ++j) {
                    mergeable = same_type(inst, merged[i], merged[j]) &&
                                inst.graph.adjacent(merged[i], merged[j]) == inst.graph.adjacent(merged[0], merged[1]);
                }
            }
            EXPECT_FALSE(mergeable) << "classes " << a << " and " << b;
        }
    }
}

Instance complete(Problem problem, int n, int k) {
    InstanceBuilder b(problem, n, k);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            b.edge(u, v);
        }
    }
    return b.build();
}

TEST(TypePartition, CompleteGraphIsOneClass) {
    auto inst = complete(Problem::edges, 5, 2);
    auto tp = type_partition(inst.graph, inst.precolor);
    ASSERT_EQ(tp.classes.size(), 1u);
    EXPECT_TRUE(tp.classes[0].clique);
    EXPECT_EQ(tp.diversity, 1);
}

TEST(TypePartition, StarHasTwoClasses) {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<Color> none(4, kUncolored);
    auto tp = type_partition(star, none);
    ASSERT_EQ(tp.classes.size(), 2u);
    EXPECT_EQ(tp.classes[0].members, std::vector<Vertex>{0});
    EXPECT_EQ(tp.classes[1].members, (std::vector<Vertex>{1, 2, 3}));
    EXPECT_FALSE(tp.classes[1].clique);
}

TEST(TypePartition, DistinctNeighborhoodsAreSingletons) {
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    std::vector<Color> none(5, kUncolored);
    auto tp = type_partition(path, none);
    EXPECT_EQ(tp.classes.size(), 5u);
    EXPECT_EQ(tp.diversity, 5);
}

TEST(TypePartition, SplitsByPrecoloredStatus) {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<Color> colors{kUncolored, 1, kUncolored, 2};
    auto tp = type_partition(star, colors);
    EXPECT_EQ(tp.diversity, 2);
    EXPECT_EQ(tp.classes.size(), 3u);
}

TEST(NdReduce, CompleteGraphOnePrecolorMhe) {
    for (int n = 2; n <= 6; ++n) {
        auto base = complete(Problem::edges, n, 3);
        base.precolor[0] = 2;
        auto red = nd_reduce_mhe(base, type_partition(base));
        ASSERT_EQ(red.reduced.n(), 2);
        ASSERT_EQ(red.reduced.m(), 1);
        EXPECT_EQ(red.reduced.edge_weight[0], n - 1);
        EXPECT_EQ(red.constant, (n - 1) * (n - 2) / 2);
        EXPECT_EQ(solve_brute(red.reduced).happy_weight + red.constant, solve_brute(base).happy_weight);
    }
}

TEST(NdReduce, AllPrecolored) {
    auto inst = InstanceBuilder(Problem::edges, 4, 2)
                    .edge(0, 1)
                    .edge(1, 2)
                    .edge(2, 3)
                    .color(0, 1)
                    .color(1, 1)
                    .color(2, 2)
                    .color(3, 2)
                    .build();
    auto red = nd_reduce_mhe(inst, type_partition(inst));
    EXPECT_EQ(red.reduced.uncolored_count(), 0);
    EXPECT_EQ(solve_brute(red.reduced).happy_weight + red.constant, 2);
}

TEST(NdReduce, StarLeavesMerge) {
    auto inst = InstanceBuilder(Problem::edges, 4, 2).edge(0, 1).edge(0, 2).edge(0, 3).color(0, 1).build();
    auto red = nd_reduce_mhe(inst, type_partition(inst));
    ASSERT_EQ(red.reduced.n(), 2);
    ASSERT_EQ(red.reduced.m(), 1);
    EXPECT_EQ(red.reduced.edge_weight[0], 3);
    EXPECT_EQ(red.constant, 0);
}

TEST(NdReduce, CompleteGraphOnePrecolorMhv) {
    for (int n = 2; n <= 6; ++n) {
        auto base = complete(Problem::vertices, n, 3);
        base.precolor[0] = 1;
        auto red = nd_reduce_mhv(base, type_partition(base));
        ASSERT_EQ(red.reduced.n(), 2);
        EXPECT_EQ(red.reduced.m(), 1);
        EXPECT_EQ(solve_brute(red.reduced).happy_weight, n);
        EXPECT_EQ(solve_nd(base).happy_weight, n);
    }
}

TEST(NdReduce, EdgelessMhv) {
    auto inst = InstanceBuilder(Problem::vertices, 4, 2).weighted().vertex_weight(0, 3).vertex_weight(2, 5).color(1, 2).build();
    auto red = nd_reduce_mhv(inst, type_partition(inst));
    EXPECT_EQ(red.reduced.total_vertex_weight(), inst.total_vertex_weight());
    EXPECT_EQ(solve_nd(inst).happy_weight, inst.total_vertex_weight());
}

TEST(SolveNd, DisjointCliquesGoMonochromatic) {
    // Three triangles, each with one precolored vertex.
    InstanceBuilder b(Problem::edges, 9, 3);
    for (int t = 0; t < 3; ++t) {
        b.edge(3 * t, 3 * t + 1).edge(3 * t + 1, 3 * t + 2).edge(3 * t, 3 * t + 2).color(3 * t, t + 1);
    }
    auto inst = b.build();
    auto s = solve_nd(inst);
    EXPECT_EQ(s.happy_weight, 9);
    for (int t = 0; t < 3; ++t) {
        EXPECT_EQ(s.coloring[static_cast<std::size_t>(3 * t + 1)], t + 1);
        EXPECT_EQ(s.coloring[static_cast<std::size_t>(3 * t + 2)], t + 1);
    }
}

TEST(DiversityProperties, CoarsestAndValid) {
    Rng rng(81);
    for (int round = 0; round < 300; ++round) {
        auto problem = round % 2 == 0 ? Problem::edges : Problem::vertices;
        auto inst = round % 3 == 0 ? testing::random_instance(rng, {problem})
                                   : testing::blown_up_instance(rng, problem, true, 10, {2, 3, 4});
        SCOPED_TRACE(instance_text(inst));
        {
            SCOPED_TRACE("plain");
            expect_coarsest(inst, type_partition(inst.graph, inst.precolor));
        }
        {
            SCOPED_TRACE("weighted");
            if (problem == Problem::edges) {
                expect_coarsest_weighted(inst, type_partition(inst));
            } else {
                expect_coarsest(inst, type_partition(inst));
            }
        }
    }
}

TEST(DiversityProperties, SolveNdMatchesOracle) {
    Rng rng(82);
    testing::RandomSpec spec;
    for (int round = 0; round < 400; ++round) {
        auto problem = round % 2 == 0 ? Problem::edges : Problem::vertices;
        spec.problem = problem;
        auto inst = round % 4 == 0 ? testing::random_instance(rng, spec)
                                   : testing::blown_up_instance(rng, problem, round % 3 != 0, 10, {2, 3, 4});
        auto s = solve_nd(inst);
        ASSERT_EQ(s.happy_weight, solve_brute(inst).happy_weight) << round;
        ASSERT_EQ(evaluate_objective(inst, s.coloring), s.happy_weight);
    }
}

// Some optimum keeps every free class monochromatic: search only those colorings.
TEST(DiversityProperties, ClassMonochromaticOptimumExists) {
    Rng rng(83);
    for (int round = 0; round < 200; ++round) {
        auto problem = round % 2 == 0 ? Problem::edges : Problem::vertices;
        auto inst = testing::blown_up_instance(rng, problem, true, 9, {2, 3});
        auto tp = type_partition(inst);
        std::vector<int> free_classes;
        for (std::size_t c = 0; c < tp.classes.size(); ++c) {
            if (!tp.classes[c].precolored) {
                free_classes.push_back(static_cast<int>(c));
            }
        }
        Weight best = -1;
        std::vector<int> digits(free_classes.size(), 1);
        while (true) {
            auto coloring = inst.precolor;
            for (std::size_t i = 0; i < free_classes.size(); ++i) {
                for (Vertex v : tp.classes[static_cast<std::size_t>(free_classes[i])].members) {
                    coloring[static_cast<std::size_t>(v)] = digits[i];
                }
            }
            best = std::max(best, evaluate_objective(inst, coloring));
            std::size_t i = 0;
            while (i < digits.size() && digits[i] == inst.k) {
                digits[i++] = 1;
            }
            if (i == digits.size()) {
                break;
            }
            ++digits[i];
        }
        EXPECT_EQ(best, solve_brute(inst).happy_weight) << round;
    }
}

}  // namespace
}  // namespace happy
