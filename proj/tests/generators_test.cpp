#include "ctp/generators.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "ctp/io.hpp"
#include "ctp/oracle.hpp"
#include "ctp/reposition.hpp"

namespace ctp {
namespace {

template <typename Fn>
void expectCode(Fn fn, ErrorCode code) {
    try {
        fn();
        FAIL() << "expected error " << static_cast<int>(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code);
    }
}

TEST(Generators, WestphalShapeAndBoundary) {
    for (int k : {1, 2, 3, 4}) {
        RoadMap rm = genWestphal(k, Rat(1, 10));
        const WeightedGraph& g = rm.graph;
        EXPECT_EQ(g.vertexCount(), k + 3) << k;
        EXPECT_EQ(g.edgeCount(), 2 * (k + 1)) << k;
        EXPECT_EQ(*rm.k, k);
        EXPECT_EQ(rm.universe->size(), static_cast<size_t>(k + 1));
        for (int eid : *rm.universe) EXPECT_EQ(g.weight(eid), Rat(1, 10));
        EXPECT_TRUE(validate(g, rm.embedding).ok()) << "k=" << k;
        // Both boundary parities: every consecutive pair is an edge.
        const auto& b = rm.embedding.boundary;
        for (size_t i = 0; i < b.size(); ++i) {
            const auto& u = b[i];
            const auto& v = b[(i + 1) % b.size()];
            EXPECT_TRUE(g.edgeBetween(g.indexOf(u), g.indexOf(v)).has_value())
                << u << "-" << v << " k=" << k;
        }
    }
    expectCode([] { genWestphal(0, Rat(1, 10)); }, ErrorCode::UsageError);
    expectCode([] { genWestphal(2, Rat(0)); }, ErrorCode::UsageError);
}

TEST(Generators, ShellShapeAndBudget) {
    for (int n : {2, 3, 5, 8}) {
        RoadMap rm = genShell(n);
        const WeightedGraph& g = rm.graph;
        EXPECT_EQ(g.vertexCount(), 2 * n);
        EXPECT_EQ(g.edgeCount(), 2 * n + (2 * n - 4));
        EXPECT_EQ(rm.universe->size(), static_cast<size_t>(2 * n - 4));
        EXPECT_EQ(*rm.k, 2 * n - 3);
        EXPECT_EQ(rm.source, "v0");
        EXPECT_EQ(rm.target, "v" + std::to_string(n));
        EXPECT_TRUE(validate(g, rm.embedding).ok()) << n;
        // Every universe edge is a chord into the target.
        int t = g.indexOf(rm.target);
        for (int eid : *rm.universe) {
            const auto& e = g.edges()[eid];
            EXPECT_TRUE(e.u == t || e.v == t);
        }
    }
    expectCode([] { genShell(1); }, ErrorCode::UsageError);
}

TEST(Generators, BudgetSequences) {
    EXPECT_EQ(doublingBudgets(5), (std::vector<long>{1, 2, 4, 8, 16}));
    EXPECT_EQ(linearBudgets(4), (std::vector<long>{1, 2, 3, 4}));
}

TEST(Generators, ShellAdversaryStaysFeasibleAndInBudget) {
    RoadMap shell = genShell(12);
    BudgetSequenceStrategy strat(shell.graph, shell.embedding,
                                 shell.graph.indexOf(shell.source),
                                 shell.graph.indexOf(shell.target), doublingBudgets(8));
    ShellAdversary adv(shell);
    SimulationResult res = simulate(strat, shell, 1000000, &adv);
    ASSERT_EQ(res.outcome, SimulationResult::Outcome::ReachedTarget);
    EXPECT_EQ(static_cast<long>(res.realizedBlocked.size()), adv.blockedCount());
    EXPECT_LE(adv.blockedCount(), static_cast<long>(*shell.k));
    EXPECT_TRUE(isFeasible(shell.graph, shell.graph.indexOf(shell.source),
                           shell.graph.indexOf(shell.target), res.realizedBlocked));
}

TEST(Generators, SequenceTableMatchesTheRecurrence) {
    auto rows = lbSequences(6, Rat(1, 10));
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].S, Int(2));
    EXPECT_EQ(rows[0].N, Int(2));
    EXPECT_EQ(rows[0].k, Int(1));
    EXPECT_EQ(rows[1].S, Int(6));
    EXPECT_EQ(rows[1].N, Int(6));
    EXPECT_EQ(rows[1].k, Int(12));
    EXPECT_EQ(rows[2].S, Int(24));
    EXPECT_EQ(rows[2].N, Int(12));
    EXPECT_EQ(rows[2].k, Int(156));
    for (const auto& row : rows) {
        EXPECT_EQ(row.r, Rat(row.i + 1));
        EXPECT_EQ(row.rEps, Rat(row.i + 1) - Rat(1, 10));
        EXPECT_LE(row.k, row.S * row.S);  // budget never outgrows ((i+1)!)^2
    }
    expectCode([] { lbSequences(0, Rat(1, 10)); }, ErrorCode::UsageError);
}

TEST(Generators, WeightedFamilyBaseCase) {
    RoadMap h1 = genWeightedFamily(1, Rat(1, 100));
    EXPECT_EQ(h1.graph.vertexCount(), 3);
    EXPECT_EQ(h1.graph.edgeCount(), 3);
    EXPECT_EQ(h1.graph.weight(h1.graph.edgeIdOrFail("s", "t")), Rat(2));
    EXPECT_EQ(h1.graph.weight(h1.graph.edgeIdOrFail("s", "u")), Rat(1));
    EXPECT_EQ(h1.graph.weight(h1.graph.edgeIdOrFail("u", "t")), Rat(1, 100));
    EXPECT_EQ(*h1.k, 1);
    EXPECT_EQ(h1.universe->size(), 1u);
    EXPECT_TRUE(validate(h1.graph, h1.embedding).ok());
}

TEST(Generators, WeightedFamilySecondStep) {
    RoadMap h2 = genWeightedFamily(2);
    EXPECT_EQ(h2.name, "H2");
    EXPECT_EQ(h2.graph.vertexCount(), 14);
    EXPECT_EQ(h2.graph.edgeCount(), 25);
    EXPECT_EQ(*h2.k, 12);
    EXPECT_TRUE(validate(h2.graph, h2.embedding).ok());
    // The direct s-t edge carries the sequence weight S_2 = 6 and is the
    // strict maximum.
    int top = h2.graph.edgeIdOrFail(h2.source, h2.target);
    EXPECT_EQ(h2.graph.weight(top), Rat(6));
    for (int e = 0; e < h2.graph.edgeCount(); ++e)
        if (e != top) EXPECT_LT(h2.graph.weight(e), Rat(6));
    // One side of the boundary is empty: s and t are boundary-adjacent.
    Sides sd = sides(h2.graph, h2.embedding, h2.source, h2.target);
    EXPECT_TRUE(sd.upper.empty() || sd.lower.empty());
    expectCode([] { genWeightedFamily(0); }, ErrorCode::UsageError);
    expectCode([] { genWeightedFamily(2, Rat(1)); }, ErrorCode::UsageError);
}

TEST(Generators, ChainTransformRejectsBalancedInputs) {
    // No direct s-t edge.
    RoadMap diamond;
    diamond.graph.addVertex("s");
    diamond.graph.addVertex("a");
    diamond.graph.addVertex("t");
    diamond.graph.addVertex("b");
    diamond.graph.addEdge("s", "a", Rat(1));
    diamond.graph.addEdge("a", "t", Rat(1));
    diamond.graph.addEdge("s", "b", Rat(1));
    diamond.graph.addEdge("b", "t", Rat(1));
    diamond.embedding.boundary = {"s", "a", "t", "b"};
    diamond.source = "s";
    diamond.target = "t";
    diamond.k = 1;
    expectCode([&] { transformT(diamond, Rat(6), 6, Rat(1, 100)); },
               ErrorCode::NotUnbalanced);

    // Direct edge exists but is not the heaviest route.
    RoadMap tri = genWeightedFamily(1);
    RoadMap cheapTop = tri;
    {
        WeightedGraph g;
        for (int v = 0; v < tri.graph.vertexCount(); ++v) g.addVertex(tri.graph.nameOf(v));
        g.addEdge("s", "t", Rat(1, 200));  // now cheaper than s-u-t
        g.addEdge("s", "u", Rat(1));
        g.addEdge("u", "t", Rat(1, 100));
        cheapTop.graph = g;
    }
    expectCode([&] { transformT(cheapTop, Rat(6), 6, Rat(1, 100)); },
               ErrorCode::NotUnbalanced);

    // Missing budget.
    RoadMap noBudget = genWeightedFamily(1);
    noBudget.k.reset();
    expectCode([&] { transformT(noBudget, Rat(6), 6, Rat(1, 100)); },
               ErrorCode::UsageError);
}

TEST(Generators, RandomInstancesValidateAndStayBounded) {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        RoadMap rm = randomOuterplanar(seed);
        EXPECT_TRUE(validate(rm.graph, rm.embedding).ok()) << seed;
        EXPECT_LE(rm.graph.vertexCount(), 12) << seed;
        EXPECT_GE(rm.graph.vertexCount(), 4) << seed;
        ASSERT_TRUE(rm.universe.has_value());
        EXPECT_LE(rm.universe->size(), 8u) << seed;
        EXPECT_EQ(*rm.k, static_cast<int>(rm.universe->size()));
        for (const auto& e : rm.graph.edges()) EXPECT_EQ(e.w, Rat(1));
    }
    expectCode([] { randomOuterplanar(1, 3); }, ErrorCode::UsageError);
}

TEST(Generators, RandomInstancesAreDeterministicPerSeed) {
    for (uint64_t seed : {7u, 99u, 123456u}) {
        RoadMap a = randomOuterplanar(seed);
        RoadMap b = randomOuterplanar(seed);
        EXPECT_EQ(instanceToJson(a).dump(), instanceToJson(b).dump()) << seed;
    }
    RoadMap a = randomOuterplanar(7);
    RoadMap b = randomOuterplanar(8);
    EXPECT_NE(instanceToJson(a).dump(), instanceToJson(b).dump());
}

TEST(Generators, RandomWeightsKeepTopologyAndUniverse) {
    bool sawNonUnit = false;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        RoadMap plain = randomOuterplanar(seed);
        RoadMap heavy = randomOuterplanar(seed, 12, true);
        EXPECT_TRUE(validate(heavy.graph, heavy.embedding).ok()) << seed;
        ASSERT_EQ(heavy.graph.edgeCount(), plain.graph.edgeCount());
        for (int e = 0; e < plain.graph.edgeCount(); ++e) {
            EXPECT_EQ(heavy.graph.edges()[e].u, plain.graph.edges()[e].u);
            EXPECT_EQ(heavy.graph.edges()[e].v, plain.graph.edges()[e].v);
            if (heavy.graph.edges()[e].w != Rat(1)) sawNonUnit = true;
            EXPECT_GT(heavy.graph.edges()[e].w, Rat(0));
        }
        EXPECT_EQ(*heavy.universe, *plain.universe) << seed;
    }
    EXPECT_TRUE(sawNonUnit);
}

}  // namespace
}  // namespace ctp
