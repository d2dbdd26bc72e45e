#include "ctp/oracle.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctp/io.hpp"

namespace ctp {
namespace {

std::string fixture(const std::string& name) {
    return std::string(CTP_FIXTURE_DIR) + "/" + name;
}

// Independent oracle: enumerate every simple path by depth-first search and
// keep the cheapest (ties: lexicographically smallest vertex sequence).
struct BrutePath {
    std::optional<Rat> cost;
    std::vector<int> path;
};

std::vector<std::string> nameSeq(const WeightedGraph& g, const std::vector<int>& p) {
    std::vector<std::string> out;
    for (int v : p) out.push_back(g.nameOf(v));
    return out;
}

void bruteDfs(const WeightedGraph& g, const std::set<int>& blocked, int at, int t, Rat sofar,
              std::vector<int>& cur, std::set<int>& used, BrutePath& best) {
    if (at == t) {
        if (!best.cost || sofar < *best.cost ||
            (sofar == *best.cost && nameSeq(g, cur) < nameSeq(g, best.path))) {
            best.cost = sofar;
            best.path = cur;
        }
        return;
    }
    for (auto [w, eid] : g.neighbors(at)) {
        if (blocked.count(eid) || used.count(w)) continue;
        used.insert(w);
        cur.push_back(w);
        bruteDfs(g, blocked, w, t, sofar + g.weight(eid), cur, used, best);
        cur.pop_back();
        used.erase(w);
    }
}

BrutePath brutePath(const WeightedGraph& g, const std::set<int>& blocked, int s, int t) {
    BrutePath best;
    std::vector<int> cur{s};
    std::set<int> used{s};
    bruteDfs(g, blocked, s, t, Rat(0), cur, used, best);
    return best;
}

TEST(Oracle, MatchesPathEnumerationOnReferenceInstances) {
    for (const char* name : {"fig5.json", "fig6.json"}) {
        RoadMap rm = readInstance(fixture(name));
        const WeightedGraph& g = rm.graph;
        int s = g.indexOf(rm.source), t = g.indexOf(rm.target);
        for (const std::set<int>& blocked :
             {std::set<int>{}, rm.blocked}) {
            DistanceResult got = shortestDistance(g, blocked, s, t);
            BrutePath want = brutePath(g, blocked, s, t);
            ASSERT_EQ(got.reachable(), want.cost.has_value());
            if (want.cost) {
                EXPECT_EQ(*got.cost, *want.cost) << name;
                EXPECT_EQ(got.path, want.path) << name;
            }
        }
    }
}

TEST(Oracle, MatchesPathEnumerationOnWeightedTriangle) {
    WeightedGraph g;
    int s = g.addVertex("s");
    int u = g.addVertex("u");
    int t = g.addVertex("t");
    g.addEdge(s, t, Rat(2));
    g.addEdge(s, u, Rat(1));
    int ut = g.addEdge(u, t, Rat(1, 100));
    DistanceResult direct = shortestDistance(g, {}, s, t);
    EXPECT_EQ(*direct.cost, Rat(101, 100));
    EXPECT_EQ(direct.path, (std::vector<int>{s, u, t}));
    DistanceResult detour = shortestDistance(g, {ut}, s, t);
    EXPECT_EQ(*detour.cost, Rat(2));
    BrutePath want = brutePath(g, {ut}, s, t);
    EXPECT_EQ(*detour.cost, *want.cost);
}

TEST(Oracle, BreaksCostTiesLexicographically) {
    // Two disjoint unit paths of equal cost; a < b in insertion order.
    WeightedGraph g;
    int s = g.addVertex("s");
    int a = g.addVertex("a");
    int b = g.addVertex("b");
    int t = g.addVertex("t");
    g.addEdge(s, a, Rat(1));
    g.addEdge(a, t, Rat(1));
    g.addEdge(s, b, Rat(1));
    g.addEdge(b, t, Rat(1));
    DistanceResult got = shortestDistance(g, {}, s, t);
    EXPECT_EQ(*got.cost, Rat(2));
    EXPECT_EQ(got.path, (std::vector<int>{s, a, t}));
    EXPECT_EQ(got.path, brutePath(g, {}, s, t).path);
}

TEST(Oracle, ReportsUnreachable) {
    WeightedGraph g;
    int s = g.addVertex("s");
    int m = g.addVertex("m");
    int t = g.addVertex("t");
    int sm = g.addEdge(s, m, Rat(1));
    g.addEdge(m, t, Rat(1));
    EXPECT_TRUE(isFeasible(g, s, t, {}));
    EXPECT_FALSE(isFeasible(g, s, t, {sm}));
    DistanceResult res = shortestDistance(g, {sm}, s, t);
    EXPECT_FALSE(res.reachable());
    EXPECT_FALSE(res.cost.has_value());
}

TEST(Oracle, RestrictsToComponentWhenAsked) {
    RoadMap fig5 = readInstance(fixture("fig5.json"));
    const WeightedGraph& g = fig5.graph;
    int s = g.indexOf("s"), t = g.indexOf("t1");
    std::set<int> upperOnly{s, g.indexOf("u1t"), g.indexOf("u2t"), t};
    DistanceResult res = shortestDistance(g, fig5.blocked, s, t, &upperOnly);
    // With u1t-t1 blocked and the lower arc out of bounds, only the full
    // upper arc remains.
    EXPECT_EQ(*res.cost, Rat(3));
}

TEST(Oracle, OptCostHonoursBlockages) {
    RoadMap fig5 = readInstance(fixture("fig5.json"));
    EXPECT_EQ(optCost(fig5), Rat(2));
    RoadMap fig6 = readInstance(fixture("fig6.json"));
    EXPECT_EQ(optCost(fig6), Rat(6));
    // Make the target unreachable: cutting every edge at t1 must error.
    RoadMap dead = fig5;
    dead.blocked = {dead.graph.edgeIdOrFail("u2t", "t1"), dead.graph.edgeIdOrFail("u2b", "t1"),
                    dead.graph.edgeIdOrFail("u1t", "t1"), dead.graph.edgeIdOrFail("u1b", "t1")};
    try {
        optCost(dead);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasibleRoadMap);
    }
}

TEST(Oracle, StretchIsMaxOverMinWeight) {
    WeightedGraph g;
    int a = g.addVertex("a");
    int b = g.addVertex("b");
    int c = g.addVertex("c");
    g.addEdge(a, b, Rat(1, 2));
    g.addEdge(b, c, Rat(5));
    EXPECT_EQ(stretch(g), Rat(10));
    RoadMap fig5 = readInstance(fixture("fig5.json"));
    EXPECT_EQ(stretch(fig5.graph), Rat(1));
    WeightedGraph empty;
    empty.addVertex("x");
    try {
        stretch(empty);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooSmall);
    }
}

}  // namespace
}  // namespace ctp
