#include "ctp/reposition.hpp"

#include <gtest/gtest.h>

#include <string>

#include "ctp/generators.hpp"
#include "ctp/io.hpp"
#include "ctp/worstcase.hpp"

namespace ctp {
namespace {

std::string fixture(const std::string& name) {
    return std::string(CTP_FIXTURE_DIR) + "/" + name;
}

StrategyFactory repositionFactory() {
    return [](const RoadMap& rm) -> std::unique_ptr<Strategy> {
        return std::make_unique<Reposition>(rm.graph, rm.graph.indexOf(rm.source),
                                            rm.graph.indexOf(rm.target));
    };
}

TEST(Reposition, WalksTheShortestPathWhenNothingIsBlocked) {
    RoadMap rm = genWestphal(3, Rat(1, 10));
    Reposition strat(rm.graph, rm.graph.indexOf(rm.source), rm.graph.indexOf(rm.target));
    SimulationResult res = simulate(strat, rm);
    ASSERT_EQ(res.outcome, SimulationResult::Outcome::ReachedTarget);
    EXPECT_EQ(competitiveRatio(res, rm), Rat(1));
}

TEST(Reposition, RetreatsToTheSourceAndReroutes) {
    RoadMap rm = readInstance(fixture("fig5.json"));
    Reposition strat(rm.graph, rm.graph.indexOf(rm.source), rm.graph.indexOf(rm.target));
    SimulationResult res = simulate(strat, rm);
    ASSERT_EQ(res.outcome, SimulationResult::Outcome::ReachedTarget);
    EXPECT_LE(competitiveRatio(res, rm), Rat(3));  // 2k+1 with k = 1
}

TEST(Reposition, WorstCaseOnLensStaysUnderThree) {
    RoadMap rm = readInstance(fixture("fig5.json"));
    rm.blocked.clear();  // the universe defaults to every edge, budget k = 1
    WorstCaseResult wr = exhaustiveWorstRatio(repositionFactory(), rm);
    EXPECT_LE(wr.ratio, Rat(3));
}

TEST(Reposition, AdversaryBlocksTheFirstTwoShortcuts) {
    Rat eps(1, 10);
    RoadMap rm = genWestphal(2, eps);
    WorstCaseResult wr = exhaustiveWorstRatio(repositionFactory(), rm);
    Rat expected = (Rat(5) + eps) / (Rat(1) + eps);
    expected.canonicalize();
    EXPECT_EQ(wr.ratio, expected);
    // The argmax: the two shortcuts the strategy tries first.
    EXPECT_EQ(wr.blocked, (std::set<int>{rm.graph.edgeIdOrFail("v1", "t"),
                                         rm.graph.edgeIdOrFail("v2", "t")}));
    // Replay that configuration: out-and-back twice, then the open shortcut.
    RoadMap worst = rm;
    worst.blocked = wr.blocked;
    Reposition strat(worst.graph, worst.graph.indexOf("s"), worst.graph.indexOf("t"));
    SimulationResult res = simulate(strat, worst);
    EXPECT_EQ(res.traversed, Rat(5) + eps);
}

TEST(Reposition, BudgetSequenceAgainstTheShellAdversary) {
    RoadMap shell = genShell(20);
    BudgetSequenceStrategy strat(shell.graph, shell.embedding,
                                 shell.graph.indexOf(shell.source),
                                 shell.graph.indexOf(shell.target), linearBudgets(11));
    ShellAdversary adv(shell);
    SimulationResult res = simulate(strat, shell, 1000000, &adv);
    ASSERT_EQ(res.outcome, SimulationResult::Outcome::ReachedTarget);
    EXPECT_EQ(competitiveRatio(res, shell), Rat(11));
    EXPECT_LE(adv.blockedCount(), static_cast<long>(*shell.k));
}

}  // namespace
}  // namespace ctp
