#ifndef CTP_WORSTCASE_HPP
#define CTP_WORSTCASE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctp/engine.hpp"
#include "ctp/error.hpp"
#include "ctp/graph.hpp"
#include "ctp/oracle.hpp"
#include "ctp/rational.hpp"

namespace ctp {

using StrategyFactory = std::function<std::unique_ptr<Strategy>(const RoadMap&)>;

namespace detail {

inline std::vector<int> universeOf(const RoadMap& rm) {
    std::vector<int> u;
    if (rm.universe) {
        u.assign(rm.universe->begin(), rm.universe->end());
    } else {
        for (int e = 0; e < rm.graph.edgeCount(); ++e) u.push_back(e);
    }
    return u;
}

inline long budgetOf(const RoadMap& rm, size_t universeSize) {
    return rm.k ? *rm.k : static_cast<long>(universeSize);
}

}  // namespace detail

// All inclusion-maximal blockage sets: feasible subsets of the universe, of
// size at most k, that cannot be grown within those limits.
inline std::vector<std::set<int>> maximalFeasibleBlockages(const RoadMap& rm) {
    std::vector<int> universe = detail::universeOf(rm);
    long k = detail::budgetOf(rm, universe.size());
    int m = static_cast<int>(universe.size());
    if (m > 20) fail(ErrorCode::TooManyConfigurations, "universe too large to enumerate");
    int s = rm.graph.indexOf(rm.source), t = rm.graph.indexOf(rm.target);
    std::vector<std::set<int>> feasible;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        if (static_cast<long>(__builtin_popcountl(mask)) > k) continue;
        std::set<int> B;
        for (int i = 0; i < m; ++i)
            if (mask & (1UL << i)) B.insert(universe[i]);
        if (isFeasible(rm.graph, s, t, B)) feasible.push_back(std::move(B));
    }
    std::vector<std::set<int>> maximal;
    for (size_t i = 0; i < feasible.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < feasible.size() && !dominated; ++j) {
            if (i == j || feasible[j].size() <= feasible[i].size()) continue;
            dominated = std::includes(feasible[j].begin(), feasible[j].end(),
                                      feasible[i].begin(), feasible[i].end());
        }
        if (!dominated) maximal.push_back(feasible[i]);
    }
    return maximal;
}

struct WorstCaseResult {
    Rat ratio;
    std::set<int> blocked;  // first argmax in enumeration order
    long configs = 0;       // feasible configurations simulated
};

// Exact worst case of a deterministic strategy over every feasible blockage
// configuration drawn from the road map's universe.
inline WorstCaseResult exhaustiveWorstRatio(const StrategyFactory& factory, const RoadMap& rm,
                                            long stepLimit = 1000000) {
    std::vector<int> universe = detail::universeOf(rm);
    std::sort(universe.begin(), universe.end());
    long k = detail::budgetOf(rm, universe.size());
    int m = static_cast<int>(universe.size());
    double total = 0;
    double binom = 1;
    for (int i = 0; i <= std::min<long>(k, m); ++i) {
        total += binom;
        binom = binom * (m - i) / (i + 1);
    }
    if (m > 62 || total > 1e6)
        fail(ErrorCode::TooManyConfigurations, "too many blockage configurations");
    int s = rm.graph.indexOf(rm.source), t = rm.graph.indexOf(rm.target);

    WorstCaseResult best;
    best.ratio = Rat(0);
    bool any = false;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        if (static_cast<long>(__builtin_popcountl(mask)) > k) continue;
        std::set<int> B;
        for (int i = 0; i < m; ++i)
            if (mask & (1UL << i)) B.insert(universe[i]);
        if (!isFeasible(rm.graph, s, t, B)) continue;
        RoadMap probe = rm;
        probe.blocked = B;
        auto strat = factory(probe);
        auto res = simulate(*strat, probe, stepLimit);
        if (res.outcome != SimulationResult::Outcome::ReachedTarget)
            fail(ErrorCode::StrategyFault,
                 "strategy failed on " + rm.name + " with |blocked|=" +
                     std::to_string(B.size()));
        Rat ratio = competitiveRatio(res, probe);
        ++best.configs;
        if (!any || ratio > best.ratio) {
            any = true;
            best.ratio = ratio;
            best.blocked = B;
        }
    }
    if (!any) fail(ErrorCode::InfeasibleRoadMap, rm.name);
    return best;
}

// ---- exact game value -------------------------------------------------------

namespace detail {

struct MinimaxSolver {
    const WeightedGraph& g;
    int s, t;
    std::vector<int> universe;
    std::set<int> universeSet;
    long k;
    Rat cap;
    std::map<std::string, std::optional<Rat>> memo;

    MinimaxSolver(const RoadMap& rm)
        : g(rm.graph),
          s(g.indexOf(rm.source)),
          t(g.indexOf(rm.target)),
          universe(universeOf(rm)),
          k(budgetOf(rm, universe.size())) {
        universeSet.insert(universe.begin(), universe.end());
        Rat sum = 0;
        for (const auto& e : g.edges()) sum += e.w;
        cap = sum * Rat(2 * k + 3);
    }

    std::string key(int pos, const std::vector<EdgeStatus>& st, const Rat& cost) const {
        std::string out = std::to_string(pos) + "|";
        for (auto x : st) out += static_cast<char>('0' + static_cast<int>(x));
        out += "|" + ratStr(cost);
        return out;
    }

    std::set<int> blockedOf(const std::vector<EdgeStatus>& st) const {
        std::set<int> b;
        for (size_t e = 0; e < st.size(); ++e)
            if (st[e] == EdgeStatus::RevealedBlocked) b.insert(static_cast<int>(e));
        return b;
    }

    // adversary's turn: assign every not-yet-revealed universe edge at `pos`,
    // then hand the (fully revealed) position back to the traveller
    std::optional<Rat> adversaryValue(int pos, std::vector<EdgeStatus> st, const Rat& cost) {
        std::vector<int> fresh;
        for (const auto& [y, eid] : g.neighbors(pos)) {
            (void)y;
            if (st[eid] == EdgeStatus::Unknown && universeSet.count(eid)) fresh.push_back(eid);
        }
        for (const auto& [y, eid] : g.neighbors(pos)) {
            (void)y;
            if (st[eid] == EdgeStatus::Unknown && !universeSet.count(eid))
                st[eid] = EdgeStatus::RevealedOpen;
        }
        std::sort(fresh.begin(), fresh.end());
        long already = static_cast<long>(blockedOf(st).size());
        std::optional<Rat> best;
        int fm = static_cast<int>(fresh.size());
        for (unsigned long mask = 0; mask < (1UL << fm); ++mask) {
            if (already + __builtin_popcountl(mask) > k) continue;
            std::vector<EdgeStatus> st2 = st;
            for (int i = 0; i < fm; ++i)
                st2[fresh[i]] =
                    (mask & (1UL << i)) ? EdgeStatus::RevealedBlocked : EdgeStatus::RevealedOpen;
            auto blocked = blockedOf(st2);
            auto dist = shortestDistance(g, blocked, s, t);
            if (!dist.reachable()) continue;  // adversary may not disconnect
            auto v = travellerValue(pos, st2, cost);
            if (v && (!best || *v > *best)) best = v;
        }
        return best;
    }

    std::optional<Rat> travellerValue(int pos, const std::vector<EdgeStatus>& st,
                                      const Rat& cost) {
        if (pos == t) {
            auto dist = shortestDistance(g, blockedOf(st), s, t);
            if (!dist.reachable()) return std::nullopt;
            Rat c = cost;
            return Rat(c / *dist.cost);
        }
        if (cost > cap) return std::nullopt;  // dominated: give up this branch
        std::string kk = key(pos, st, cost);
        auto it = memo.find(kk);
        if (it != memo.end()) return it->second;
        memo[kk] = std::nullopt;  // cycle guard

        // candidate moves: every first edge of a shortest apparently-open path
        // to the target or to a vertex that still has an unrevealed incident
        // edge, plus any open edge straight into the target (committing
        // without further information can be optimal on unbalanced maps)
        std::set<int> blocked = blockedOf(st);
        std::set<int> goals{t};
        for (int v = 0; v < g.vertexCount(); ++v)
            for (const auto& [y, eid] : g.neighbors(v)) {
                (void)y;
                if (st[eid] == EdgeStatus::Unknown) {
                    goals.insert(v);
                    break;
                }
            }
        std::set<int> moves;
        for (int goal : goals) {
            if (goal == pos) continue;
            auto toGoal = dijkstra(g, goal, blocked, nullptr);
            if (!toGoal[pos]) continue;
            for (const auto& [y, eid] : g.neighbors(pos)) {
                if (st[eid] != EdgeStatus::RevealedOpen || !toGoal[y]) continue;
                if (g.weight(eid) + *toGoal[y] == *toGoal[pos]) moves.insert(y);
            }
        }
        for (const auto& [y, eid] : g.neighbors(pos))
            if (y == t && st[eid] == EdgeStatus::RevealedOpen) moves.insert(y);
        std::optional<Rat> best;
        for (int nxt : moves) {
            auto eid = g.edgeBetween(pos, nxt);
            if (!eid || st[*eid] != EdgeStatus::RevealedOpen) continue;
            auto v = adversaryValue(nxt, st, cost + g.weight(*eid));
            if (v && (!best || *v < *best)) best = v;
        }
        memo[kk] = best;
        return best;
    }
};

}  // namespace detail

// Value of the zero-sum game between an optimal deterministic traveller and
// an adaptive adversary that assigns blockages on first reveal, subject to
// the budget and to keeping the map feasible.
inline Rat minimaxRatio(const RoadMap& rm) {
    if (rm.source == rm.target) return Rat(1);
    detail::MinimaxSolver solver(rm);
    std::vector<EdgeStatus> st(rm.graph.edgeCount(), EdgeStatus::Unknown);
    for (int eid : rm.blocked) st[eid] = EdgeStatus::RevealedBlocked;
    auto v = solver.adversaryValue(solver.s, st, Rat(0));
    if (!v) fail(ErrorCode::InfeasibleRoadMap, rm.name);
    return *v;
}

}  // namespace ctp

#endif  // CTP_WORSTCASE_HPP
