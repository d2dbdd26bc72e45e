#ifndef CTP_LEMMA2_HPP
#define CTP_LEMMA2_HPP

#include <deque>
#include <map>
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

struct Lemma2Row {
    std::string phase;  // "A" for balance checkpoints, "level" for per-level summaries
    long D = 0;
    Rat T;
    Rat dOpt;
    bool ok = false;
    std::string detail;
};

struct Lemma2Report {
    std::vector<Lemma2Row> rows;
    bool ok() const {
        for (const auto& r : rows)
            if (!r.ok) return false;
        return true;
    }
};

namespace detail {

// Unit (hop) distance from `from` to `to` inside `within`, ignoring blocked
// edges; -1 when unreachable.
inline long hopDistance(const WeightedGraph& g, const std::set<int>& blocked, int from, int to,
                        const std::set<int>& within) {
    if (from == to) return 0;
    std::map<int, long> dist{{from, 0}};
    std::deque<int> q{from};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (const auto& [y, eid] : g.neighbors(x)) {
            if (blocked.count(eid) || !within.count(y) || dist.count(y)) continue;
            dist[y] = dist[x] + 1;
            if (y == to) return dist[y];
            q.push_back(y);
        }
    }
    return -1;
}

}  // namespace detail

// Replays an exponential-balancing trace and verifies the walk-length
// discipline: at every balance checkpoint with value D the per-level walk is
// at most 5D and both frontiers sit at true distance D from the level source,
// and at every event the per-level walk stays within 9 times the offline
// optimum of the sub-road-map the level runs on.
inline Lemma2Report checkLemma2(const Trace& trace, const RoadMap& rm) {
    Lemma2Report report;
    const WeightedGraph& g = rm.graph;
    int t = g.indexOf(rm.target);

    bool sawLevel = false;
    for (const auto& ev : trace)
        if (ev.contains("type") && ev["type"] == "level") sawLevel = true;
    if (!sawLevel) fail(ErrorCode::MissingAnnotations, "trace carries no level annotations");

    int src = -1;
    std::set<int> comp;
    Rat levelStart = 0;
    Rat dOpt = 0;
    Rat maxT = 0;
    long dLast = 0;
    bool inLevel = false;
    bool levelFeasible = true;

    auto flushLevel = [&]() {
        if (!inLevel) return;
        Lemma2Row row;
        row.phase = "level";
        row.D = dLast;
        row.T = maxT;
        row.dOpt = dOpt;
        row.ok = levelFeasible && maxT <= 9 * dOpt;
        if (!row.ok) row.detail = "walk exceeds 9x offline optimum";
        report.rows.push_back(row);
    };

    for (const auto& ev : trace) {
        Rat cost = parseRat(ev.at("cost").get<std::string>());
        bool isAnnotate = ev.contains("event") && ev["event"] == "annotate";
        if (isAnnotate && ev.contains("type") && ev["type"] == "level") {
            flushLevel();
            src = g.indexOf(ev.at("source").get<std::string>());
            comp.clear();
            for (const auto& nm : ev.at("component")) comp.insert(g.indexOf(nm.get<std::string>()));
            levelStart = cost;
            maxT = 0;
            dLast = 0;
            inLevel = true;
            auto res = shortestDistance(g, rm.blocked, src, t, &comp);
            levelFeasible = res.reachable();
            dOpt = levelFeasible ? *res.cost : Rat(0);
            if (!levelFeasible) {
                Lemma2Row row;
                row.phase = "level";
                row.T = 0;
                row.dOpt = 0;
                row.ok = false;
                row.detail = "level sub-road-map is infeasible";
                report.rows.push_back(row);
            }
            continue;
        }
        if (!inLevel) continue;  // pre-walk reveals at the source
        Rat T = cost - levelStart;
        if (T > maxT) maxT = T;
        if (isAnnotate && ev.contains("state") && ev["state"] == "A") {
            Lemma2Row row;
            row.phase = "A";
            row.D = ev.at("D").get<long>();
            row.T = T;
            row.dOpt = dOpt;
            dLast = row.D;
            int x = g.indexOf(ev.at("x").get<std::string>());
            int y = g.indexOf(ev.at("y").get<std::string>());
            long dx = detail::hopDistance(g, rm.blocked, src, x, comp);
            long dy = detail::hopDistance(g, rm.blocked, src, y, comp);
            row.ok = true;
            if (dx != row.D || dy != row.D) {
                row.ok = false;
                row.detail = "frontier not at distance D from level source";
            }
            if (T > Rat(5) * row.D) {
                row.ok = false;
                row.detail += std::string(row.detail.empty() ? "" : "; ") + "walk exceeds 5D";
            }
            report.rows.push_back(row);
        }
    }
    flushLevel();
    return report;
}

}  // namespace ctp

#endif  // CTP_LEMMA2_HPP
