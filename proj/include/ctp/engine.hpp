#ifndef CTP_ENGINE_HPP
#define CTP_ENGINE_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctp/graph.hpp"
#include "ctp/oracle.hpp"
#include "ctp/rational.hpp"

namespace ctp {

using Json = nlohmann::json;

enum class EdgeStatus { Unknown, RevealedOpen, RevealedBlocked };

/// The traveller's information set: position, revealed statuses, visited
/// vertices, exact accumulated cost, and the walk so far.
struct KnowledgeState {
    int position = -1;
    std::vector<EdgeStatus> statuses;  // indexed by edge id
    std::set<int> visited;
    Rat cost = 0;
    std::vector<int> walk;

    bool knownOpen(int eid) const {
        return statuses[eid] == EdgeStatus::RevealedOpen;
    }
    bool knownBlocked(int eid) const {
        return statuses[eid] == EdgeStatus::RevealedBlocked;
    }
};

/// Ordered event log. Events are JSON objects with an "event" field
/// (move | reveal | annotate); annotate payloads come from strategies and are
/// opaque to the engine.
using Trace = std::vector<Json>;

inline void annotate(Trace& trace, Json payload, const Rat& cost) {
    payload["event"] = "annotate";
    payload["cost"] = ratStr(cost);
    trace.push_back(std::move(payload));
}

/// Online strategy contract: deterministic next move (an adjacent vertex over
/// a revealed-open edge) or surrender (nullopt). Instances are stateful and
/// bound to a single simulation.
class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual std::optional<int> nextMove(const KnowledgeState& state,
                                        Trace& trace) = 0;
    virtual std::string name() const = 0;
};

/// Decides the status of universe edges the moment they are revealed, under
/// budget and feasibility constraints. Non-universe edges are always open.
class Adversary {
  public:
    virtual ~Adversary() = default;
    /// True = blocked. Called exactly once per universe edge.
    virtual bool block(int edgeId, const KnowledgeState& state) = 0;
};

struct SimulationResult {
    enum class Outcome { ReachedTarget, Surrendered, StepLimit };
    Outcome outcome = Outcome::Surrendered;
    Rat traversed = 0;
    std::vector<int> walk;
    Trace trace;
    std::set<int> realizedBlocked;  // blocked statuses actually assigned
    long recursionCount = 0;
    long moveCount = 0;
};

namespace detail {

/// Reveal every unknown edge at v; statuses come from the road map's blocked
/// set, or from the adversary for universe edges in adaptive runs.
inline void revealAt(const RoadMap& rm, KnowledgeState& ks, int v, Trace& trace,
                     Adversary* adversary, std::set<int>& realizedBlocked) {
    for (auto [w, eid] : rm.graph.neighbors(v)) {
        if (ks.statuses[eid] != EdgeStatus::Unknown) continue;
        bool blocked;
        if (adversary != nullptr && rm.universe && rm.universe->count(eid)) {
            blocked = adversary->block(eid, ks);
        } else {
            blocked = rm.blocked.count(eid) > 0;
        }
        ks.statuses[eid] =
            blocked ? EdgeStatus::RevealedBlocked : EdgeStatus::RevealedOpen;
        if (blocked) realizedBlocked.insert(eid);
        trace.push_back({{"event", "reveal"},
                         {"edge", rm.graph.edgeKey(eid)},
                         {"status", blocked ? "blocked" : "open"},
                         {"cost", ratStr(ks.cost)}});
    }
}

}  // namespace detail

/// Starting knowledge: at s with every s-incident edge revealed. The road
/// map must be feasible (checked here for fixed-blockage runs).
inline KnowledgeState initState(const RoadMap& rm) {
    int s = rm.graph.indexOf(rm.source);
    int t = rm.graph.indexOf(rm.target);
    if (!isFeasible(rm.graph, s, t, rm.blocked))
        fail(ErrorCode::InfeasibleRoadMap, rm.name);
    KnowledgeState ks;
    ks.position = s;
    ks.statuses.assign(rm.graph.edgeCount(), EdgeStatus::Unknown);
    ks.visited.insert(s);
    ks.walk.push_back(s);
    Trace scratch;
    std::set<int> scratchBlocked;
    detail::revealAt(rm, ks, s, scratch, nullptr, scratchBlocked);
    return ks;
}

/// One legal move. The edge must exist and be revealed open.
inline void step(const RoadMap& rm, KnowledgeState& ks, int to, Trace& trace,
                 Adversary* adversary, std::set<int>& realizedBlocked) {
    auto eid = rm.graph.edgeBetween(ks.position, to);
    if (!eid)
        fail(ErrorCode::IllegalMove,
             rm.graph.nameOf(ks.position) + " -> " + rm.graph.nameOf(to) +
                 " is not an edge");
    if (ks.statuses[*eid] != EdgeStatus::RevealedOpen)
        fail(ErrorCode::IllegalMove,
             "edge " + rm.graph.edgeKey(*eid) + " is not revealed open");
    ks.cost += rm.graph.weight(*eid);
    ks.position = to;
    ks.visited.insert(to);
    ks.walk.push_back(to);
    trace.push_back({{"event", "move"},
                     {"vertex", rm.graph.nameOf(to)},
                     {"edge", rm.graph.edgeKey(*eid)},
                     {"cost", ratStr(ks.cost)}});
    detail::revealAt(rm, ks, to, trace, adversary, realizedBlocked);
}

/// Run a strategy until it reaches t, surrenders, or exhausts the step limit.
/// IllegalMove from the strategy propagates as StrategyFault. Pass an
/// adversary for adaptive runs (the road map's universe must be set; its
/// blocked set then only covers non-universe edges, normally empty).
inline SimulationResult simulate(Strategy& strategy, const RoadMap& rm,
                                 long stepLimit = 1000000,
                                 Adversary* adversary = nullptr) {
    if (stepLimit < 1) fail(ErrorCode::UsageError, "stepLimit must be >= 1");
    SimulationResult result;
    KnowledgeState ks;
    {
        // Adaptive runs start from the same state, but initial reveals at s
        // must consult the adversary and be traced.
        int s = rm.graph.indexOf(rm.source);
        int t = rm.graph.indexOf(rm.target);
        if (!isFeasible(rm.graph, s, t, rm.blocked))
            fail(ErrorCode::InfeasibleRoadMap, rm.name);
        ks.position = s;
        ks.statuses.assign(rm.graph.edgeCount(), EdgeStatus::Unknown);
        ks.visited.insert(s);
        ks.walk.push_back(s);
        detail::revealAt(rm, ks, s, result.trace, adversary,
                         result.realizedBlocked);
    }
    int t = rm.graph.indexOf(rm.target);

    while (true) {
        if (ks.position == t) {
            result.outcome = SimulationResult::Outcome::ReachedTarget;
            break;
        }
        if (result.moveCount >= stepLimit) {
            result.outcome = SimulationResult::Outcome::StepLimit;
            break;
        }
        std::optional<int> mv;
        try {
            mv = strategy.nextMove(ks, result.trace);
        } catch (const Error& e) {
            fail(ErrorCode::StrategyFault, e.what());
        }
        if (!mv) {
            result.outcome = SimulationResult::Outcome::Surrendered;
            break;
        }
        try {
            step(rm, ks, *mv, result.trace, adversary, result.realizedBlocked);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::IllegalMove)
                fail(ErrorCode::StrategyFault, e.what());
            throw;
        }
        ++result.moveCount;
    }
    result.traversed = ks.cost;
    result.walk = ks.walk;
    for (const auto& ev : result.trace)
        if (ev.value("event", "") == "annotate" && ev.value("type", "") == "recurse")
            ++result.recursionCount;
    return result;
}

/// traversed / d_opt, exact. For adaptive runs d_opt is the minimum over
/// completions consistent with the assigned statuses, i.e. the distance
/// avoiding exactly the realized blocked edges.
inline Rat competitiveRatio(const SimulationResult& result, const RoadMap& rm) {
    if (result.outcome != SimulationResult::Outcome::ReachedTarget)
        fail(ErrorCode::NotCompleted, rm.name);
    std::set<int> blocked = rm.blocked;
    blocked.insert(result.realizedBlocked.begin(), result.realizedBlocked.end());
    int s = rm.graph.indexOf(rm.source);
    int t = rm.graph.indexOf(rm.target);
    auto res = shortestDistance(rm.graph, blocked, s, t);
    if (!res.reachable()) fail(ErrorCode::InfeasibleRoadMap, rm.name);
    if (*res.cost == 0) {
        if (result.traversed == 0) return Rat(1);
        fail(ErrorCode::UsageError, "ratio undefined: optimal distance is zero");
    }
    Rat ratio = result.traversed / *res.cost;
    ratio.canonicalize();
    return ratio;
}

/// Serialize a trace as JSON lines.
inline std::string traceToJsonl(const Trace& trace) {
    std::string out;
    for (const auto& ev : trace) {
        out += ev.dump();
        out += '\n';
    }
    return out;
}

}  // namespace ctp

#endif  // CTP_ENGINE_HPP
