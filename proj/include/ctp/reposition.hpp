#ifndef CTP_REPOSITION_HPP
#define CTP_REPOSITION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctp/engine.hpp"
#include "ctp/error.hpp"
#include "ctp/graph.hpp"
#include "ctp/oracle.hpp"

namespace ctp {

// Shortest-path-with-restarts strategy.  It commits to the lexicographically
// smallest shortest path that is consistent with current knowledge (unknown
// edges are treated as open).  The moment an edge on the not-yet-walked part
// of the committed path is revealed blocked, it walks back along the prefix
// it already traversed and re-plans from the source.
class Reposition : public Strategy {
public:
    Reposition(const WeightedGraph& g, int source, int target)
        : g_(&g), source_(source), target_(target) {}

    std::string name() const override { return "reposition"; }

    std::optional<int> nextMove(const KnowledgeState& ks, Trace& trace) override {
        (void)trace;
        if (ks.position == target_) return std::nullopt;
        if (returning_) {
            if (idx_ == 0) {
                returning_ = false;
                plan_.clear();
            } else {
                --idx_;
                return plan_[idx_];
            }
        }
        if (plan_.empty()) {
            if (ks.position != source_) fail(ErrorCode::StrategyFault, "re-plan away from source");
            auto blocked = knownBlockedEdges(ks);
            auto res = shortestDistance(*g_, blocked, source_, target_);
            if (!res.reachable()) return std::nullopt;  // surrender: no apparently open route
            plan_ = res.path;
            idx_ = 0;
        }
        if (planHasKnownBlockage(ks)) {
            returning_ = true;
            if (idx_ == 0) {  // still at the source: re-plan in place
                returning_ = false;
                plan_.clear();
                return nextMove(ks, trace);
            }
            --idx_;
            return plan_[idx_];
        }
        ++idx_;
        return plan_[idx_];
    }

private:
    std::set<int> knownBlockedEdges(const KnowledgeState& ks) const {
        std::set<int> blocked;
        for (size_t e = 0; e < ks.statuses.size(); ++e)
            if (ks.statuses[e] == EdgeStatus::RevealedBlocked) blocked.insert(static_cast<int>(e));
        return blocked;
    }

    bool planHasKnownBlockage(const KnowledgeState& ks) const {
        for (size_t j = idx_; j + 1 < plan_.size(); ++j) {
            int eid = g_->edgeIdOrFail(plan_[j], plan_[j + 1]);
            if (ks.statuses[eid] == EdgeStatus::RevealedBlocked) return true;
        }
        return false;
    }

    const WeightedGraph* g_;
    int source_;
    int target_;
    std::vector<int> plan_;   // committed path, plan_[0] == source
    size_t idx_ = 0;          // current position within plan_
    bool returning_ = false;
};

// Deterministic walker used to realize side-sweep lower bounds on fan-shaped
// instances.  Attempt i walks the boundary of one side up to depth budgets[i-1]
// and returns to the source; sides alternate, starting with the first side of
// sides().  Whenever the current vertex has a revealed-open edge directly to
// the target, the walker crosses immediately.
class BudgetSequenceStrategy : public Strategy {
public:
    BudgetSequenceStrategy(const WeightedGraph& g, const OuterEmbedding& emb, int source,
                           int target, std::vector<long> budgets)
        : g_(&g), source_(source), target_(target), budgets_(std::move(budgets)) {
        Sides sd = sides(g, emb, source, target);
        arcs_[0] = sd.upper;
        arcs_[1] = sd.lower;
    }

    std::string name() const override { return "budget-sequence"; }

    std::optional<int> nextMove(const KnowledgeState& ks, Trace& trace) override {
        (void)trace;
        if (ks.position == target_) return std::nullopt;
        if (auto cross = openTargetEdge(ks)) return target_;
        if (outbound_) {
            long budget = attempt_ < budgets_.size() ? budgets_[attempt_] : 0;
            const auto& arc = arcs_[attempt_ % 2];
            if (depth_ < budget && depth_ < static_cast<long>(arc.size())) {
                int nxt = arc[depth_];
                auto eid = g_->edgeBetween(ks.position, nxt);
                if (eid && ks.statuses[*eid] != EdgeStatus::RevealedBlocked) {
                    ++depth_;
                    return nxt;
                }
            }
            outbound_ = false;
        }
        if (depth_ > 0) {
            --depth_;
            const auto& arc = arcs_[attempt_ % 2];
            return depth_ == 0 ? source_ : arc[depth_ - 1];
        }
        // back at the source: start the next attempt
        ++attempt_;
        if (attempt_ >= budgets_.size()) return std::nullopt;  // out of budgets
        outbound_ = true;
        return nextMove(ks, trace);
    }

private:
    std::optional<int> openTargetEdge(const KnowledgeState& ks) const {
        auto eid = g_->edgeBetween(ks.position, target_);
        if (eid && ks.statuses[*eid] == EdgeStatus::RevealedOpen) return eid;
        return std::nullopt;
    }

    const WeightedGraph* g_;
    int source_;
    int target_;
    std::vector<long> budgets_;
    std::vector<int> arcs_[2];
    size_t attempt_ = 0;
    long depth_ = 0;
    bool outbound_ = true;
};

}  // namespace ctp

#endif  // CTP_REPOSITION_HPP
