#ifndef CTP_EXPBALANCING_HPP
#define CTP_EXPBALANCING_HPP

#include <algorithm>
#include <climits>
#include <deque>
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

namespace ctp {

enum class ExpPhase { E1, E2, A, B, C, Bypass, ProbeOtherSide };

inline const char* expPhaseName(ExpPhase p) {
    switch (p) {
        case ExpPhase::E1: return "E1";
        case ExpPhase::E2: return "E2";
        case ExpPhase::A: return "A";
        case ExpPhase::B: return "B";
        case ExpPhase::C: return "C";
        case ExpPhase::Bypass: return "Bypass";
        case ExpPhase::ProbeOtherSide: return "ProbeOtherSide";
    }
    return "?";
}

// Debug snapshot of the balancing automaton.
struct ExpAutomatonState {
    ExpPhase phase = ExpPhase::E1;
    long D = 0;
    std::vector<int> exploredUpper;
    std::vector<int> exploredLower;
    long alphaNumerator = 0;  // depth surplus of the deeper side during a probe
    long betaNumerator = 0;   // probe steps walked so far
    int activeSide = 0;
    std::set<int> prunedVertices;
    int recursionDepth = 0;
};

// Online strategy for 2-connected outerplanar road maps.  It alternates
// between the two boundary arcs with exponentially doubling depth budgets,
// shortcuts along open horizontal chords (pruning the vertices they
// surround), and restarts itself on the target side of an open vertical
// chord whenever crossing is provably cheap enough.  The walk it produces
// stays within a factor 9 of the offline optimum on unit weights.
class ExpBalancing : public Strategy {
public:
    ExpBalancing(const WeightedGraph& g, const OuterEmbedding& emb, int source, int target)
        : g_(&g), t_(target) {
        std::vector<int> bnd;
        std::set<int> seen;
        for (const auto& name : emb.boundary) {
            int v = g.indexOf(name);
            if (!seen.insert(v).second)
                fail(ErrorCode::NotBiconnected, "boundary revisits " + name);
            bnd.push_back(v);
        }
        if (static_cast<int>(bnd.size()) != g.vertexCount())
            fail(ErrorCode::EmbeddingRequired, "every vertex must lie on the outer face");
        // Build the set before the call: evaluation order of the two init()
        // arguments is unspecified, and bnd must not be moved from first.
        std::set<int> comp(bnd.begin(), bnd.end());
        init(std::move(comp), std::move(bnd), source);
    }

    // Restriction to one biconnected block (vertex set plus its cyclic
    // boundary in global orientation); used by DecomposeWrapper.
    ExpBalancing(const WeightedGraph& g, std::set<int> component, std::vector<int> boundary,
                 int source, int target)
        : g_(&g), t_(target) {
        init(std::move(component), std::move(boundary), source);
    }

    std::string name() const override { return "expbalancing"; }

    std::optional<int> nextMove(const KnowledgeState& ks, Trace& trace) override {
        if (ks.position == t_) return std::nullopt;
        for (long guard = 0; guard < 1000000; ++guard) {
            if (!queue_.empty()) {
                int v = queue_.front();
                queue_.pop_front();
                return v;
            }
            if (surrender_) return std::nullopt;
            switch (next_) {
                case Next::StartLevel: startLevel(ks, trace); break;
                case Next::StartAttempt: startAttempt(); break;
                case Next::ExtendStep: extendStep(ks, trace); break;
                case Next::ExtendArrival: extendArrival(ks, trace); break;
                case Next::ProbeArrival: probeArrival(ks, trace); break;
                case Next::ResumeAtV: resumeAtV(ks, trace); break;
                case Next::Recurse: recurse(ks, trace); break;
                case Next::BypassStep: bypassStep(ks, trace); break;
                case Next::BypassArrival: bypassArrival(ks, trace); break;
                case Next::FallbackStep: fallbackStep(ks, trace); break;
                case Next::Finished: return std::nullopt;
            }
        }
        fail(ErrorCode::StrategyFault, "balancing automaton stalled");
    }

    ExpAutomatonState automatonState() const {
        ExpAutomatonState st;
        st.D = dLast_;
        st.activeSide = cur_;
        st.recursionDepth = level_;
        st.prunedVertices = pruned_;
        st.exploredUpper = side_[side_[0].label == 0 ? 0 : 1].tight;
        st.exploredLower = side_[side_[0].label == 0 ? 1 : 0].tight;
        long a = static_cast<long>(side_[cur_].tight.size());
        long b = static_cast<long>(side_[1 - cur_].tight.size());
        if (next_ == Next::ProbeArrival) {
            st.phase = ExpPhase::ProbeOtherSide;
            st.alphaNumerator = a - b;
            st.betaNumerator = probeWalked_;
        } else if (inBypass_ || next_ == Next::BypassStep || next_ == Next::BypassArrival ||
                   next_ == Next::FallbackStep) {
            st.phase = ExpPhase::Bypass;
        } else if (attemptNo_ == 1) {
            st.phase = ExpPhase::E1;
        } else if (attemptNo_ == 2) {
            st.phase = ExpPhase::E2;
        } else {
            st.phase = a < b ? ExpPhase::C : (a == b ? ExpPhase::A : ExpPhase::B);
            if (a > b) st.alphaNumerator = a - b;
        }
        return st;
    }

private:
    enum class Next {
        StartLevel,
        StartAttempt,
        ExtendStep,
        ExtendArrival,
        ProbeArrival,
        ResumeAtV,
        Recurse,
        BypassStep,
        BypassArrival,
        FallbackStep,
        Finished
    };

    struct SideState {
        std::vector<int> seq;        // boundary arc source -> target, both exclusive
        std::map<int, int> pos;      // vertex id -> index into seq
        std::vector<char> alive;
        std::vector<int> tight;      // current open path source -> frontier (ids, source excluded)
        int label = 0;               // 0 = Upper (forward arc), 1 = Lower
    };

    struct PendingRecurse {
        int source;
        int srcSide;
        int u;
        int v;
        int chord;
        const char* trigger;
    };

    void init(std::set<int> component, std::vector<int> boundary, int source) {
        comp_ = std::move(component);
        bnd_ = std::move(boundary);
        src_ = source;
        if (!comp_.count(src_) || !comp_.count(t_))
            fail(ErrorCode::UnknownVertex, "terminals outside component");
        next_ = Next::StartLevel;
    }

    const std::string& vn(int v) const { return g_->nameOf(v); }

    std::string labelName(int sideIdx) const { return side_[sideIdx].label == 0 ? "Upper" : "Lower"; }

    bool openEdge(const KnowledgeState& ks, int eid) const {
        return ks.statuses[eid] == EdgeStatus::RevealedOpen;
    }

    // ---- level setup -----------------------------------------------------

    void startLevel(const KnowledgeState& ks, Trace& trace) {
        // split the cyclic boundary at {source, target} into the two arcs
        int n = static_cast<int>(bnd_.size());
        int sAt = -1;
        for (int i = 0; i < n; ++i)
            if (bnd_[i] == src_) sAt = i;
        if (sAt < 0) fail(ErrorCode::StrategyFault, "source missing from boundary");
        std::vector<int> arcF, arcR;
        bool past = false;
        for (int k = 1; k < n; ++k) {
            int v = bnd_[(sAt + k) % n];
            if (v == t_) {
                past = true;
                continue;
            }
            (past ? arcR : arcF).push_back(v);
        }
        std::reverse(arcR.begin(), arcR.end());  // orient source -> target

        SideState upper, lower;
        upper.seq = arcF;
        upper.label = 0;
        lower.seq = arcR;
        lower.label = 1;
        for (auto* S : {&upper, &lower}) {
            S->alive.assign(S->seq.size(), 1);
            for (size_t i = 0; i < S->seq.size(); ++i) S->pos[S->seq[i]] = static_cast<int>(i);
        }

        bool lowerFirst = false;
        if (firstSideHint_ == t_) {
            lowerFirst = lower.seq.empty() && !upper.seq.empty();
        } else if (firstSideHint_ >= 0) {
            lowerFirst = !lower.seq.empty() && lower.seq.front() == firstSideHint_;
        }
        side_[0] = lowerFirst ? lower : upper;
        side_[1] = lowerFirst ? upper : lower;

        consumed_.clear();
        cur_ = 0;
        target_ = 1;
        dLast_ = 0;
        attemptNo_ = 1;
        inBypass_ = false;

        Json names = Json::array();
        for (int v : comp_) names.push_back(vn(v));
        annotate(trace,
                 Json{{"type", "level"},
                      {"recursion", level_},
                      {"source", vn(src_)},
                      {"component", names}},
                 ks.cost);
        pruneScan(src_, ks, trace);
        next_ = Next::StartAttempt;
    }

    void startAttempt() {
        for (int v : side_[cur_].tight) queue_.push_back(v);
        next_ = Next::ExtendStep;
    }

    // ---- balancing walk --------------------------------------------------

    void extendStep(const KnowledgeState& ks, Trace& trace) {
        SideState& S = side_[cur_];
        long depth = static_cast<long>(S.tight.size());
        if (depth >= target_) {  // budget exhausted: retreat and switch sides
            for (long j = depth - 1; j >= 1; --j) queue_.push_back(S.tight[j - 1]);
            queue_.push_back(src_);
            cur_ ^= 1;
            target_ = 2 * depth;
            ++attemptNo_;
            next_ = Next::StartAttempt;
            return;
        }
        int w = S.tight.empty() ? src_ : S.tight.back();
        auto nxt = chooseForward(ks, trace, S, w);
        if (!nxt) {  // this side is walled off: bypass via the other one
            enterBypass(ks, trace);
            return;
        }
        queue_.push_back(*nxt);
        if (*nxt == t_) {
            next_ = Next::Finished;
            return;
        }
        S.tight.push_back(*nxt);
        next_ = Next::ExtendArrival;
    }

    void extendArrival(const KnowledgeState& ks, Trace& trace) {
        SideState& S = side_[cur_];
        int w = S.tight.back();
        pruneScan(w, ks, trace);
        long a = static_cast<long>(S.tight.size());
        long b = static_cast<long>(side_[1 - cur_].tight.size());
        if (a == b) {
            dLast_ = a;
            annotate(trace,
                     Json{{"state", "A"},
                          {"D", a},
                          {"side", labelName(cur_)},
                          {"recursion", level_},
                          {"x", vn(w)},
                          {"y", vn(side_[1 - cur_].tight.back())}},
                     ks.cost);
        }
        auto trig = bestVerticalChord(ks, w, cur_);
        if (!trig) {
            next_ = Next::ExtendStep;
            return;
        }
        auto [z, chord] = *trig;
        if (a <= b) {  // crossing now is already balanced: restart beyond the chord
            pending_ = PendingRecurse{w, cur_, w, z, chord, "step6"};
            next_ = Next::Recurse;
            return;
        }
        // probe the shallow side for a cheap return before committing
        probeU_ = w;
        probeV_ = z;
        probeChord_ = chord;
        probeCap_ = a - b - 1;
        probeWalked_ = 0;
        probePath_ = {z};
        annotate(trace,
                 Json{{"type", "probe"},
                      {"alphaD", a - b},
                      {"cap", probeCap_},
                      {"from", vn(w)},
                      {"to", vn(z)},
                      {"recursion", level_}},
                 ks.cost);
        queue_.push_back(z);
        next_ = Next::ProbeArrival;
    }

    void probeArrival(const KnowledgeState& ks, Trace& trace) {
        const SideState& P = side_[1 - cur_];
        long a = static_cast<long>(side_[cur_].tight.size());
        int p = probePath_.back();
        long bestE = LONG_MAX;
        int bestY = -1;
        for (const auto& [y, eid] : g_->neighbors(p)) {
            if (!openEdge(ks, eid)) continue;
            long dep;
            if (y == src_) {
                dep = 0;
            } else {
                auto it = std::find(P.tight.begin(), P.tight.end(), y);
                if (it == P.tight.end()) continue;
                dep = static_cast<long>(it - P.tight.begin()) + 1;
            }
            long e = dep + 1 + probeWalked_;
            if (e < bestE) {
                bestE = e;
                bestY = y;
            }
        }
        if (bestY != -1 && bestE <= a) {
            for (size_t j = probePath_.size() - 1; j >= 1; --j) queue_.push_back(probePath_[j - 1]);
            if (bestE < a) {  // cheap reconnection exists: restart from the far endpoint
                pending_ = PendingRecurse{probeV_, 1 - cur_, probeU_, probeV_, probeChord_,
                                          "step5-see"};
                next_ = Next::Recurse;
            } else {  // tie: adopt the probed side as the new balanced frontier
                resumeY_ = bestY;
                next_ = Next::ResumeAtV;
            }
            return;
        }
        if (probeWalked_ < probeCap_) {
            int pp = P.pos.count(p) ? P.pos.at(p) : -1;
            if (pp > 0) {
                int nxt = P.seq[pp - 1];
                auto eid = g_->edgeBetween(p, nxt);
                if (eid && openEdge(ks, *eid)) {
                    queue_.push_back(nxt);
                    probePath_.push_back(nxt);
                    ++probeWalked_;
                    return;  // stay in ProbeArrival
                }
            }
        }
        // probe failed: walk back across the chord and restart from this side
        for (size_t j = probePath_.size() - 1; j >= 1; --j) queue_.push_back(probePath_[j - 1]);
        queue_.push_back(probeU_);
        pending_ = PendingRecurse{probeU_, cur_, probeU_, probeV_, probeChord_, "step5-nosee"};
        next_ = Next::Recurse;
    }

    void resumeAtV(const KnowledgeState& ks, Trace& trace) {
        SideState& P = side_[1 - cur_];
        std::vector<int> nt;
        if (resumeY_ != src_) {
            for (int y : P.tight) {
                nt.push_back(y);
                if (y == resumeY_) break;
            }
        }
        for (auto it = probePath_.rbegin(); it != probePath_.rend(); ++it) nt.push_back(*it);
        std::set<int> keep(nt.begin(), nt.end());
        int lo = resumeY_ == src_ ? -1 : P.pos.at(resumeY_);
        int hi = P.pos.at(probePath_.back());
        if (lo > hi) std::swap(lo, hi);
        Json dropped = Json::array();
        for (int q = lo + 1; q < hi; ++q) {
            int v = P.seq[q];
            if (!P.alive[q] || keep.count(v)) continue;
            P.alive[q] = 0;
            comp_.erase(v);
            pruned_.insert(v);
            dropped.push_back(vn(v));
        }
        if (!dropped.empty())
            annotate(trace, Json{{"type", "prune"}, {"vertices", dropped}, {"recursion", level_}},
                     ks.cost);
        P.tight = nt;
        consumed_.insert(probeChord_);
        cur_ = 1 - cur_;
        long a = static_cast<long>(side_[cur_].tight.size());
        dLast_ = a;
        annotate(trace,
                 Json{{"state", "A"},
                      {"D", a},
                      {"side", labelName(cur_)},
                      {"recursion", level_},
                      {"x", vn(probeV_)},
                      {"y", vn(probeU_)}},
                 ks.cost);
        target_ = 2 * a;
        ++attemptNo_;
        next_ = Next::ExtendStep;
    }

    // ---- recursion -------------------------------------------------------

    void recurse(const KnowledgeState& ks, Trace& trace) {
        PendingRecurse pr = *pending_;
        pending_.reset();
        if (ks.position != pr.source) fail(ErrorCode::StrategyFault, "recursion away from source");
        std::set<int> keep = reachWithin(pr.u, pr.v);
        keep.insert(pr.u);
        keep.insert(pr.v);
        std::vector<int> nb;
        for (int v : bnd_)
            if (keep.count(v)) nb.push_back(v);
        const SideState& SS = side_[pr.srcSide];
        int hint = t_;
        if (SS.pos.count(pr.source)) {
            for (int q = SS.pos.at(pr.source) + 1; q < static_cast<int>(SS.seq.size()); ++q) {
                if (SS.alive[q] && keep.count(SS.seq[q])) {
                    hint = SS.seq[q];
                    break;
                }
            }
        }
        Json names = Json::array();
        for (int v : keep) names.push_back(vn(v));
        annotate(trace,
                 Json{{"type", "recurse"},
                      {"trigger", pr.trigger},
                      {"source", vn(pr.source)},
                      {"u", vn(pr.u)},
                      {"v", vn(pr.v)},
                      {"chord", g_->edgeKey(pr.chord)},
                      {"recursion", level_ + 1},
                      {"component", names}},
                 ks.cost);
        comp_ = std::move(keep);
        bnd_ = std::move(nb);
        src_ = pr.source;
        ++level_;
        firstSideHint_ = hint;
        next_ = Next::StartLevel;
    }

    // ---- bypass & fallback -------------------------------------------------

    void enterBypass(const KnowledgeState& ks, Trace& trace) {
        SideState& S = side_[cur_];
        annotate(trace,
                 Json{{"state", "Bypass"},
                      {"side", labelName(1 - cur_)},
                      {"recursion", level_},
                      {"D", dLast_}},
                 ks.cost);
        for (long j = static_cast<long>(S.tight.size()) - 1; j >= 1; --j)
            queue_.push_back(S.tight[j - 1]);
        if (!S.tight.empty()) queue_.push_back(src_);
        bypassSide_ = 1 - cur_;
        inBypass_ = true;
        for (int v : side_[bypassSide_].tight) queue_.push_back(v);
        next_ = Next::BypassStep;
    }

    void bypassStep(const KnowledgeState& ks, Trace& trace) {
        SideState& S = side_[bypassSide_];
        int w = S.tight.empty() ? src_ : S.tight.back();
        auto nxt = chooseForward(ks, trace, S, w);
        if (!nxt) {  // both sides walled off (cannot happen on feasible maps)
            annotate(trace, Json{{"type", "fallback"}, {"recursion", level_}}, ks.cost);
            next_ = Next::FallbackStep;
            return;
        }
        queue_.push_back(*nxt);
        if (*nxt == t_) {
            next_ = Next::Finished;
            return;
        }
        S.tight.push_back(*nxt);
        next_ = Next::BypassArrival;
    }

    void bypassArrival(const KnowledgeState& ks, Trace& trace) {
        int w = side_[bypassSide_].tight.back();
        pruneScan(w, ks, trace);
        auto trig = bestVerticalChord(ks, w, bypassSide_);
        if (trig) {
            pending_ = PendingRecurse{w, bypassSide_, w, trig->first, trig->second, "step4"};
            inBypass_ = false;
            next_ = Next::Recurse;
            return;
        }
        next_ = Next::BypassStep;
    }

    void fallbackStep(const KnowledgeState& ks, Trace& trace) {
        (void)trace;
        std::set<int> blocked;
        for (size_t e = 0; e < ks.statuses.size(); ++e)
            if (ks.statuses[e] == EdgeStatus::RevealedBlocked) blocked.insert(static_cast<int>(e));
        auto res = shortestDistance(*g_, blocked, ks.position, t_, &comp_);
        if (!res.reachable()) res = shortestDistance(*g_, blocked, ks.position, t_);
        if (!res.reachable() || res.path.size() < 2) {
            surrender_ = true;
            return;
        }
        queue_.push_back(res.path[1]);
        if (res.path[1] == t_) next_ = Next::Finished;
    }

    // ---- shared helpers ----------------------------------------------------

    // Farthest revealed-open edge from w to an alive vertex ahead on S (or to
    // the target, which counts as farthest of all).  Walking such an edge is
    // the side-walk step; absence of any candidate means the side is blocked.
    std::optional<int> chooseForward(const KnowledgeState& ks, Trace& trace, SideState& S, int w) {
        int wpos = (w == src_) ? -1 : (S.pos.count(w) ? S.pos.at(w) : -1);
        int best = -1;
        int bestPos = wpos;
        bool toTarget = false;
        for (const auto& [y, eid] : g_->neighbors(w)) {
            if (!openEdge(ks, eid) || !comp_.count(y)) continue;
            if (y == t_) {
                toTarget = true;
                continue;
            }
            auto it = S.pos.find(y);
            if (it == S.pos.end() || !S.alive[it->second] || it->second <= wpos) continue;
            if (it->second > bestPos) {
                bestPos = it->second;
                best = y;
            }
        }
        if (toTarget) {
            pruneSpan(S, wpos, static_cast<int>(S.seq.size()), ks, trace);
            return t_;
        }
        if (best == -1) return std::nullopt;
        pruneSpan(S, wpos, bestPos, ks, trace);
        return best;
    }

    // Remove alive, non-frontier vertices strictly between two positions of a
    // side: they are surrounded by an open chord and never worth visiting.
    void pruneSpan(SideState& S, int lo, int hi, const KnowledgeState& ks, Trace& trace) {
        std::set<int> tightSet(S.tight.begin(), S.tight.end());
        Json dropped = Json::array();
        for (int q = lo + 1; q < hi && q < static_cast<int>(S.seq.size()); ++q) {
            int v = S.seq[q];
            if (q < 0 || !S.alive[q] || tightSet.count(v)) continue;
            S.alive[q] = 0;
            comp_.erase(v);
            pruned_.insert(v);
            dropped.push_back(vn(v));
        }
        if (!dropped.empty())
            annotate(trace, Json{{"type", "prune"}, {"vertices", dropped}, {"recursion", level_}},
                     ks.cost);
    }

    // Apply every horizontal shortcut revealed at w: an open chord within one
    // side (or from the source, or to the target) makes the span it surrounds
    // permanently avoidable.
    void pruneScan(int w, const KnowledgeState& ks, Trace& trace) {
        for (const auto& [y, eid] : g_->neighbors(w)) {
            if (!openEdge(ks, eid) || !comp_.count(y)) continue;
            for (int si = 0; si < 2; ++si) {
                SideState& S = side_[si];
                if (w == src_ && S.pos.count(y)) {
                    pruneSpan(S, -1, S.pos.at(y), ks, trace);
                } else if (y == t_ && S.pos.count(w)) {
                    pruneSpan(S, S.pos.at(w), static_cast<int>(S.seq.size()), ks, trace);
                } else if (S.pos.count(w) && S.pos.count(y)) {
                    int a = S.pos.at(w), b = S.pos.at(y);
                    pruneSpan(S, std::min(a, b), std::max(a, b), ks, trace);
                }
            }
        }
    }

    // Open, unconsumed chord from w to the opposite side whose far component
    // is smallest (ties: endpoint nearest the target) — the rightmost
    // vertical chord in boundary order.
    std::optional<std::pair<int, int>> bestVerticalChord(const KnowledgeState& ks, int w,
                                                         int sideIdx) {
        const SideState& O = side_[1 - sideIdx];
        int best = -1, bestEid = -1;
        size_t bestSize = 0;
        int bestPos = -1;
        for (const auto& [z, eid] : g_->neighbors(w)) {
            if (!openEdge(ks, eid) || consumed_.count(eid)) continue;
            if (z == src_ || z == t_ || !comp_.count(z)) continue;
            auto it = O.pos.find(z);
            if (it == O.pos.end() || !O.alive[it->second]) continue;
            std::set<int> far = reachWithin(w, z);
            if (far.count(src_)) continue;  // not a separator (defensive)
            size_t size = far.size() + 2;
            if (best == -1 || size < bestSize ||
                (size == bestSize && it->second > bestPos)) {
                best = z;
                bestEid = eid;
                bestSize = size;
                bestPos = it->second;
            }
        }
        if (best == -1) return std::nullopt;
        return std::make_pair(best, bestEid);
    }

    // Vertices reachable from the target inside the current component when u
    // and v are removed (edge statuses are deliberately ignored).
    std::set<int> reachWithin(int u, int v) const {
        std::set<int> seen{t_};
        std::deque<int> q{t_};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const auto& [y, eid] : g_->neighbors(x)) {
                (void)eid;
                if (y == u || y == v || !comp_.count(y) || seen.count(y)) continue;
                seen.insert(y);
                q.push_back(y);
            }
        }
        return seen;
    }

    const WeightedGraph* g_;
    int t_;
    int src_ = -1;
    std::set<int> comp_;
    std::vector<int> bnd_;
    int level_ = 0;
    int firstSideHint_ = -1;

    SideState side_[2];
    int cur_ = 0;
    long target_ = 1;
    long dLast_ = 0;
    long attemptNo_ = 1;
    bool inBypass_ = false;
    int bypassSide_ = 0;
    std::set<int> consumed_;
    std::set<int> pruned_;

    int probeU_ = -1, probeV_ = -1, probeChord_ = -1;
    long probeCap_ = 0, probeWalked_ = 0;
    std::vector<int> probePath_;
    int resumeY_ = -1;

    std::deque<int> queue_;
    std::optional<PendingRecurse> pending_;
    Next next_ = Next::StartLevel;
    bool surrender_ = false;
};

// Factory signature used to instantiate a strategy on one biconnected block.
using BlockStrategyFactory =
    std::function<std::unique_ptr<Strategy>(const WeightedGraph&, const BlockLink&)>;

inline BlockStrategyFactory expBalancingBlockFactory() {
    return [](const WeightedGraph& g, const BlockLink& blk) -> std::unique_ptr<Strategy> {
        std::set<int> comp(blk.vertices.begin(), blk.vertices.end());
        return std::make_unique<ExpBalancing>(g, std::move(comp), blk.boundary, blk.entry,
                                              blk.exit);
    };
}

// Runs a per-block strategy along the chain of biconnected blocks that every
// source-target path must traverse; cut vertices are handed from one block
// strategy to the next, and bridge blocks are walked directly.
class DecomposeWrapper : public Strategy {
public:
    DecomposeWrapper(const WeightedGraph& g, const OuterEmbedding& emb, int source, int target,
                     BlockStrategyFactory factory, std::string displayName = "decompose")
        : g_(&g), factory_(std::move(factory)), name_(std::move(displayName)) {
        chain_ = biconnectedDecomposition(g, emb, source, target);
        // A multi-vertex block with no induced cyclic order means the stored
        // walk is not a simple cycle on it: the map has no usable outer face.
        for (const BlockLink& blk : chain_)
            if (!blk.isSingleEdge() && blk.boundary.empty())
                fail(ErrorCode::EmbeddingRequired, "outer walk is not a simple cycle on a block");
    }

    std::string name() const override { return name_; }

    std::optional<int> nextMove(const KnowledgeState& ks, Trace& trace) override {
        while (idx_ < chain_.size() && ks.position == chain_[idx_].exit) {
            ++idx_;
            inner_.reset();
        }
        if (idx_ >= chain_.size()) return std::nullopt;
        const BlockLink& blk = chain_[idx_];
        if (blk.isSingleEdge()) return blk.exit;
        if (!inner_) inner_ = factory_(*g_, blk);
        return inner_->nextMove(ks, trace);
    }

private:
    const WeightedGraph* g_;
    BlockStrategyFactory factory_;
    std::string name_;
    std::vector<BlockLink> chain_;
    size_t idx_ = 0;
    std::unique_ptr<Strategy> inner_;
};

}  // namespace ctp

#endif  // CTP_EXPBALANCING_HPP
