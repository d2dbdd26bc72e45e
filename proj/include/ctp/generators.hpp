#ifndef CTP_GENERATORS_HPP
#define CTP_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
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

// ---- fan of parallel two-edge paths ---------------------------------------

// k+1 disjoint s-v_i-t paths with a unit first hop and an eps-weight last
// hop; up to k of the eps-edges may be blocked.  Forces every deterministic
// strategy to pay 2k+1+eps against the optimum 1+eps.
inline RoadMap genWestphal(int k, const Rat& eps) {
    if (k < 1) fail(ErrorCode::UsageError, "need k >= 1");
    if (!(eps > 0)) fail(ErrorCode::UsageError, "need eps > 0");
    RoadMap rm;
    rm.name = "westphal" + std::to_string(k);
    WeightedGraph& g = rm.graph;
    g.addVertex("s");
    g.addVertex("t");
    int m = k + 1;
    std::set<int> universe;
    for (int i = 1; i <= m; ++i) {
        std::string v = "v" + std::to_string(i);
        g.addVertex(v);
        g.addEdge("s", v, Rat(1));
        universe.insert(g.addEdge(v, std::string("t"), eps));
    }
    // closed walk covering every edge; for an odd number of paths the last
    // one is walked out and back
    std::vector<Vertex>& b = rm.embedding.boundary;
    b.push_back("s");
    int evenPart = m - (m % 2);
    for (int q = 0; q < evenPart / 2; ++q) {
        if (q > 0) b.push_back("s");
        b.push_back("v" + std::to_string(2 * q + 1));
        b.push_back(std::string("t"));
        b.push_back("v" + std::to_string(2 * q + 2));
    }
    if (m % 2 == 1) {
        if (m > 1) b.push_back("s");
        b.push_back("v" + std::to_string(m));
        b.push_back(std::string("t"));
        b.push_back("v" + std::to_string(m));
    }
    rm.source = "s";
    rm.target = std::string("t");
    rm.universe = universe;
    rm.k = k;
    return rm;
}

// ---- shell graphs ----------------------------------------------------------

// 2n-cycle v0..v_{2n-1} with every non-neighbour of t = v_n (other than s and
// t itself) chorded straight to t.  Only the 2n-4 chords are blockable.
inline RoadMap genShell(int n) {
    if (n < 2) fail(ErrorCode::UsageError, "need n >= 2");
    RoadMap rm;
    rm.name = "sh" + std::to_string(n);
    WeightedGraph& g = rm.graph;
    int m = 2 * n;
    for (int i = 0; i < m; ++i) g.addVertex("v" + std::to_string(i));
    for (int i = 0; i < m; ++i)
        g.addEdge("v" + std::to_string(i), "v" + std::to_string((i + 1) % m), Rat(1));
    std::set<int> universe;
    for (int i = 0; i < m; ++i) {
        if (i == 0 || i == n - 1 || i == n || i == n + 1) continue;
        universe.insert(g.addEdge("v" + std::to_string(i), "v" + std::to_string(n), Rat(1)));
    }
    for (int i = 0; i < m; ++i) rm.embedding.boundary.push_back("v" + std::to_string(i));
    rm.source = "v0";
    rm.target = "v" + std::to_string(n);
    rm.universe = universe;
    rm.k = 2 * n - 3;
    return rm;
}

// Blocking policy that stonewalls side sweeps until one side has been pushed
// past half the shell's depth, then releases the chord just beyond the
// deepest vertex of that side's previous sweep.
class ShellAdversary : public Adversary {
public:
    explicit ShellAdversary(const RoadMap& shell) : k_(shell.k.value_or(0)) {
        const WeightedGraph& g = shell.graph;
        n_ = g.vertexCount() / 2;
        threshold_ = (n_ - 1) / 2;
        if (!shell.universe) fail(ErrorCode::UsageError, "shell road map without universe");
        int t = g.indexOf(shell.target);
        for (int eid : *shell.universe) {
            const auto& e = g.edges()[eid];
            int other = e.u == t ? e.v : e.u;
            int i = std::stoi(g.nameOf(other).substr(1));
            int side = i < n_ ? 0 : 1;
            long depth = side == 0 ? i : 2 * n_ - i;
            info_[eid] = {side, depth};
        }
    }

    bool block(int edgeId, const KnowledgeState& ks) override {
        (void)ks;
        auto it = info_.find(edgeId);
        if (it == info_.end()) return false;
        auto [side, depth] = it->second;
        if (side != lastSide_) {
            prevMax_[side] = curMax_[side];
            lastSide_ = side;
        }
        bool release = depth == prevMax_[side] + 1 && prevMax_[side] >= threshold_;
        curMax_[side] = std::max(curMax_[side], depth);
        if (release) return false;
        if (blocked_ >= k_) return false;  // budget spent: must release
        ++blocked_;
        return true;
    }

    long blockedCount() const { return blocked_; }

private:
    int n_;
    long threshold_;
    long k_;
    std::map<int, std::pair<int, long>> info_;  // edge id -> (side, depth)
    long prevMax_[2] = {0, 0};
    long curMax_[2] = {0, 0};
    int lastSide_ = -1;
    long blocked_ = 0;
};

// Depth budgets x_i = 2^{i-1} for i = 1..count.
inline std::vector<long> doublingBudgets(int count) {
    std::vector<long> xs;
    long x = 1;
    for (int i = 0; i < count; ++i, x *= 2) xs.push_back(x);
    return xs;
}

// Depth budgets x_i = i for i = 1..count.
inline std::vector<long> linearBudgets(int count) {
    std::vector<long> xs;
    for (int i = 1; i <= count; ++i) xs.push_back(i);
    return xs;
}

// ---- sequences behind the weighted family ---------------------------------

struct SequenceRow {
    int i;
    Rat r;     // target ratio i+1
    Rat rEps;  // realized ratio i+1-eps
    Int S;     // top-edge weight (i+1)!
    Int N;     // copies per chain i(i+1)
    Int k;     // blockage budget N_i(k_{i-1}+1)
};

inline std::vector<SequenceRow> lbSequences(int iMax, const Rat& eps) {
    if (iMax < 1) fail(ErrorCode::UsageError, "need i >= 1");
    std::vector<SequenceRow> rows;
    Int prevK = 0;
    for (int i = 1; i <= iMax; ++i) {
        SequenceRow row;
        row.i = i;
        row.r = Rat(i + 1);
        row.rEps = Rat(i + 1) - eps;
        mpz_fac_ui(row.S.get_mpz_t(), static_cast<unsigned long>(i + 1));
        row.N = Int(i) * Int(i + 1);
        row.k = i == 1 ? Int(1) : Int(row.N * (prevK + 1));
        prevK = row.k;
        rows.push_back(row);
    }
    return rows;
}

// ---- chain transformation ---------------------------------------------------

// Chains N copies of an unbalanced road map H end to end, adds an escape
// chord of weight epsStar from every copy's exit to a fresh global target,
// and spans the whole chain with a single top edge of weight S.  Blockage
// budget grows to N(k_H + 1).
inline RoadMap transformT(const RoadMap& H, const Rat& S, long N, const Rat& epsStar) {
    const WeightedGraph& hg = H.graph;
    int hs = hg.indexOf(H.source);
    int ht = hg.indexOf(H.target);
    auto top = hg.edgeBetween(hs, ht);
    if (!top) fail(ErrorCode::NotUnbalanced, "no direct source-target edge");
    auto aside = shortestDistance(hg, {*top}, hs, ht);
    if (!aside.reachable() || !(*aside.cost < hg.weight(*top)))
        fail(ErrorCode::NotUnbalanced, "direct edge is not the longest route");
    if (!H.k) fail(ErrorCode::UsageError, "input road map carries no blockage budget");

    // the interior of H must lie on a single boundary arc between s and t
    const auto& hb = H.embedding.boundary;
    int hn = static_cast<int>(hb.size());
    int sAt = -1;
    for (int i = 0; i < hn; ++i)
        if (hb[i] == H.source) sAt = i;
    if (sAt < 0) fail(ErrorCode::NotUnbalanced, "source missing from boundary");
    std::vector<std::string> arc;
    if (hb[(sAt + 1) % hn] == H.target) {
        for (int i = 2; i < hn; ++i) arc.push_back(hb[(sAt + i) % hn]);
        std::reverse(arc.begin(), arc.end());
    } else if (hb[(sAt + hn - 1) % hn] == H.target) {
        for (int i = 1; i + 1 < hn; ++i) arc.push_back(hb[(sAt + i) % hn]);
    } else {
        fail(ErrorCode::NotUnbalanced, "terminals not adjacent on the boundary");
    }

    std::set<int> hUniverse;
    if (H.universe) {
        hUniverse = *H.universe;
    } else {
        for (int e = 0; e < hg.edgeCount(); ++e)
            if (e != *top) hUniverse.insert(e);
    }

    RoadMap rm;
    rm.name = "T(" + H.name + ")";
    WeightedGraph& g = rm.graph;
    g.addVertex(H.source);
    rm.embedding.boundary.push_back(H.source);
    std::set<int> universe;
    auto mapped = [&](int hv, long j) -> std::string {
        if (hv == hs) return j == 1 ? H.source : H.target + "_" + std::to_string(j - 1);
        if (hv == ht) return H.target + "_" + std::to_string(j);
        return hg.nameOf(hv) + "_" + std::to_string(j);
    };
    for (long j = 1; j <= N; ++j) {
        for (const auto& nm : arc) {
            g.addVertex(nm + "_" + std::to_string(j));
            rm.embedding.boundary.push_back(nm + "_" + std::to_string(j));
        }
        g.addVertex(H.target + "_" + std::to_string(j));
        rm.embedding.boundary.push_back(H.target + "_" + std::to_string(j));
        for (int e = 0; e < hg.edgeCount(); ++e) {
            const auto& he = hg.edges()[e];
            int eid = g.addEdge(mapped(he.u, j), mapped(he.v, j), he.w);
            if (hUniverse.count(e)) universe.insert(eid);
        }
    }
    g.addVertex(H.target);
    rm.embedding.boundary.push_back(H.target);
    for (long j = 1; j <= N; ++j)
        universe.insert(g.addEdge(H.target + "_" + std::to_string(j), H.target, epsStar));
    g.addEdge(H.source, H.target, S);
    rm.source = H.source;
    rm.target = H.target;
    rm.universe = universe;
    rm.k = static_cast<int>(N * (H.k.value_or(0) + 1));
    return rm;
}

// H_1: triangle with a heavy direct edge, a unit hop and a light exit.
inline RoadMap genWeightedFamily(int i, const Rat& epsStar = Rat(1, 100)) {
    if (i < 1) fail(ErrorCode::UsageError, "need i >= 1");
    if (!(epsStar > 0) || !(epsStar < 1)) fail(ErrorCode::UsageError, "need 0 < eps* < 1");
    RoadMap rm;
    rm.name = "H1";
    rm.graph.addVertex("s");
    rm.graph.addVertex("u");
    rm.graph.addVertex("t");
    rm.graph.addEdge("s", "t", Rat(2));
    rm.graph.addEdge("s", "u", Rat(1));
    int ut = rm.graph.addEdge("u", "t", epsStar);
    rm.embedding.boundary = {"s", "u", "t"};
    rm.source = "s";
    rm.target = "t";
    rm.universe = std::set<int>{ut};
    rm.k = 1;
    if (i == 1) return rm;
    auto rows = lbSequences(i, epsStar);
    for (int step = 2; step <= i; ++step) {
        const auto& row = rows[step - 1];
        rm = transformT(rm, Rat(row.S), row.N.get_si(), epsStar);
        rm.name = "H" + std::to_string(step);
    }
    return rm;
}

// ---- seeded random outerplanar instances -----------------------------------

namespace detail {

struct SplitMix64 {
    uint64_t x;
    explicit SplitMix64(uint64_t seed) : x(seed) {}
    uint64_t next() {
        uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long below(long bound) { return static_cast<long>(next() % static_cast<uint64_t>(bound)); }
};

}  // namespace detail

// Unit-weight cycle with random non-crossing chords; the universe is a random
// subset of at most eight edges and the budget allows blocking all of them.
inline RoadMap randomOuterplanar(uint64_t seed, int maxVertices = 12,
                                 bool randomWeights = false) {
    if (maxVertices < 4) fail(ErrorCode::UsageError, "need at least 4 vertices");
    detail::SplitMix64 rng(seed);
    int n = 4 + static_cast<int>(rng.below(maxVertices - 3));
    RoadMap rm;
    rm.name = "rand" + std::to_string(seed);
    WeightedGraph& g = rm.graph;
    for (int i = 0; i < n; ++i) g.addVertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        g.addEdge("v" + std::to_string(i), "v" + std::to_string((i + 1) % n), Rat(1));
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[i] = i;
    std::vector<std::pair<int, int>> chords;
    for (int tries = 0; tries < 2 * n; ++tries) {
        int a = static_cast<int>(rng.below(n));
        int b = static_cast<int>(rng.below(n));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1)) continue;
        bool bad = g.edgeBetween(a, b).has_value();
        for (const auto& [c, d] : chords)
            if (detail::chordsCross(a, b, c, d, pos, n)) bad = true;
        if (bad) continue;
        chords.emplace_back(a, b);
        g.addEdge("v" + std::to_string(a), "v" + std::to_string(b), Rat(1));
    }
    for (int i = 0; i < n; ++i) rm.embedding.boundary.push_back("v" + std::to_string(i));
    rm.source = "v0";
    rm.target = "v" + std::to_string(n / 2);
    int uSize = 1 + static_cast<int>(rng.below(8));
    uSize = std::min(uSize, g.edgeCount());
    std::set<int> universe;
    while (static_cast<int>(universe.size()) < uSize)
        universe.insert(static_cast<int>(rng.below(g.edgeCount())));
    rm.universe = universe;
    rm.k = uSize;
    if (randomWeights) {
        // Weights are drawn after the topology so edge ids (and with them the
        // universe) are unchanged; the graph is rebuilt in insertion order.
        WeightedGraph wg;
        for (int i = 0; i < n; ++i) wg.addVertex(g.nameOf(i));
        for (const auto& e : g.edges()) {
            Rat w = Rat(1 + static_cast<long>(rng.below(8))) /
                    Rat(1 + static_cast<long>(rng.below(4)));
            w.canonicalize();
            wg.addEdge(g.nameOf(e.u), g.nameOf(e.v), w);
        }
        rm.graph = std::move(wg);
    }
    return rm;
}

}  // namespace ctp

#endif  // CTP_GENERATORS_HPP
