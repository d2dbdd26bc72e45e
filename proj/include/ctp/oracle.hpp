#ifndef CTP_ORACLE_HPP
#define CTP_ORACLE_HPP

#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "ctp/graph.hpp"
#include "ctp/rational.hpp"

namespace ctp {

/// Exact single-pair shortest path result. `cost` empty means unreachable
/// (a value, not an error). When reachable, `path` is the lexicographically
/// smallest vertex-name sequence among minimum-cost paths.
struct DistanceResult {
    std::optional<Rat> cost;
    std::vector<int> path;
    bool reachable() const { return cost.has_value(); }
};

namespace detail {

/// Dijkstra distances from `from`, skipping excluded edges and (optionally)
/// vertices outside `within`. Unreached vertices keep an empty optional.
inline std::vector<std::optional<Rat>> dijkstra(
        const WeightedGraph& g, int from, const std::set<int>& excluded,
        const std::set<int>* within) {
    int n = g.vertexCount();
    std::vector<std::optional<Rat>> dist(n);
    if (within && !within->count(from)) return dist;
    using Item = std::pair<Rat, int>;
    auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    dist[from] = Rat(0);
    pq.push({Rat(0), from});
    std::vector<char> settled(n, 0);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (settled[v]) continue;
        settled[v] = 1;
        for (auto [w, eid] : g.neighbors(v)) {
            if (excluded.count(eid)) continue;
            if (within && !within->count(w)) continue;
            Rat nd = d + g.weight(eid);
            if (!dist[w] || nd < *dist[w]) {
                dist[w] = nd;
                pq.push({nd, w});
            }
        }
    }
    return dist;
}

}  // namespace detail

/// Exact shortest path from x to y in g minus `excluded`, restricted to the
/// vertex set `within` when given. Deterministic tie-break: among all
/// minimum-cost paths, the lexicographically smallest vertex-name sequence
/// (chosen greedily over the shortest-path DAG).
inline DistanceResult shortestDistance(const WeightedGraph& g,
                                       const std::set<int>& excluded, int x,
                                       int y,
                                       const std::set<int>* within = nullptr) {
    DistanceResult out;
    if (x == y) {
        if (within && !within->count(x)) return out;
        out.cost = Rat(0);
        out.path = {x};
        return out;
    }
    auto fromX = detail::dijkstra(g, x, excluded, within);
    if (!fromX[y]) return out;
    auto fromY = detail::dijkstra(g, y, excluded, within);
    Rat total = *fromX[y];

    out.cost = total;
    out.path.push_back(x);
    int cur = x;
    while (cur != y) {
        int best = -1;
        for (auto [w, eid] : g.neighbors(cur)) {
            if (excluded.count(eid)) continue;
            if (within && !within->count(w)) continue;
            if (!fromX[w] || !fromY[w]) continue;
            // w continues a minimum-cost x->y path through cur?
            if (*fromX[cur] + g.weight(eid) != *fromX[w]) continue;
            if (*fromX[w] + *fromY[w] != total) continue;
            if (best == -1 || g.nameOf(w) < g.nameOf(best)) best = w;
        }
        out.path.push_back(best);
        cur = best;
    }
    return out;
}

/// True iff s and t stay connected after removing `blocked`.
inline bool isFeasible(const WeightedGraph& g, int s, int t,
                       const std::set<int>& blocked) {
    return shortestDistance(g, blocked, s, t).reachable();
}

/// d_opt of a road map. Feasibility is a contract here: unreachable errors.
inline Rat optCost(const RoadMap& rm) {
    int s = rm.graph.indexOf(rm.source);
    int t = rm.graph.indexOf(rm.target);
    auto res = shortestDistance(rm.graph, rm.blocked, s, t);
    if (!res.reachable())
        fail(ErrorCode::InfeasibleRoadMap,
             rm.name + ": target unreachable under blockages");
    return *res.cost;
}

/// Max edge weight divided by min edge weight.
inline Rat stretch(const WeightedGraph& g) {
    if (g.edgeCount() == 0) fail(ErrorCode::TooSmall, "stretch needs an edge");
    Rat mn = g.edges()[0].w, mx = g.edges()[0].w;
    for (const auto& e : g.edges()) {
        if (e.w < mn) mn = e.w;
        if (e.w > mx) mx = e.w;
    }
    Rat out = mx / mn;
    out.canonicalize();
    return out;
}

}  // namespace ctp

#endif  // CTP_ORACLE_HPP
