#ifndef CTP_GRAPH_HPP
#define CTP_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctp/error.hpp"
#include "ctp/rational.hpp"

namespace ctp {

/// Public vertex identifiers are opaque strings; internally vertices are
/// interned to dense indices and edges to dense edge ids.
using Vertex = std::string;

// ---------------------------------------------------------------------------
// WeightedGraph
// ---------------------------------------------------------------------------

/// Undirected graph with exact positive rational weights.
///
/// Construction is permissive (self-loops, parallel edges, nonpositive
/// weights and disconnected graphs can be *built*) so that validate() can
/// report violations as data; every other operation documents validated
/// input as a precondition.
class WeightedGraph {
  public:
    struct Edge {
        int u = -1;           // endpoint indices, u <= v after canonicalization
        int v = -1;
        Rat w;
    };

    int addVertex(const Vertex& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        adj_.emplace_back();
        return id;
    }

    int addEdge(const Vertex& a, const Vertex& b, const Rat& w) {
        return addEdge(addVertex(a), addVertex(b), w);
    }

    int addEdge(int u, int v, const Rat& w) {
        if (u < 0 || v < 0 || u >= vertexCount() || v >= vertexCount())
            fail(ErrorCode::UnknownVertex, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
        int id = static_cast<int>(edges_.size());
        edges_.push_back(Edge{u, v, w});
        adj_[u].push_back({v, id});
        if (v != u) adj_[v].push_back({u, id});
        edgeIndex_.emplace(std::make_pair(u, v), id);
        return id;
    }

    int vertexCount() const { return static_cast<int>(names_.size()); }
    int edgeCount() const { return static_cast<int>(edges_.size()); }

    bool hasVertex(const Vertex& name) const { return index_.count(name) > 0; }

    int indexOf(const Vertex& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) fail(ErrorCode::UnknownVertex, name);
        return it->second;
    }

    const Vertex& nameOf(int id) const { return names_.at(id); }

    const std::vector<Edge>& edges() const { return edges_; }

    const Rat& weight(int edgeId) const { return edges_.at(edgeId).w; }

    /// Neighbor list as (vertex, edgeId) pairs, in insertion order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adj_.at(v);
    }

    std::optional<int> edgeBetween(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edgeIndex_.find(std::make_pair(u, v));
        if (it == edgeIndex_.end()) return std::nullopt;
        return it->second;
    }

    int edgeIdOrFail(const Vertex& a, const Vertex& b) const {
        auto id = edgeBetween(indexOf(a), indexOf(b));
        if (!id) fail(ErrorCode::UnknownEdge, a + "-" + b);
        return *id;
    }

    int edgeIdOrFail(int u, int v) const {
        auto id = edgeBetween(u, v);
        if (!id) fail(ErrorCode::UnknownEdge, nameOf(u) + "-" + nameOf(v));
        return *id;
    }

    /// Canonical serialization key "u-v" with endpoint names sorted.
    std::string edgeKey(int edgeId) const {
        const Edge& e = edges_.at(edgeId);
        const Vertex& a = names_[e.u];
        const Vertex& b = names_[e.v];
        return a <= b ? a + "-" + b : b + "-" + a;
    }

    /// Other endpoint of an edge.
    int otherEnd(int edgeId, int v) const {
        const Edge& e = edges_.at(edgeId);
        return e.u == v ? e.v : e.u;
    }

  private:
    std::vector<Vertex> names_;
    std::map<Vertex, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::map<std::pair<int, int>, int> edgeIndex_;  // first insertion wins
};

// ---------------------------------------------------------------------------
// OuterEmbedding
// ---------------------------------------------------------------------------

/// The outer face as a closed walk (cyclic vertex sequence, first vertex not
/// repeated at the end). Articulation points may appear several times. The
/// embedding is supplied with the instance, never inferred.
struct OuterEmbedding {
    std::vector<Vertex> boundary;

    /// Boundary as vertex indices of g. Fails on unknown names.
    std::vector<int> boundaryIndices(const WeightedGraph& g) const {
        std::vector<int> out;
        out.reserve(boundary.size());
        for (const Vertex& v : boundary) out.push_back(g.indexOf(v));
        return out;
    }
};

/// Graph + embedding + endpoints + hidden blockages. `blocked` holds edge ids
/// of g. `universe` (candidate blockable edges) and `k` are optional metadata
/// used by generators, adversaries and the worst-case searches.
struct RoadMap {
    std::string name = "instance";
    WeightedGraph graph;
    OuterEmbedding embedding;
    Vertex source;
    Vertex target;
    std::set<int> blocked;
    std::optional<std::set<int>> universe;
    std::optional<int> k;
};

enum class ChordClass { BoundaryEdge, HorizontalChord, VerticalChord };

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct Violation {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

/// Biconnected components as edge-id sets (iterative Hopcroft–Tarjan).
/// Isolated vertices yield no block; a bridge is a 1-edge block.
inline std::vector<std::vector<int>> biconnectedEdgeBlocks(const WeightedGraph& g) {
    int n = g.vertexCount();
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<std::vector<int>> blocks;
    std::vector<int> edgeStack;
    int counter = 0;

    struct Frame {
        int v;
        int parentEdge;
        size_t next = 0;
    };

    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                auto [w, eid] = nb[f.next++];
                if (eid == f.parentEdge) continue;
                if (num[w] == -1) {
                    edgeStack.push_back(eid);
                    num[w] = low[w] = counter++;
                    stack.push_back({w, eid});
                } else if (num[w] < num[f.v]) {
                    edgeStack.push_back(eid);
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parentEdge;
                stack.pop_back();
                if (!stack.empty()) {
                    int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= num[parent]) {
                        // parent closes a block; pop up to and incl. pe
                        std::vector<int> block;
                        while (!edgeStack.empty()) {
                            int e = edgeStack.back();
                            edgeStack.pop_back();
                            block.push_back(e);
                            if (e == pe) break;
                        }
                        if (!block.empty()) blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

/// Cyclic order of a block's vertices along the outer walk: filter the walk
/// to the block's vertex set and collapse repeats. Returns nullopt when the
/// block does not occupy a contiguous stretch (invalid embedding).
inline std::optional<std::vector<int>> blockCyclicOrder(
        const std::vector<int>& walk, const std::set<int>& blockVertices) {
    std::vector<int> filtered;
    for (int v : walk)
        if (blockVertices.count(v)) filtered.push_back(v);
    if (filtered.empty()) return std::nullopt;
    // Collapse consecutive duplicates, cyclically.
    std::vector<int> order;
    for (int v : filtered)
        if (order.empty() || order.back() != v) order.push_back(v);
    while (order.size() > 1 && order.front() == order.back()) order.pop_back();
    // Each vertex must now appear exactly once.
    std::set<int> seen;
    for (int v : order)
        if (!seen.insert(v).second) return std::nullopt;
    if (seen.size() != blockVertices.size()) return std::nullopt;
    return order;
}

/// Do chords (a,b) and (c,d) cross in the cyclic order pos? Crossing iff
/// exactly one of c, d lies strictly between a and b. Chords sharing an
/// endpoint meet there and never cross.
inline bool chordsCross(int a, int b, int c, int d,
                        const std::map<int, int>& pos, int m) {
    if (c == a || c == b || d == a || d == b) return false;
    auto between = [&](int x) {
        int pa = pos.at(a), pb = pos.at(b), px = pos.at(x);
        int span = (pb - pa + m) % m;
        int off = (px - pa + m) % m;
        return off > 0 && off < span;
    };
    return between(c) != between(d);
}

}  // namespace detail

/// Check the outerplanarity conventions. Violations are data, not failures:
/// reports missing/duplicate structure, bad weights, disconnectedness,
/// boundary defects, and crossing chords per biconnected block.
inline ValidationReport validate(const WeightedGraph& g,
                                 const OuterEmbedding& emb) {
    ValidationReport report;
    auto add = [&](const std::string& kind, const std::string& detail) {
        report.violations.push_back({kind, detail});
    };

    if (g.vertexCount() == 0) {
        add("empty-graph", "graph has no vertices");
        return report;
    }

    // Edge-level defects.
    std::set<std::pair<int, int>> seenPairs;
    for (int i = 0; i < g.edgeCount(); ++i) {
        const auto& e = g.edges()[i];
        if (e.u == e.v) add("self-loop", g.nameOf(e.u));
        if (!seenPairs.insert({e.u, e.v}).second)
            add("parallel-edges", g.edgeKey(i));
        if (e.w <= 0) add("non-positive-weight", g.edgeKey(i) + " w=" + ratStr(e.w));
    }

    // Connectivity.
    {
        std::vector<char> vis(g.vertexCount(), 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, eid] : g.neighbors(v))
                if (!vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
        }
        for (int v = 0; v < g.vertexCount(); ++v)
            if (!vis[v]) add("disconnected", g.nameOf(v));
    }

    // Boundary walk sanity.
    std::vector<int> walk;
    bool walkOk = true;
    for (const Vertex& name : emb.boundary) {
        if (!g.hasVertex(name)) {
            add("unknown-boundary-vertex", name);
            walkOk = false;
            continue;
        }
        walk.push_back(g.indexOf(name));
    }
    if (walk.empty()) {
        add("empty-boundary", "boundary walk has no vertices");
        return report;
    }
    if (!walkOk) return report;

    std::set<int> onBoundary(walk.begin(), walk.end());
    for (int v = 0; v < g.vertexCount(); ++v)
        if (!onBoundary.count(v)) add("missing-vertex-on-boundary", g.nameOf(v));

    std::set<int> boundaryEdges;
    int m = static_cast<int>(walk.size());
    if (m == 2 && walk[0] == walk[1]) m = 1;  // degenerate repeated vertex
    for (int i = 0; i < m && m >= 2; ++i) {
        int a = walk[i], b = walk[(i + 1) % m];
        if (a == b) continue;  // repeated articulation vertex in the walk
        auto eid = g.edgeBetween(a, b);
        if (!eid) {
            add("boundary-step-not-an-edge", g.nameOf(a) + "-" + g.nameOf(b));
        } else {
            boundaryEdges.insert(*eid);
        }
    }

    // Chord crossings, per biconnected block.
    for (const auto& blockEdges : detail::biconnectedEdgeBlocks(g)) {
        std::set<int> blockVertices;
        for (int eid : blockEdges) {
            blockVertices.insert(g.edges()[eid].u);
            blockVertices.insert(g.edges()[eid].v);
        }
        if (blockVertices.size() < 3) continue;  // bridges cannot host chords
        std::vector<int> chords;
        for (int eid : blockEdges)
            if (!boundaryEdges.count(eid)) chords.push_back(eid);
        if (chords.empty()) continue;  // nothing that could cross
        auto order = detail::blockCyclicOrder(walk, blockVertices);
        if (!order) {
            std::string names;
            for (int v : blockVertices) names += g.nameOf(v) + " ";
            add("block-not-contiguous-on-boundary", names);
            continue;
        }
        std::map<int, int> pos;
        for (size_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = static_cast<int>(i);
        int mm = static_cast<int>(order->size());
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                const auto& e1 = g.edges()[chords[i]];
                const auto& e2 = g.edges()[chords[j]];
                if (detail::chordsCross(e1.u, e1.v, e2.u, e2.v, pos, mm))
                    add("crossing-chords",
                        g.edgeKey(chords[i]) + " x " + g.edgeKey(chords[j]));
            }
    }

    return report;
}

// ---------------------------------------------------------------------------
// sides / classifyChord
// ---------------------------------------------------------------------------

/// The two boundary arcs strictly between s and t, each listed from s to t.
/// Requires the boundary to be a simple cycle (2-connected instance).
struct Sides {
    std::vector<int> upper;  // boundary order s -> t
    std::vector<int> lower;  // the other arc, also listed s -> t
};

inline Sides sides(const WeightedGraph& g, const OuterEmbedding& emb, int si, int ti) {
    std::vector<int> walk = emb.boundaryIndices(g);
    std::set<int> distinct(walk.begin(), walk.end());
    if (distinct.size() != walk.size())
        fail(ErrorCode::NotBiconnected, "boundary walk repeats a vertex");
    auto sIt = std::find(walk.begin(), walk.end(), si);
    auto tIt = std::find(walk.begin(), walk.end(), ti);
    if (sIt == walk.end() || tIt == walk.end())
        fail(ErrorCode::NotBiconnected, "source or target not on boundary");
    int n = static_cast<int>(walk.size());
    int sp = static_cast<int>(sIt - walk.begin());
    int tp = static_cast<int>(tIt - walk.begin());
    Sides out;
    for (int i = (sp + 1) % n; i != tp; i = (i + 1) % n) out.upper.push_back(walk[i]);
    for (int i = (tp + 1) % n; i != sp; i = (i + 1) % n) out.lower.push_back(walk[i]);
    std::reverse(out.lower.begin(), out.lower.end());  // list from s to t
    return out;
}

inline Sides sides(const WeightedGraph& g, const OuterEmbedding& emb,
                   const Vertex& s, const Vertex& t) {
    return sides(g, emb, g.indexOf(s), g.indexOf(t));
}

/// Classify an edge given the embedding and the s/t endpoints. Edges touching
/// s or t are horizontal, never vertical.
inline ChordClass classifyChord(const WeightedGraph& g, const OuterEmbedding& emb,
                                const Vertex& s, const Vertex& t,
                                const Vertex& a, const Vertex& b) {
    auto eid = g.edgeBetween(g.indexOf(a), g.indexOf(b));
    if (!eid) fail(ErrorCode::UnknownEdge, a + "-" + b);

    std::vector<int> walk = emb.boundaryIndices(g);
    int n = static_cast<int>(walk.size());
    int ai = g.indexOf(a), bi = g.indexOf(b);
    for (int i = 0; i < n; ++i) {
        int u = walk[i], v = walk[(i + 1) % n];
        if ((u == ai && v == bi) || (u == bi && v == ai))
            return ChordClass::BoundaryEdge;
    }

    int si = g.indexOf(s), ti = g.indexOf(t);
    if (ai == si || ai == ti || bi == si || bi == ti)
        return ChordClass::HorizontalChord;

    Sides ss = sides(g, emb, s, t);
    auto onUpper = [&](int v) {
        return std::find(ss.upper.begin(), ss.upper.end(), v) != ss.upper.end();
    };
    return onUpper(ai) != onUpper(bi) ? ChordClass::VerticalChord
                                      : ChordClass::HorizontalChord;
}

// ---------------------------------------------------------------------------
// targetComponent / sourceComponent
// ---------------------------------------------------------------------------

namespace detail {

inline std::set<int> reachAvoiding(const WeightedGraph& g, int from,
                                   const std::set<int>& forbiddenVertices,
                                   const std::set<int>& excludedEdges) {
    std::set<int> seen;
    if (forbiddenVertices.count(from)) return seen;
    std::vector<int> stack{from};
    seen.insert(from);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, eid] : g.neighbors(v)) {
            if (excludedEdges.count(eid) || forbiddenVertices.count(w)) continue;
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen;
}

}  // namespace detail

/// {u,v} plus everything reachable from t once u, v (and excluded edges) are
/// removed. Errors with NotASeparator if s is still reachable from t.
inline std::set<int> targetComponent(const WeightedGraph& g, int u, int v,
                                     int s, int t,
                                     const std::set<int>& excludedEdges = {}) {
    std::set<int> forbidden{u, v};
    std::set<int> reach = detail::reachAvoiding(g, t, forbidden, excludedEdges);
    if (reach.count(s))
        fail(ErrorCode::NotASeparator,
             "{" + g.nameOf(u) + "," + g.nameOf(v) + "} does not separate " +
                 g.nameOf(s) + " from " + g.nameOf(t));
    reach.insert(u);
    reach.insert(v);
    return reach;
}

/// Mirror of targetComponent on the s side.
inline std::set<int> sourceComponent(const WeightedGraph& g, int u, int v,
                                     int s, int t,
                                     const std::set<int>& excludedEdges = {}) {
    std::set<int> forbidden{u, v};
    std::set<int> reach = detail::reachAvoiding(g, s, forbidden, excludedEdges);
    if (reach.count(t))
        fail(ErrorCode::NotASeparator,
             "{" + g.nameOf(u) + "," + g.nameOf(v) + "} does not separate " +
                 g.nameOf(s) + " from " + g.nameOf(t));
    reach.insert(u);
    reach.insert(v);
    return reach;
}

// ---------------------------------------------------------------------------
// biconnectedDecomposition
// ---------------------------------------------------------------------------

/// One link in the chain of biconnected blocks every s–t walk must traverse.
struct BlockLink {
    std::set<int> vertices;
    std::vector<int> boundary;  // induced cyclic order (from the outer walk)
    int entry = -1;             // s_i
    int exit = -1;              // t_i
    bool isSingleEdge() const { return vertices.size() == 2; }
};

/// Chain of blocks from s to t, in traversal order, off-path blocks dropped.
/// Entry/exit are the articulation vertices gluing consecutive blocks.
inline std::vector<BlockLink> biconnectedDecomposition(const WeightedGraph& g,
                                                       const OuterEmbedding& emb, int si,
                                                       int ti) {
    auto blocks = detail::biconnectedEdgeBlocks(g);

    // Vertex sets per block.
    std::vector<std::set<int>> bv(blocks.size());
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int eid : blocks[i]) {
            bv[i].insert(g.edges()[eid].u);
            bv[i].insert(g.edges()[eid].v);
        }

    // Block-cut tree: nodes = blocks + cut vertices shared by >= 2 blocks.
    std::map<int, std::vector<int>> blocksOfVertex;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int v : bv[i]) blocksOfVertex[v].push_back(static_cast<int>(i));

    // BFS over blocks: two blocks are adjacent when they share a vertex.
    int start = -1, goal = -1;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (bv[i].count(si) && start == -1) start = static_cast<int>(i);
        if (bv[i].count(ti)) goal = static_cast<int>(i);
    }
    // Prefer a single block containing both endpoints.
    for (size_t i = 0; i < blocks.size(); ++i)
        if (bv[i].count(si) && bv[i].count(ti)) {
            start = goal = static_cast<int>(i);
            break;
        }
    if (start == -1 || goal == -1)
        fail(ErrorCode::UnknownVertex, "source or target not in any block");

    std::vector<int> prevBlock(blocks.size(), -1), prevCut(blocks.size(), -1);
    std::vector<char> vis(blocks.size(), 0);
    std::vector<int> queue{start};
    vis[start] = 1;
    for (size_t qi = 0; qi < queue.size() && !vis[goal]; ++qi) {
        int b = queue[qi];
        for (int v : bv[b]) {
            for (int nb : blocksOfVertex[v]) {
                if (vis[nb]) continue;
                vis[nb] = 1;
                prevBlock[nb] = b;
                prevCut[nb] = v;
                queue.push_back(nb);
            }
        }
    }

    std::vector<int> chain;
    std::vector<int> cuts;  // cut vertex between chain[i] and chain[i+1]
    for (int b = goal; b != -1; b = prevBlock[b]) {
        chain.push_back(b);
        if (prevBlock[b] != -1) cuts.push_back(prevCut[b]);
    }
    std::reverse(chain.begin(), chain.end());
    std::reverse(cuts.begin(), cuts.end());

    std::vector<int> walk = emb.boundaryIndices(g);
    std::vector<BlockLink> out;
    for (size_t i = 0; i < chain.size(); ++i) {
        BlockLink link;
        link.vertices = bv[chain[i]];
        link.entry = (i == 0) ? si : cuts[i - 1];
        link.exit = (i + 1 == chain.size()) ? ti : cuts[i];
        auto order = detail::blockCyclicOrder(walk, link.vertices);
        if (order) link.boundary = *order;
        out.push_back(std::move(link));
    }
    return out;
}

inline std::vector<BlockLink> biconnectedDecomposition(const WeightedGraph& g,
                                                       const OuterEmbedding& emb,
                                                       const Vertex& s, const Vertex& t) {
    return biconnectedDecomposition(g, emb, g.indexOf(s), g.indexOf(t));
}

}  // namespace ctp

#endif  // CTP_GRAPH_HPP
