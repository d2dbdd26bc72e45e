#pragma once

// Instance files (JSON), trace serialization helpers and CSV reports.

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ctp/engine.hpp"
#include "ctp/error.hpp"
#include "ctp/graph.hpp"
#include "ctp/oracle.hpp"
#include "ctp/rational.hpp"

namespace ctp {

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(ErrorCode::IoError, std::string("missing field: ") + key);
    return *it;
}

inline Rat weightOf(const nlohmann::json& w) {
    if (w.is_string()) return parseRat(w.get<std::string>());
    if (w.is_number_integer()) return Rat(w.get<long>());
    fail(ErrorCode::IoError, "edge weight must be a rational string or an integer");
}

/// "u-v" -> edge id. Vertex names are forbidden from containing '-' so the
/// first dash always splits correctly.
inline int edgeIdFromKey(const WeightedGraph& g, const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
        fail(ErrorCode::IoError, "edge key must look like 'u-v': " + key);
    return g.edgeIdOrFail(key.substr(0, dash), key.substr(dash + 1));
}

}  // namespace detail

inline RoadMap instanceFromJson(const nlohmann::json& doc) {
    try {
        if (!doc.is_object()) fail(ErrorCode::IoError, "instance must be a JSON object");
        RoadMap rm;
        rm.name = detail::field(doc, "name").get<std::string>();
        for (const auto& v : detail::field(doc, "vertices")) {
            std::string name = v.get<std::string>();
            if (name.empty() || name.find('-') != std::string::npos)
                fail(ErrorCode::IoError,
                     "vertex names must be nonempty and must not contain '-': '" + name + "'");
            rm.graph.addVertex(name);
        }
        for (const auto& e : detail::field(doc, "edges")) {
            std::string u = detail::field(e, "u").get<std::string>();
            std::string v = detail::field(e, "v").get<std::string>();
            rm.graph.indexOf(u);  // edges may not introduce vertices silently
            rm.graph.indexOf(v);
            rm.graph.addEdge(u, v, detail::weightOf(detail::field(e, "w")));
        }
        for (const auto& v : detail::field(doc, "boundary"))
            rm.embedding.boundary.push_back(v.get<std::string>());
        rm.source = detail::field(doc, "source").get<std::string>();
        rm.target = detail::field(doc, "target").get<std::string>();
        rm.graph.indexOf(rm.source);
        rm.graph.indexOf(rm.target);
        if (doc.contains("blocked"))
            for (const auto& key : doc["blocked"])
                rm.blocked.insert(detail::edgeIdFromKey(rm.graph, key.get<std::string>()));
        if (doc.contains("universe")) {
            std::set<int> uni;
            for (const auto& key : doc["universe"])
                uni.insert(detail::edgeIdFromKey(rm.graph, key.get<std::string>()));
            rm.universe = std::move(uni);
        }
        if (doc.contains("k")) rm.k = doc["k"].get<int>();
        return rm;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::IoError, std::string("malformed instance: ") + e.what());
    }
}

inline nlohmann::json instanceToJson(const RoadMap& rm) {
    nlohmann::json doc;
    doc["name"] = rm.name;
    nlohmann::json vs = nlohmann::json::array();
    for (int i = 0; i < rm.graph.vertexCount(); ++i) vs.push_back(rm.graph.nameOf(i));
    doc["vertices"] = std::move(vs);
    nlohmann::json bnd = nlohmann::json::array();
    for (const auto& v : rm.embedding.boundary) bnd.push_back(v);
    doc["boundary"] = std::move(bnd);
    nlohmann::json es = nlohmann::json::array();
    for (const auto& e : rm.graph.edges())
        es.push_back({{"u", rm.graph.nameOf(e.u)},
                      {"v", rm.graph.nameOf(e.v)},
                      {"w", ratStr(e.w)}});
    doc["edges"] = std::move(es);
    doc["source"] = rm.source;
    doc["target"] = rm.target;
    if (!rm.blocked.empty()) {
        nlohmann::json bl = nlohmann::json::array();
        for (int eid : rm.blocked) bl.push_back(rm.graph.edgeKey(eid));
        doc["blocked"] = std::move(bl);
    }
    if (rm.universe) {
        nlohmann::json uni = nlohmann::json::array();
        for (int eid : *rm.universe) uni.push_back(rm.graph.edgeKey(eid));
        doc["universe"] = std::move(uni);
    }
    if (rm.k) doc["k"] = *rm.k;
    return doc;
}

inline RoadMap readInstance(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::IoError, path + ": " + e.what());
    }
    return instanceFromJson(doc);
}

inline void writeInstance(const RoadMap& rm, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
    out << instanceToJson(rm).dump(2) << '\n';
    if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

// ---------------------------------------------------------------------------
// CSV reports
// ---------------------------------------------------------------------------

struct ReportRow {
    std::string instance;
    std::string strategy;
    long k = 0;
    Rat traversed;
    Rat dOpt;
    Rat ratio;
    Rat bound;
    bool pass = false;
    long recursions = 0;
    long events = 0;
};

inline constexpr const char* kReportHeader =
    "instance,strategy,k,traversed,d_opt,ratio,bound,pass,recursions,events";

inline ReportRow makeReportRow(const RoadMap& rm, const std::string& strategyName,
                               const SimulationResult& result, const Rat& bound) {
    ReportRow row;
    row.instance = rm.name;
    row.strategy = strategyName;
    row.k = rm.k ? *rm.k : static_cast<long>(rm.blocked.size());
    row.traversed = result.traversed;
    std::set<int> blocked = rm.blocked;
    blocked.insert(result.realizedBlocked.begin(), result.realizedBlocked.end());
    auto res = shortestDistance(rm.graph, blocked, rm.graph.indexOf(rm.source),
                                rm.graph.indexOf(rm.target));
    if (!res.reachable()) fail(ErrorCode::InfeasibleRoadMap, rm.name);
    row.dOpt = *res.cost;
    row.ratio = competitiveRatio(result, rm);
    row.bound = bound;
    row.pass = row.ratio <= bound;
    row.recursions = result.recursionCount;
    row.events = static_cast<long>(result.trace.size());
    return row;
}

/// Deterministic CSV: fixed header, rows in the given order, rationals in
/// canonical "p/q" form. Refuses to write an empty report.
inline std::string reportToCsv(const std::vector<ReportRow>& rows) {
    if (rows.empty()) fail(ErrorCode::IoError, "refusing to write an empty report");
    std::string out = kReportHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += r.instance + ',' + r.strategy + ',' + std::to_string(r.k) + ',' +
               ratStr(r.traversed) + ',' + ratStr(r.dOpt) + ',' + ratStr(r.ratio) + ',' +
               ratStr(r.bound) + ',' + (r.pass ? "true" : "false") + ',' +
               std::to_string(r.recursions) + ',' + std::to_string(r.events) + '\n';
    }
    return out;
}

}  // namespace ctp
