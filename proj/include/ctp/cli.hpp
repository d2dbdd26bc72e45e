#pragma once

// Command-line surface: validate / run / worst / minimax / gen / cert / gk /
// sweep. Exit codes: 0 success, 1 validation failure, 2 infeasible road map,
// 3 strategy fault or search limits, 4 usage error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctp/certificate.hpp"
#include "ctp/engine.hpp"
#include "ctp/error.hpp"
#include "ctp/expbalancing.hpp"
#include "ctp/generators.hpp"
#include "ctp/graph.hpp"
#include "ctp/io.hpp"
#include "ctp/lambertw.hpp"
#include "ctp/oracle.hpp"
#include "ctp/rational.hpp"
#include "ctp/reposition.hpp"
#include "ctp/worstcase.hpp"

namespace ctp {
namespace cli {

inline long stepLimitFromEnv() {
    const char* env = std::getenv("CTP_STEP_LIMIT");
    if (env == nullptr || *env == '\0') return 1000000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0)
        fail(ErrorCode::UsageError,
             std::string("CTP_STEP_LIMIT must be a positive integer, got '") + env + "'");
    return v;
}

/// Floats shown to the user carry 12 significant digits.
inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::unique_ptr<Strategy> makeStrategy(const std::string& name, const RoadMap& rm) {
    int s = rm.graph.indexOf(rm.source);
    int t = rm.graph.indexOf(rm.target);
    if (name == "expbalancing")
        return std::make_unique<DecomposeWrapper>(rm.graph, rm.embedding, s, t,
                                                  expBalancingBlockFactory(), "expbalancing");
    if (name == "reposition") return std::make_unique<Reposition>(rm.graph, s, t);
    fail(ErrorCode::UsageError, "unknown strategy: " + name);
}

/// The bound column of a report row: the guarantee the strategy is audited
/// against (9 on outerplanar maps for the balancing strategy, 2k+1 for
/// repositioning against k blockages).
inline Rat boundFor(const std::string& strategy, const RoadMap& rm) {
    if (strategy == "expbalancing") return Rat(9);
    long k = rm.k ? static_cast<long>(*rm.k) : static_cast<long>(rm.blocked.size());
    return Rat(2 * k + 1);
}

inline int cmdValidate(const std::string& file) {
    RoadMap rm = readInstance(file);
    ValidationReport rep = validate(rm.graph, rm.embedding);
    if (rep.ok()) {
        std::cout << "ok: " << rm.name << "\n";
        return 0;
    }
    for (const auto& v : rep.violations) std::cout << v.kind << ": " << v.detail << "\n";
    return 1;
}

inline int cmdRun(const std::string& strategyName, const std::string& file,
                  const std::string& tracePath) {
    RoadMap rm = readInstance(file);
    auto strat = makeStrategy(strategyName, rm);
    SimulationResult res = simulate(*strat, rm, stepLimitFromEnv());
    if (!tracePath.empty()) {
        std::ofstream out(tracePath);
        if (!out) fail(ErrorCode::IoError, "cannot open " + tracePath + " for writing");
        out << traceToJsonl(res.trace);
    }
    ReportRow row = makeReportRow(rm, strategyName, res, boundFor(strategyName, rm));
    std::cout << reportToCsv({row});
    return 0;
}

inline int cmdWorst(const std::string& strategyName, const std::string& file) {
    RoadMap rm = readInstance(file);
    StrategyFactory factory = [&strategyName](const RoadMap& r) {
        return makeStrategy(strategyName, r);
    };
    WorstCaseResult wr = exhaustiveWorstRatio(factory, rm, stepLimitFromEnv());
    std::cout << "ratio " << ratStr(wr.ratio) << "\n";
    std::cout << "configs " << wr.configs << "\n";
    std::cout << "blocked";
    for (int eid : wr.blocked) std::cout << ' ' << rm.graph.edgeKey(eid);
    std::cout << "\n";
    return 0;
}

inline int cmdMinimax(const std::string& file) {
    RoadMap rm = readInstance(file);
    std::cout << "ratio " << ratStr(minimaxRatio(rm)) << "\n";
    return 0;
}

inline int emitInstance(const RoadMap& rm, const std::string& outPath) {
    if (outPath.empty())
        std::cout << instanceToJson(rm).dump(2) << "\n";
    else
        writeInstance(rm, outPath);
    return 0;
}

inline int cmdCert(const std::string& epsText, const std::string& outPath) {
    Rat eps = parseRat(epsText);
    long j = chooseJ(eps);
    Certificate cert = constructY(j, eps);
    bool ok = verifyCertificate(cert);
    FarkasSystem sys = buildSystem(j, eps);
    Rat obj = 0;
    for (long i = 0; i < sys.j; ++i)
        obj += sys.bPrime[static_cast<size_t>(i)] * cert.y[static_cast<size_t>(i)];
    std::cout << "j " << j << "\n";
    std::cout << "leading_negatives " << cert.leadingNegatives << "\n";
    std::cout << "objective " << fmt12(ratToDouble(obj)) << "\n";
    std::cout << "verified " << (ok ? "true" : "false") << "\n";
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) fail(ErrorCode::IoError, "cannot open " + outPath + " for writing");
        out << certificateToJson(cert).dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

inline int cmdGk(long long k) {
    std::cout << fmt12(gOfK(static_cast<double>(k))) << "\n";
    return 0;
}

inline int cmdSweep(const std::string& dir, const std::string& strategyName,
                    const std::string& reportPath) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) fail(ErrorCode::IoError, "not a directory: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    const long stepLimit = stepLimitFromEnv();
    std::vector<ReportRow> rows;
    for (const auto& file : files) {
        RoadMap rm = readInstance(file);
        auto strat = makeStrategy(strategyName, rm);
        SimulationResult res = simulate(*strat, rm, stepLimit);
        rows.push_back(makeReportRow(rm, strategyName, res, boundFor(strategyName, rm)));
    }
    std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.strategy < b.strategy;
    });
    std::string csv = reportToCsv(rows);
    std::ofstream out(reportPath);
    if (!out) fail(ErrorCode::IoError, "cannot open " + reportPath + " for writing");
    out << csv;
    if (!out) fail(ErrorCode::IoError, "write failed: " + reportPath);
    std::cout << "wrote " << rows.size() << " rows to " << reportPath << "\n";
    return 0;
}

/// args: argv without the program name, in normal order.
inline int dispatch(std::vector<std::string> args) {
    CLI::App app{"k-CTP toolkit: online strategies, adversaries, exact oracles, certificates"};
    app.require_subcommand(1);

    std::string vFile;
    auto* vCmd = app.add_subcommand("validate", "Check an instance file against the format rules");
    vCmd->add_option("file", vFile, "instance JSON file")->required();

    const std::vector<std::string> strategyNames = {"expbalancing", "reposition"};
    std::string rStrategy, rFile, rTrace;
    auto* rCmd = app.add_subcommand("run", "Simulate one strategy on one instance");
    rCmd->add_option("--strategy", rStrategy, "strategy name")
        ->required()
        ->check(CLI::IsMember(strategyNames));
    rCmd->add_option("--instance", rFile, "instance JSON file")->required();
    rCmd->add_option("--trace", rTrace, "write the event trace (JSON lines) here");

    std::string wStrategy, wFile;
    auto* wCmd = app.add_subcommand("worst", "Exhaustive worst-case ratio over blockage subsets");
    wCmd->add_option("--strategy", wStrategy, "strategy name")
        ->required()
        ->check(CLI::IsMember(strategyNames));
    wCmd->add_option("--instance", wFile, "instance JSON file")->required();

    std::string mFile;
    auto* mCmd = app.add_subcommand("minimax", "Optimal-play ratio by game-tree search");
    mCmd->add_option("--instance", mFile, "instance JSON file")->required();

    auto* gCmd = app.add_subcommand("gen", "Generate an instance");
    gCmd->require_subcommand(1);
    long genK = 0;
    std::string genEps = "1/1000", genWestphalOut;
    auto* gwCmd = gCmd->add_subcommand("westphal", "k+1 disjoint s-t paths, one safe");
    gwCmd->add_option("--k", genK, "number of blockable paths")->required();
    gwCmd->add_option("--eps", genEps, "weight of the short final edges (rational)");
    gwCmd->add_option("--out", genWestphalOut, "output file (default stdout)");
    long genN = 0;
    std::string genShellOut;
    auto* gsCmd = gCmd->add_subcommand("shell", "2n-cycle with a fan of blockable chords");
    gsCmd->add_option("--n", genN, "half the cycle length")->required();
    gsCmd->add_option("--out", genShellOut, "output file (default stdout)");
    long genI = 0;
    std::string genEpsStar = "1/100", genFamilyOut;
    auto* ghCmd = gCmd->add_subcommand("hfamily", "weighted recursive family (copies + shortcuts)");
    ghCmd->add_option("--i", genI, "recursion depth")->required();
    ghCmd->add_option("--epsstar", genEpsStar, "shortcut weight (rational)");
    ghCmd->add_option("--out", genFamilyOut, "output file (default stdout)");
    std::uint64_t genSeed = 1;
    long genMaxV = 12;
    bool genWeights = false;
    std::string genRandomOut;
    auto* grCmd = gCmd->add_subcommand("random", "seeded random outerplanar instance");
    grCmd->add_option("--seed", genSeed, "RNG seed");
    grCmd->add_option("--n", genMaxV, "maximum vertex count");
    grCmd->add_flag("--weights", genWeights, "draw random rational weights instead of 1");
    grCmd->add_option("--out", genRandomOut, "output file (default stdout)");

    std::string cEps, cOut;
    auto* cCmd = app.add_subcommand("cert", "Build and verify an infeasibility certificate");
    cCmd->add_option("--eps", cEps, "margin eps (rational, 0 < eps < 1)")->required();
    cCmd->add_option("--out", cOut, "write the certificate JSON here");

    long long gkK = 0;
    auto* kCmd = app.add_subcommand("gk", "Lower-bound growth value g(k)");
    kCmd->add_option("--k", gkK, "number of blocked edges")->required();

    std::string sDir, sStrategy, sReport;
    auto* sCmd = app.add_subcommand("sweep", "Simulate a strategy over a corpus directory");
    sCmd->add_option("--corpus", sDir, "directory of instance JSON files")->required();
    sCmd->add_option("--strategy", sStrategy, "strategy name")
        ->required()
        ->check(CLI::IsMember(strategyNames));
    sCmd->add_option("--report", sReport, "output CSV path")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }

    try {
        if (vCmd->parsed()) return cmdValidate(vFile);
        if (rCmd->parsed()) return cmdRun(rStrategy, rFile, rTrace);
        if (wCmd->parsed()) return cmdWorst(wStrategy, wFile);
        if (mCmd->parsed()) return cmdMinimax(mFile);
        if (gCmd->parsed()) {
            if (gwCmd->parsed()) return emitInstance(genWestphal(static_cast<int>(genK), parseRat(genEps)), genWestphalOut);
            if (gsCmd->parsed()) return emitInstance(genShell(static_cast<int>(genN)), genShellOut);
            if (ghCmd->parsed()) return emitInstance(genWeightedFamily(static_cast<int>(genI), parseRat(genEpsStar)), genFamilyOut);
            if (grCmd->parsed())
                return emitInstance(randomOuterplanar(genSeed, static_cast<int>(genMaxV), genWeights),
                                    genRandomOut);
        }
        if (cCmd->parsed()) return cmdCert(cEps, cOut);
        if (kCmd->parsed()) return cmdGk(gkK);
        if (sCmd->parsed()) return cmdSweep(sDir, sStrategy, sReport);
        fail(ErrorCode::UsageError, "no subcommand given");
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::InfeasibleRoadMap:
                return 2;
            case ErrorCode::StrategyFault:
            case ErrorCode::NotCompleted:
            case ErrorCode::IllegalMove:
            case ErrorCode::TooManyConfigurations:
            case ErrorCode::TooLarge:
            case ErrorCode::NonConvergence:
                return 3;
            case ErrorCode::UsageError:
                return 4;
            default:
                return 1;
        }
    }
}

inline int dispatch(int argc, char** argv) {
    return dispatch(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace cli
}  // namespace ctp
