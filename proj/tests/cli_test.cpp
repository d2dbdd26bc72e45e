#include "ctp/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ctp {
namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) {
    return std::string(CTP_FIXTURE_DIR) + "/" + name;
}

int runCli(const std::vector<std::string>& args, std::string* out = nullptr,
           std::string* err = nullptr) {
    std::stringstream coutBuf, cerrBuf;
    std::streambuf* oldOut = std::cout.rdbuf(coutBuf.rdbuf());
    std::streambuf* oldErr = std::cerr.rdbuf(cerrBuf.rdbuf());
    int code = -1;
    try {
        code = cli::dispatch(args);
    } catch (...) {
        std::cout.rdbuf(oldOut);
        std::cerr.rdbuf(oldErr);
        throw;
    }
    std::cout.rdbuf(oldOut);
    std::cerr.rdbuf(oldErr);
    if (out) *out = coutBuf.str();
    if (err) *err = cerrBuf.str();
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Tmp {
  public:
    Tmp() : dir_(fs::path(::testing::TempDir()) / ("ctp-cli-" + std::to_string(counter_++))) {
        fs::create_directories(dir_);
    }
    ~Tmp() { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string dir() const { return dir_.string(); }

  private:
    static inline int counter_ = 0;
    fs::path dir_;
};

TEST(Cli, HelpListsEverySubcommand) {
    std::string out;
    EXPECT_EQ(runCli({"--help"}, &out), 0);
    for (const char* sub :
         {"validate", "run", "worst", "minimax", "gen", "cert", "gk", "sweep"})
        EXPECT_NE(out.find(sub), std::string::npos) << sub;
}

TEST(Cli, BadInvocationsAreUsageErrors) {
    EXPECT_EQ(runCli({}), 4);                     // a subcommand is required
    EXPECT_EQ(runCli({"frobnicate"}), 4);         // unknown subcommand
    EXPECT_EQ(runCli({"run", "--bogus", "x"}), 4);
    EXPECT_EQ(runCli({"run", "--strategy", "nope", "--instance", fixture("fig5.json")}), 4);
    EXPECT_EQ(runCli({"run", "--instance", fixture("fig5.json")}), 4);  // missing strategy
    EXPECT_EQ(runCli({"gen", "westphal", "--k", "0"}), 4);
    EXPECT_EQ(runCli({"gen", "shell", "--n", "1"}), 4);
    EXPECT_EQ(runCli({"cert", "--eps", "0"}), 4);
}

TEST(Cli, ValidateAcceptsTheFixtures) {
    std::string out;
    EXPECT_EQ(runCli({"validate", fixture("fig5.json")}, &out), 0);
    EXPECT_EQ(out, "ok: fig5\n");
}

TEST(Cli, ValidateRejectsMissingAndBrokenFiles) {
    EXPECT_EQ(runCli({"validate", "/no/such/file.json"}), 1);
    Tmp tmp;
    std::ofstream(tmp.path("crossing.json")) << R"({
      "name": "crossing",
      "vertices": ["a", "b", "c", "d"],
      "boundary": ["a", "b", "c", "d"],
      "edges": [
        {"u": "a", "v": "b", "w": "1"}, {"u": "b", "v": "c", "w": "1"},
        {"u": "c", "v": "d", "w": "1"}, {"u": "d", "v": "a", "w": "1"},
        {"u": "a", "v": "c", "w": "1"}, {"u": "b", "v": "d", "w": "1"}
      ],
      "source": "a", "target": "c"
    })";
    std::string out;
    EXPECT_EQ(runCli({"validate", tmp.path("crossing.json")}, &out), 1);
    EXPECT_NE(out.find("crossing-chords"), std::string::npos);
}

TEST(Cli, RunEmitsTheDocumentedCsvRow) {
    std::string out;
    EXPECT_EQ(runCli({"run", "--strategy", "expbalancing", "--instance",
                      fixture("fig5.json")},
                     &out),
              0);
    EXPECT_EQ(out,
              "instance,strategy,k,traversed,d_opt,ratio,bound,pass,recursions,events\n"
              "fig5,expbalancing,1,4,2,2,9,true,0,15\n");
}

TEST(Cli, RunWritesAJsonLinesTrace) {
    Tmp tmp;
    std::string trace = tmp.path("trace.jsonl");
    EXPECT_EQ(runCli({"run", "--strategy", "expbalancing", "--instance",
                      fixture("fig5.json"), "--trace", trace}),
              0);
    std::istringstream lines(slurp(trace));
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto ev = nlohmann::json::parse(line);
        EXPECT_TRUE(ev.contains("event"));
        ++count;
    }
    EXPECT_EQ(count, 15);
}

TEST(Cli, InfeasibleInstancesExitTwo) {
    Tmp tmp;
    std::ofstream(tmp.path("cut.json")) << R"({
      "name": "cut",
      "vertices": ["s", "m", "t"],
      "boundary": ["s", "m", "t"],
      "edges": [{"u": "s", "v": "m", "w": "1"}, {"u": "m", "v": "t", "w": "1"}],
      "blocked": ["m-s"],
      "source": "s", "target": "t"
    })";
    EXPECT_EQ(runCli({"run", "--strategy", "reposition", "--instance", tmp.path("cut.json")}),
              2);
    EXPECT_EQ(runCli({"minimax", "--instance", tmp.path("cut.json")}), 2);
}

TEST(Cli, StepLimitEnvironmentIsHonoured) {
    ASSERT_EQ(setenv("CTP_STEP_LIMIT", "borked", 1), 0);
    EXPECT_EQ(runCli({"run", "--strategy", "expbalancing", "--instance",
                      fixture("fig5.json")}),
              4);
    ASSERT_EQ(setenv("CTP_STEP_LIMIT", "-3", 1), 0);
    EXPECT_EQ(runCli({"run", "--strategy", "expbalancing", "--instance",
                      fixture("fig5.json")}),
              4);
    // A limit below the walk length aborts the run as a strategy-side fault.
    ASSERT_EQ(setenv("CTP_STEP_LIMIT", "3", 1), 0);
    EXPECT_EQ(runCli({"run", "--strategy", "expbalancing", "--instance",
                      fixture("fig5.json")}),
              3);
    ASSERT_EQ(unsetenv("CTP_STEP_LIMIT"), 0);
    EXPECT_EQ(runCli({"run", "--strategy", "expbalancing", "--instance",
                      fixture("fig5.json")}),
              0);
}

TEST(Cli, GeneratedInstancesRoundTripThroughValidate) {
    Tmp tmp;
    EXPECT_EQ(runCli({"gen", "westphal", "--k", "2", "--eps", "1/10", "--out",
                      tmp.path("w.json")}),
              0);
    EXPECT_EQ(runCli({"validate", tmp.path("w.json")}), 0);
    EXPECT_EQ(runCli({"gen", "shell", "--n", "4", "--out", tmp.path("s.json")}), 0);
    EXPECT_EQ(runCli({"validate", tmp.path("s.json")}), 0);
    EXPECT_EQ(runCli({"gen", "hfamily", "--i", "2", "--out", tmp.path("h.json")}), 0);
    EXPECT_EQ(runCli({"validate", tmp.path("h.json")}), 0);
    EXPECT_EQ(runCli({"gen", "random", "--seed", "5", "--weights", "--out",
                      tmp.path("r.json")}),
              0);
    EXPECT_EQ(runCli({"validate", tmp.path("r.json")}), 0);
    // Stdout mode emits the same JSON document.
    std::string out;
    EXPECT_EQ(runCli({"gen", "shell", "--n", "4"}, &out), 0);
    EXPECT_EQ(out, slurp(tmp.path("s.json")));
}

TEST(Cli, WorstAndMinimaxAgreeOnTheTwoPathMap) {
    Tmp tmp;
    ASSERT_EQ(runCli({"gen", "westphal", "--k", "1", "--eps", "1/100", "--out",
                      tmp.path("w1.json")}),
              0);
    std::string worstOut, mmOut;
    EXPECT_EQ(runCli({"worst", "--strategy", "reposition", "--instance",
                      tmp.path("w1.json")},
                     &worstOut),
              0);
    EXPECT_EQ(runCli({"minimax", "--instance", tmp.path("w1.json")}, &mmOut), 0);
    EXPECT_EQ(worstOut, "ratio 301/101\nconfigs 3\nblocked t-v1\n");
    EXPECT_EQ(mmOut, "ratio 301/101\n");
}

TEST(Cli, CertEmitsAVerifiedCertificate) {
    Tmp tmp;
    std::string out;
    EXPECT_EQ(runCli({"cert", "--eps", "1/10", "--out", tmp.path("cert.json")}, &out), 0);
    EXPECT_NE(out.find("j 28\n"), std::string::npos);
    EXPECT_NE(out.find("leading_negatives 10\n"), std::string::npos);
    EXPECT_NE(out.find("verified true\n"), std::string::npos);
    auto doc = nlohmann::json::parse(slurp(tmp.path("cert.json")));
    EXPECT_EQ(doc.at("j"), 28);
    EXPECT_EQ(doc.at("y").size(), 28u);
}

TEST(Cli, GkPrintsTwelveSignificantDigits) {
    std::string out;
    EXPECT_EQ(runCli({"gk", "--k", "1"}, &out), 0);
    EXPECT_EQ(out, "0\n");
    EXPECT_EQ(runCli({"gk", "--k", "576"}, &out), 0);
    EXPECT_EQ(out, cli::fmt12(gOfK(576.0)) + "\n");
}

TEST(Cli, SweepWritesSortedByteIdenticalReports) {
    Tmp tmp;
    fs::create_directories(tmp.path("corpus"));
    RoadMap fig5 = readInstance(fixture("fig5.json"));
    writeInstance(fig5, tmp.path("corpus") + "/zz.json");  // filename order != name order
    ASSERT_EQ(runCli({"gen", "westphal", "--k", "1", "--eps", "1/100", "--out",
                      tmp.path("corpus") + "/aa.json"}),
              0);
    std::string out1, out2;
    EXPECT_EQ(runCli({"sweep", "--corpus", tmp.path("corpus"), "--strategy", "reposition",
                      "--report", tmp.path("r1.csv")},
                     &out1),
              0);
    EXPECT_EQ(runCli({"sweep", "--corpus", tmp.path("corpus"), "--strategy", "reposition",
                      "--report", tmp.path("r2.csv")},
                     &out2),
              0);
    std::string csv1 = slurp(tmp.path("r1.csv"));
    EXPECT_EQ(csv1, slurp(tmp.path("r2.csv")));
    EXPECT_EQ(out1, "wrote 2 rows to " + tmp.path("r1.csv") + "\n");
    // Rows are ordered by instance name, not by file name.
    auto fig5At = csv1.find("\nfig5,");
    auto westphalAt = csv1.find("\nwestphal1,");
    ASSERT_NE(fig5At, std::string::npos);
    ASSERT_NE(westphalAt, std::string::npos);
    EXPECT_LT(fig5At, westphalAt);
}

TEST(Cli, SweepOverAnEmptyCorpusFails) {
    Tmp tmp;
    fs::create_directories(tmp.path("empty"));
    EXPECT_EQ(runCli({"sweep", "--corpus", tmp.path("empty"), "--strategy", "reposition",
                      "--report", tmp.path("r.csv")}),
              1);
    EXPECT_EQ(runCli({"sweep", "--corpus", tmp.path("nodir"), "--strategy", "reposition",
                      "--report", tmp.path("r.csv")}),
              1);
}

TEST(Cli, InstanceJsonRejectsMalformedDocuments) {
    Tmp tmp;
    // Vertex names may not contain the edge-key separator.
    std::ofstream(tmp.path("dash.json")) << R"({
      "name": "dash", "vertices": ["a-b", "c"], "boundary": ["a-b", "c"],
      "edges": [{"u": "a-b", "v": "c", "w": "1"}], "source": "a-b", "target": "c"
    })";
    EXPECT_EQ(runCli({"validate", tmp.path("dash.json")}), 1);
    // Non-integral numeric weights have no exact meaning.
    std::ofstream(tmp.path("float.json")) << R"({
      "name": "float", "vertices": ["a", "b"], "boundary": ["a", "b"],
      "edges": [{"u": "a", "v": "b", "w": 1.5}], "source": "a", "target": "b"
    })";
    EXPECT_EQ(runCli({"validate", tmp.path("float.json")}), 1);
    // Missing required field.
    std::ofstream(tmp.path("nofield.json")) << R"({"name": "x", "vertices": ["a"]})";
    EXPECT_EQ(runCli({"validate", tmp.path("nofield.json")}), 1);
    // Integral numeric weights are fine.
    std::ofstream(tmp.path("intw.json")) << R"({
      "name": "intw", "vertices": ["a", "b"], "boundary": ["a", "b"],
      "edges": [{"u": "a", "v": "b", "w": 2}], "source": "a", "target": "b"
    })";
    RoadMap rm = readInstance(tmp.path("intw.json"));
    EXPECT_EQ(rm.graph.weight(0), Rat(2));
}

TEST(Cli, InstanceJsonRoundTrips) {
    Tmp tmp;
    RoadMap fig6 = readInstance(fixture("fig6.json"));
    writeInstance(fig6, tmp.path("copy.json"));
    RoadMap again = readInstance(tmp.path("copy.json"));
    EXPECT_EQ(instanceToJson(fig6).dump(), instanceToJson(again).dump());
    EXPECT_EQ(again.blocked, fig6.blocked);
    EXPECT_EQ(again.k, fig6.k);
}

TEST(Cli, EmptyReportsAreAnError) {
    try {
        reportToCsv({});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
    }
}

}  // namespace
}  // namespace ctp
