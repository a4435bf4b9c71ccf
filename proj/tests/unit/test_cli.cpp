#ifdef QHALL_HAVE_CLI

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "builtin.hpp"
#include "commands.hpp"
#include "qhall/error.hpp"
#include "qhall/quiver_io.hpp"

using qhall::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QHALL_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Ranges) {
  EXPECT_EQ(qhall::cli::parse_range("3"), (std::vector<int>{3}));
  EXPECT_EQ(qhall::cli::parse_range("1..4"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(qhall::cli::parse_range("1,5..6"), (std::vector<int>{1, 5, 6}));
  EXPECT_THROW(qhall::cli::parse_range("4..1"), qhall::Error);
  EXPECT_THROW(qhall::cli::parse_range("x"), qhall::Error);
  EXPECT_THROW(qhall::cli::parse_range("0..2"), qhall::Error);
}

TEST(Cli, BuiltinCorpusMatchesFiles) {
  for (const auto& name : qhall::cli::builtin_names()) {
    EXPECT_EQ(qhall::cli::builtin_quiver(name), qhall::load_quiver(data(name + ".json"))) << name;
  }
  EXPECT_THROW(qhall::cli::builtin_quiver("e8"), qhall::Error);
}

TEST(Cli, CartanJson) {
  const CliRun r = cli({"cartan", "--pm", "--matrix", "[2]", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["matrix"], nlohmann::json::parse("[[2,-2],[-2,2]]"));
  const CliRun c = cli({"cartan", "--c2n", "3", "--matrix", "[[2]]", "--output", "json"});
  EXPECT_EQ(nlohmann::json::parse(c.out)["matrix"], nlohmann::json::parse("[[2,-6],[-6,2]]"));
  const CliRun q = cli({"cartan", "--from-quiver", data("b2.json"), "--output", "json"});
  EXPECT_EQ(nlohmann::json::parse(q.out)["matrix"], nlohmann::json::parse("[[2,-1],[-2,2]]"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({}).code, qhall::cli::kBadInput);
  EXPECT_EQ(cli({"cartan", "--matrix", "[[3]]"}).code, qhall::cli::kBadInput);
  EXPECT_EQ(cli({"cartan", "--matrix", "not json"}).code, qhall::cli::kBadInput);
  EXPECT_EQ(cli({"modules", "--quiver", data("a1.json"), "--q", "6", "--dim", "1"}).code, qhall::cli::kBadInput);
  EXPECT_EQ(cli({"modules", "--quiver", data("a1.json"), "--q", "2", "--dim", "9"}).code, qhall::cli::kCapExceeded);
  EXPECT_EQ(cli({"verify", "--quiver", data("a1.json"), "--pm", "--q", "2", "--relations", "1pm", "--cap", "3"}).code,
            qhall::cli::kCapExceeded);
  EXPECT_EQ(cli({"lemma42", "--n", "2", "--i", "3"}).code, qhall::cli::kBadInput);
  EXPECT_EQ(cli({"reduce", "--expr", "(1) E+ Q"}).code, qhall::cli::kBadInput);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ModulesAndHallNumber) {
  const CliRun m = cli({"modules", "--quiver", data("a1pm.json"), "--q", "2", "--dim", "1,1", "--output", "json"});
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(nlohmann::json::parse(m.out)["count"], 4);
  const CliRun h = cli({"hallnum", "--quiver", data("a1.json"), "--q", "2", "--gamma", "2:", "--alpha", "1:", "--beta",
                     "1:", "--output", "json"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(nlohmann::json::parse(h.out)["hall_number"], 3);
}

TEST(Cli, VerifyReportSchema) {
  const CliRun r = cli({"verify", "--quiver", data("a2.json"), "--pm", "--q", "3", "--relations", "all", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  std::size_t vacuous = 0;
  for (const auto& e : j["relations"]) {
    ASSERT_TRUE(e.contains("relation") && e.contains("instance") && e.contains("status") &&
                e.contains("residue_terms") && e.contains("millis"));
    EXPECT_TRUE(e["relation"].is_string() && e["instance"].is_object() && e["residue_terms"].is_number_integer() &&
                e["millis"].is_number_integer());
    EXPECT_NE(e["status"], "violated");
    vacuous += e["status"] == "vacuous" ? 1 : 0;
  }
  EXPECT_GE(vacuous, 1u);
  const CliRun e = cli({"verify", "--quiver", data("a1.json"), "--pm", "--q", "2", "--embedding", "--output", "json"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_TRUE(nlohmann::json::parse(e.out)["embedding"]["ok"].get<bool>());
}

TEST(Cli, SymbolicChecksAndScalars) {
  EXPECT_EQ(cli({"lemmas", "--which", "41", "--n", "1..3", "--d", "1..2"}).code, 0);
  EXPECT_EQ(cli({"lemmas", "--which", "termA", "--n", "1..3"}).code, 0);
  EXPECT_EQ(cli({"lemmas", "--which", "chain", "--n", "1..4"}).code, 0);
  EXPECT_EQ(cli({"lemmas", "--which", "23", "--d", "1..2"}).code, 0);
  EXPECT_EQ(cli({"lemmas", "--which", "99"}).code, qhall::cli::kBadInput);
  const CliRun q = cli({"qint", "--m", "3", "--output", "tsv"});
  EXPECT_EQ(q.out, "qint\tvalue\nqint\tv^2 + 1 + v^-2\n");
  EXPECT_EQ(cli({"lemma42", "--n", "5", "--i", "2"}).code, 0);
  const CliRun red = cli({"reduce", "--expr", "(1) E+ K", "--output", "json"});
  const auto j = nlohmann::json::parse(red.out);
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["coeff"], "v^-2");
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args = {"verify", "--quiver", data("a2.json"), "--pm", "--q", "2",
                                         "--relations", "all", "--output", "json"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

#endif
