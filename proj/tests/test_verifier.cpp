#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "props.hpp"

using namespace hq;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult cli(const std::string &args) {
  const std::string path = "hqverify_test_out.txt";
  const std::string cmd = std::string(HQVERIFY_PATH) + " " + args + " > " + path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(path.c_str());
  return r;
}

const Evidence *evidence(const CheckReport &r, const std::string &key) {
  for (const auto &e : r.evidence)
    if (e.key == key) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("registry covers every claim and carries citations") {
  const std::vector<std::string> names{"alpha-semiregular", "delta-ledger", "eigen-fixed-points", "gk-congruence",
                                       "gs-congruence", "hermitian-count", "lemmino", "linpoly-decompose",
                                       "phi-homomorphism", "primovalore", "prop1sylow-nondiv", "quattordici",
                                       "rh-quotient-genus", "secondovalore-catalog", "sylow-census", "triangolo-census"};
  std::vector<std::string> got;
  for (const auto &c : registry()) {
    got.push_back(c.name);
    CHECK_MESSAGE(!c.citation.empty(), c.name);
    CHECK_MESSAGE(!c.defaults.empty(), c.name);
  }
  CHECK(got == names);
  CHECK(std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("report examples") {
  const CheckReport d = run_check("delta-ledger", {{"q", "4"}});
  CHECK(d.verdict == Verdict::Pass);
  REQUIRE(evidence(d, "delta"));
  CHECK(evidence(d, "delta")->computed == 470);
  CHECK(evidence(d, "sylow_sum")->computed == 350);

  const CheckReport g = run_check("gk-congruence", {{"n", "5"}});
  CHECK(g.verdict == Verdict::Pass);
  CHECK(evidence(g, "count")->computed == 3969);
  CHECK(evidence(g, "mod3")->computed == 0);

  CHECK_THROWS_AS(run_check("no-such-check", {}), UnknownCheck);
  CHECK_THROWS_AS(run_check("hermitian-count", {{"q", "6"}}), InvalidParams);
  CHECK_THROWS_AS(run_check("hermitian-count", {{"q", "-4"}}), InvalidParams);
  CHECK_THROWS_AS(run_check("hermitian-count", {{"bogus", "1"}}), InvalidParams);
  CHECK_THROWS_AS(run_check("delta-ledger", {{"q", "16"}}), InvalidParams);

  const CheckReport u = run_check("gs-congruence", {{"q", "16"}});
  CHECK(u.verdict == Verdict::Unsupported);
  CHECK_FALSE(u.error.empty());
}

TEST_CASE("verdict pass exactly when every expected value matches") {
  for (const auto &r : run_all("h").reports) {
    bool all = true;
    for (const auto &e : r.evidence)
      if (e.expected) all = all && *e.expected == e.computed;
    CHECK((r.verdict == Verdict::Pass) == all);
  }
  const CheckReport f = run_check("hermitian-count", {{"q", "3"}}, RunOptions{1, "hermitian-count"});
  CHECK(f.verdict == Verdict::Fail);
  CHECK(evidence(f, "count")->computed == 29);
  CHECK(run_check("hermitian-count", {{"q", "3"}}, RunOptions{1, "gk-congruence"}).verdict == Verdict::Pass);
}

TEST_CASE("json schema") {
  const CheckReport r = run_check("quattordici", {});
  const auto j = r.to_json(true);
  std::vector<std::string> keys;
  for (const auto &[k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "name", "params", "verdict", "evidence", "citation", "millis"});
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "pass");
  CHECK_FALSE(r.to_json(false).contains("millis"));
  const auto round = nlohmann::json::parse(j.dump());
  CHECK(round["evidence"][0]["key"] == "survivors");
}

TEST_CASE("run_all filter and determinism") {
  const RunSummary d = run_all("delta");
  CHECK(d.reports.size() == 2);
  CHECK(d.passed == 2);
  CHECK(run_all("zzz").reports.empty());
  CHECK(props::run_all_deterministic("g", 4));
  CHECK(props::run_all_deterministic("l", 3));
  const RunSummary h1 = run_all("hermitian", 1), h4 = run_all("hermitian", 4);
  CHECK(props::dump_all(h1) == props::dump_all(h4));
}

TEST_CASE("command line exit codes") {
  CHECK(cli("--check delta-ledger --param q=8").code == 0);
  CHECK(cli("--check hermitian-count --param q=3 --inject-fault hermitian-count").code == 1);
  CHECK(cli("--check no-such-check").code == 2);
  CHECK(cli("--check hermitian-count --param q=6").code == 2);
  CHECK(cli("--check hermitian-count --param q").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("--all --check lemmino").code == 2);
  CHECK(cli("--format xml --all").code == 2);
  CHECK(cli("--check gs-congruence --param q=16").code == 3);
  CHECK(cli("--all --filter delta --inject-fault delta-ledger").code == 1);

  const CliResult ok = cli("--all --filter delta --threads 2");
  CHECK(ok.code == 0);
  std::istringstream lines(ok.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["name"] == "delta-ledger");
    CHECK(j["verdict"] == "pass");
    ++n;
  }
  CHECK(n == 2);
  const CliResult table = cli("--all --filter delta --format table");
  CHECK(table.out.find("2 passed, 0 failed, 0 unsupported") != std::string::npos);
  CHECK(cli("--list").out.find("triangolo-census") != std::string::npos);
}
