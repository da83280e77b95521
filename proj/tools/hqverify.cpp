// hqverify: run named checks and print one report per line.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hq/gf_tower.hpp"
#include "hq/verifier.hpp"

namespace {

enum Exit { kAllPass = 0, kSomeFail = 1, kUsage = 2, kUnsupported = 3 };

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Verify the computational claims about Hermitian quotients"};
  std::string check, filter, format = "json", field_config, out_path, fault;
  std::vector<std::string> params;
  bool all = false, timings = false, list = false;
  unsigned threads = 1;
  app.add_option("--check", check, "Run a single named check");
  app.add_option("--param", params, "key=value parameter for --check (repeatable)");
  app.add_flag("--all", all, "Run every check with its default parameters");
  app.add_option("--filter", filter, "Only checks whose name starts with this prefix (with --all)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--field-config", field_config, "Field modulus configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "Also write reports to this file");
  app.add_flag("--timings", timings, "Include elapsed milliseconds in reports");
  app.add_flag("--list", list, "List check names");
  app.add_option("--inject-fault", fault)->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kAllPass : kUsage;
  }

  if (list) {
    for (const auto &c : hq::registry()) std::cout << c.name << "  " << c.citation << "\n";
    return kAllPass;
  }
  if (all == !check.empty()) {
    std::cerr << "exactly one of --check or --all is required\n";
    return kUsage;
  }
  if (!filter.empty() && !all) {
    std::cerr << "--filter needs --all\n";
    return kUsage;
  }
  if (!params.empty() && all) {
    std::cerr << "--param needs --check\n";
    return kUsage;
  }

  try {
    if (!field_config.empty()) hq::FieldRegistry::global().load_config(field_config);
  } catch (const std::exception &e) {
    std::cerr << "field config: " << e.what() << "\n";
    return kUsage;
  }

  hq::Params pm;
  for (const auto &kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "--param expects key=value, got '" << kv << "'\n";
      return kUsage;
    }
    pm[kv.substr(0, eq)] = kv.substr(eq + 1);
  }

  hq::RunOptions opts;
  opts.inject_fault = fault;
  hq::RunSummary sum;
  try {
    if (all) {
      sum = hq::run_all(filter, threads, opts);
    } else {
      opts.threads = threads;
      sum.reports.push_back(hq::run_check(check, pm, opts));
      const auto v = sum.reports.back().verdict;
      sum.passed = v == hq::Verdict::Pass;
      sum.failed = v == hq::Verdict::Fail;
      sum.unsupported = v == hq::Verdict::Unsupported;
    }
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream os;
  for (const auto &r : sum.reports) {
    if (format == "json") os << r.to_json(timings).dump() << "\n";
    else os << r.to_table_row(timings) << "\n";
  }
  if (format == "table")
    os << sum.passed << " passed, " << sum.failed << " failed, " << sum.unsupported << " unsupported\n";
  std::cout << os.str();
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return kUsage;
    }
    f << os.str();
  }
  if (sum.failed) return kSomeFail;
  if (sum.unsupported) return all ? kSomeFail : kUnsupported;
  return kAllPass;
}
