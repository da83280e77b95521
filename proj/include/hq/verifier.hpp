#pragma once

// Named checks with machine-readable reports.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace hq {

using Params = std::map<std::string, std::string>;

enum class Verdict { Pass, Fail, Unsupported };
std::string to_string(Verdict v);

struct Evidence {
  std::string key;
  std::optional<nlohmann::json> expected;  // absent for informational values
  nlohmann::json computed;
};

struct CheckReport {
  std::string name;
  Params params;
  Verdict verdict = Verdict::Fail;
  std::vector<Evidence> evidence;
  std::string citation;
  std::string error;  // set when unsupported
  double millis = 0;

  nlohmann::ordered_json to_json(bool with_timing) const;
  std::string to_table_row(bool with_timing) const;
};

class UnknownCheck : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParams : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RunOptions {
  unsigned threads = 1;              // workers inside a single check
  std::string inject_fault;          // check name whose first computed integer is perturbed
};

struct CheckSpec {
  std::string name;
  std::string citation;
  std::vector<Params> defaults;  // parameter sets used by run_all
  std::function<std::vector<Evidence>(const Params &, const RunOptions &)> run;
};

// Registry sorted by name.
const std::vector<CheckSpec> &registry();

// Throws UnknownCheck or InvalidParams; other failures become report data.
CheckReport run_check(const std::string &name, const Params &params, const RunOptions &opts = {});

struct RunSummary {
  std::vector<CheckReport> reports;
  unsigned passed = 0, failed = 0, unsupported = 0;
};

// Each check with each default parameter set, in name order; `workers`
// checks run concurrently, reports keep registry order.
RunSummary run_all(const std::string &filter_prefix = "", unsigned workers = 1, const RunOptions &opts = {});

}  // namespace hq
