#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace opnum::lab {

struct Caps {
  int N_max = 4096;
  int D_max = 40;
  int K_max = 64;
};

struct ExperimentConfig {
  std::string id;
  std::map<std::string, std::string> params;  // overrides
  Caps caps;
  std::string out_dir = ".";
  std::set<std::string> formats = {"csv", "json"};
};

// One CSV line: experiment, series, n, value, stabilized, proxy.
struct Row {
  std::string series;
  long long n = 0;
  double value = 0.0;
  bool stabilized = true;
  bool proxy = false;
};

struct Result {
  std::string experiment;
  std::vector<Row> rows;
  nlohmann::json summary = nlohmann::json::object();      // fits, tables, classifications
  nlohmann::json truncations = nlohmann::json::object();  // for the manifest
  nlohmann::json tail_budgets = nlohmann::json::object();
};

// Parameter bag with typed accessors. Every key must appear in the
// experiment defaults; anything else is rejected before the run starts.
class Params {
 public:
  Params(std::map<std::string, std::string> defaults, const std::map<std::string, std::string>& overrides);

  double real(const std::string& key) const;
  int integer(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  std::string text(const std::string& key) const;
  const std::map<std::string, std::string>& resolved() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Accepts decimals plus e, 1/e, e^x, exp(x).
double parse_real(std::string_view s);

struct Experiment {
  std::string id;
  std::string description;
  std::map<std::string, std::string> defaults;
  std::function<Result(const Params&, const Caps&)> run;
};

const std::vector<Experiment>& registry();
const Experiment& find_experiment(std::string_view id);

Result run_experiment(const ExperimentConfig& cfg);

std::string to_csv(const Result& r);
std::string to_json(const Result& r);
std::string manifest(const ExperimentConfig& cfg, const Result& r, const std::map<std::string, std::string>& outputs);

// SHA-1 of "blob <size>\0<content>", as git computes object ids.
std::string git_blob_hash(std::string_view content);

// Runs the experiment and writes <id>.csv, <id>.json and manifest.json into
// cfg.out_dir. Returns the written file names.
std::vector<std::string> run_and_write(const ExperimentConfig& cfg);

// {"error": kind, "message": ..., "experiment": id}
std::string error_report(std::string_view experiment, std::string_view kind, std::string_view message);

}  // namespace opnum::lab
