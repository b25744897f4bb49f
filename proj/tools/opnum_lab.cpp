#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opnum/errors.hpp"
#include "opnum/parallel.hpp"
#include "opnum_lab/lab.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitOther = 1;

std::map<std::string, std::string> split_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw opnum::InvalidSpec("--param expects key=value, got '" + s + "'");
    if (!out.emplace(s.substr(0, eq), s.substr(eq + 1)).second)
      throw opnum::InvalidSpec("parameter '" + s.substr(0, eq) + "' given twice");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opnum-lab: runs the registered composition-operator experiments"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List experiments with one-line descriptions");
  bool show_defaults = false;
  list->add_flag("--defaults", show_defaults, "Also print default parameters");

  auto* run = app.add_subcommand("run", "Run one experiment and write CSV/JSON artifacts plus a manifest");
  std::string id;
  std::vector<std::string> params;
  std::string out_dir = ".";
  std::vector<std::string> formats = {"csv", "json"};
  opnum::lab::Caps caps;
  int threads = 0;
  run->add_option("experiment", id, "Experiment id")->required();
  run->add_option("--param", params, "Parameter override key=value (repeatable)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--format", formats, "Output formats: csv, json")->delimiter(',');
  run->add_option("--max-N", caps.N_max, "Cap on one-variable truncations");
  run->add_option("--max-D", caps.D_max, "Cap on direct 2-D degree");
  run->add_option("--max-K", caps.K_max, "Cap on triangular block count");
  run->add_option("--threads", threads, "Worker threads (overrides OPNUM_THREADS)");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const auto& e : opnum::lab::registry()) {
      std::cout << e.id << "  " << e.description << '\n';
      if (show_defaults)
        for (const auto& [k, v] : e.defaults) std::cout << "    " << k << " = " << v << '\n';
    }
    return 0;
  }

  opnum::lab::ExperimentConfig cfg;
  cfg.id = id;
  cfg.out_dir = out_dir;
  cfg.caps = caps;
  cfg.formats = {formats.begin(), formats.end()};
  try {
    if (threads > 0) opnum::set_thread_count(threads);
    cfg.params = split_params(params);
    for (const auto& path : opnum::lab::run_and_write(cfg)) std::cout << path << '\n';
  } catch (const opnum::InvalidSpec& e) {
    std::cerr << opnum::lab::error_report(id, "invalid_config", e.what()) << '\n';
    return kExitUsage;
  } catch (const opnum::DivergenceError& e) {
    std::cerr << opnum::lab::error_report(id, "divergence", e.what()) << '\n';
    return kExitNumerical;
  } catch (const opnum::UnboundedOperator& e) {
    std::cerr << opnum::lab::error_report(id, "unbounded_operator", e.what()) << '\n';
    return kExitNumerical;
  } catch (const opnum::BudgetError& e) {
    std::cerr << opnum::lab::error_report(id, "budget_overrun", e.what()) << '\n';
    return kExitNumerical;
  } catch (const opnum::DomainError& e) {
    std::cerr << opnum::lab::error_report(id, "domain", e.what()) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << opnum::lab::error_report(id, "error", e.what()) << '\n';
    return kExitOther;
  }
  return 0;
}
