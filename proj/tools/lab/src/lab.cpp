#include "opnum_lab/lab.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "opnum/errors.hpp"
#include "opnum/spectrum_io.hpp"

namespace opnum::lab {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

double parse_plain(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InvalidSpec("not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

double parse_real(std::string_view raw) {
  std::string s = trim(raw);
  if (s.empty()) throw InvalidSpec("empty numeric value");
  if (s == "e") return std::exp(1.0);
  if (s == "1/e") return std::exp(-1.0);
  if (s.rfind("e^", 0) == 0) return std::exp(parse_real(s.substr(2)));
  if (s.rfind("exp(", 0) == 0 && s.back() == ')') return std::exp(parse_real(s.substr(4, s.size() - 5)));
  // a/b with plain numbers
  if (auto slash = s.find('/'); slash != std::string::npos)
    return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
  return parse_plain(s);
}

Params::Params(std::map<std::string, std::string> defaults, const std::map<std::string, std::string>& overrides)
    : values_(std::move(defaults)) {
  for (const auto& [k, v] : overrides) {
    auto it = values_.find(k);
    if (it == values_.end()) throw InvalidSpec("unknown parameter '" + k + "'");
    it->second = v;
  }
}

double Params::real(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InvalidSpec("missing parameter '" + key + "'");
  double v = parse_real(it->second);
  if (!std::isfinite(v)) throw InvalidSpec("parameter '" + key + "' is not finite");
  return v;
}

int Params::integer(const std::string& key) const {
  double v = real(key);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw InvalidSpec("parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

std::vector<double> Params::reals(const std::string& key) const {
  std::string s = text(key);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw InvalidSpec("parameter '" + key + "' needs at least one value");
  return out;
}

std::string Params::text(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw InvalidSpec("missing parameter '" + key + "'");
  return it->second;
}

const Experiment& find_experiment(std::string_view id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw InvalidSpec("unknown experiment '" + std::string(id) + "'");
}

Result run_experiment(const ExperimentConfig& cfg) {
  const Experiment& e = find_experiment(cfg.id);
  for (const auto& f : cfg.formats)
    if (f != "csv" && f != "json") throw InvalidSpec("unknown output format '" + f + "'");
  Params p(e.defaults, cfg.params);
  Result r = e.run(p, cfg.caps);
  r.experiment = e.id;
  return r;
}

std::string to_csv(const Result& r) {
  std::string out = "experiment,series,n,value,stabilized,proxy\n";
  for (const Row& row : r.rows) {
    out += r.experiment;
    out += ',';
    out += row.series;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.value);
    out += row.stabilized ? ",true" : ",false";
    out += row.proxy ? ",true\n" : ",false\n";
  }
  return out;
}

std::string to_json(const Result& r) {
  nlohmann::json j;
  j["experiment"] = r.experiment;
  j["summary"] = r.summary;
  return j.dump(2) + "\n";
}

std::string git_blob_hash(std::string_view content) {
  std::string header = "blob " + std::to_string(content.size());
  header.push_back('\0');
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error("sha1: context allocation failed");
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
            EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 && EVP_DigestFinal_ex(ctx, md, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw Error("sha1: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    unsigned char c = md[i];
    s.push_back(hex[c >> 4]);
    s.push_back(hex[c & 15]);
  }
  return s;
}

std::string manifest(const ExperimentConfig& cfg, const Result& r, const std::map<std::string, std::string>& outputs) {
  Params p(find_experiment(cfg.id).defaults, cfg.params);
  nlohmann::json inputs;
  inputs["experiment"] = cfg.id;
  inputs["parameters"] = p.resolved();
  inputs["caps"] = {{"N_max", cfg.caps.N_max}, {"D_max", cfg.caps.D_max}, {"K_max", cfg.caps.K_max}};
  inputs["formats"] = std::vector<std::string>(cfg.formats.begin(), cfg.formats.end());

  nlohmann::json m;
  m["tool"] = "opnum-lab";
  m["inputs"] = inputs;
  m["input_hash"] = git_blob_hash(inputs.dump());
  m["truncations"] = r.truncations;
  m["tail_budgets"] = r.tail_budgets;
  nlohmann::json files = nlohmann::json::object();
  for (const auto& [name, content] : outputs) files[name] = git_blob_hash(content);
  m["outputs"] = files;
  return m.dump(2) + "\n";
}

std::vector<std::string> run_and_write(const ExperimentConfig& cfg) {
  Result r = run_experiment(cfg);
  std::map<std::string, std::string> outputs;
  if (cfg.formats.count("csv")) outputs[cfg.id + ".csv"] = to_csv(r);
  if (cfg.formats.count("json")) outputs[cfg.id + ".json"] = to_json(r);
  std::string m = manifest(cfg, r, outputs);
  outputs["manifest.json"] = std::move(m);

  std::filesystem::create_directories(cfg.out_dir);
  std::vector<std::string> names;
  for (const auto& [name, content] : outputs) {
    std::filesystem::path path = std::filesystem::path(cfg.out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path.string());
    f << content;
    names.push_back(path.string());
  }
  return names;
}

std::string error_report(std::string_view experiment, std::string_view kind, std::string_view message) {
  nlohmann::json j;
  j["error"] = std::string(kind);
  j["message"] = std::string(message);
  j["experiment"] = std::string(experiment);
  return j.dump();
}

}  // namespace opnum::lab
