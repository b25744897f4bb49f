#ifdef OPNUM_HAVE_LAB

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "opnum/errors.hpp"
#include "opnum_lab/lab.hpp"

using namespace opnum;
using namespace opnum::lab;

TEST(Lab, RegistryHasTwelveUniqueIds) {
  std::set<std::string> ids;
  for (const auto& e : registry()) {
    ids.insert(e.id);
    EXPECT_FALSE(e.description.empty()) << e.id;
  }
  EXPECT_EQ(ids.size(), 12u);
  EXPECT_EQ(registry().size(), 12u);
  EXPECT_THROW(find_experiment("no-such-run"), InvalidSpec);
}

TEST(Lab, UnknownParameterRejected) {
  EXPECT_THROW(Params({{"r", "0.5"}}, {{"R", "0.5"}}), InvalidSpec);
  ExperimentConfig cfg;
  cfg.id = "diag-seminal";
  cfg.params = {{"radius", "0.5"}};
  EXPECT_THROW(run_experiment(cfg), InvalidSpec);
}

TEST(Lab, ParamAccessors) {
  Params p({{"r", "1/e"}, {"N", "64"}, {"radii", "(0.5, 0.3)"}, {"mode", "diagonal"}}, {{"N", "32"}});
  EXPECT_NEAR(p.real("r"), std::exp(-1.0), 1e-16);
  EXPECT_EQ(p.integer("N"), 32);
  EXPECT_EQ(p.reals("radii"), (std::vector<double>{0.5, 0.3}));
  EXPECT_EQ(p.text("mode"), "diagonal");
  EXPECT_THROW(p.integer("r"), InvalidSpec);
  EXPECT_THROW(p.real("missing"), InvalidSpec);
}

TEST(Lab, ParseReal) {
  EXPECT_DOUBLE_EQ(parse_real("0.25"), 0.25);
  EXPECT_DOUBLE_EQ(parse_real(" e "), std::exp(1.0));
  EXPECT_DOUBLE_EQ(parse_real("e^-2"), std::exp(-2.0));
  EXPECT_DOUBLE_EQ(parse_real("exp(0.5)"), std::exp(0.5));
  EXPECT_DOUBLE_EQ(parse_real("1/4"), 0.25);
  EXPECT_DOUBLE_EQ(parse_real("1e-6"), 1e-6);
  EXPECT_THROW(parse_real("half"), InvalidSpec);
  EXPECT_THROW(parse_real(""), InvalidSpec);
}

TEST(Lab, GitBlobHash) {
  EXPECT_EQ(git_blob_hash(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  EXPECT_EQ(git_blob_hash("hello\n"), "ce013625030ba8dba906f756967f9e9ca394464a");
}

TEST(Lab, CsvSchema) {
  ExperimentConfig cfg;
  cfg.id = "diag-seminal";
  cfg.params = {{"N", "16"}};
  Result r = run_experiment(cfg);
  std::istringstream in(to_csv(r));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "experiment,series,n,value,stabilized,proxy");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("diag-seminal,", 0), 0u);
  EXPECT_EQ(to_csv(r).find('\r'), std::string::npos);
}

TEST(Lab, WritesManifestWithHashes) {
  ExperimentConfig cfg;
  cfg.id = "capacity-table";
  cfg.out_dir = ::testing::TempDir() + "/opnum_lab_manifest";
  std::vector<std::string> files = run_and_write(cfg);
  EXPECT_EQ(files.size(), 3u);
  std::ifstream mf(std::filesystem::path(cfg.out_dir) / "manifest.json");
  nlohmann::json m = nlohmann::json::parse(mf);
  EXPECT_EQ(m["inputs"]["experiment"], "capacity-table");
  EXPECT_EQ(m["input_hash"], git_blob_hash(m["inputs"].dump()));
  std::ifstream cf(std::filesystem::path(cfg.out_dir) / "capacity-table.csv", std::ios::binary);
  std::stringstream csv;
  csv << cf.rdbuf();
  EXPECT_EQ(m["outputs"]["capacity-table.csv"], git_blob_hash(csv.str()));
}

TEST(Lab, RepeatRunsAreIdentical) {
  ExperimentConfig cfg;
  cfg.id = "gunatillake";
  Result a = run_experiment(cfg), b = run_experiment(cfg);
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Lab, ErrorReportShape) {
  nlohmann::json j = nlohmann::json::parse(error_report("x", "domain", "bad r"));
  EXPECT_EQ(j["error"], "domain");
  EXPECT_EQ(j["message"], "bad r");
  EXPECT_EQ(j["experiment"], "x");
}

#endif
