/* Copyright 2026 The latsec Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "latsec/catalog.h"
#include "latsec/config.h"
#include "latsec/errors.h"
#include "latsec/rates.h"

namespace latsec {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(LATSEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("latsec_test_" + name);
  std::ofstream(p) << text;
  return p;
}

TEST(Config, UnknownKeysAndTypes) {
  const FlatConfig c = FlatConfig::parse(R"({"trials": 10, "base": "qi"})");
  EXPECT_THROW(c.require_known({"trials"}), ConfigError);
  EXPECT_NO_THROW(c.require_known({"trials", "base"}));
  EXPECT_THROW(c.get_string("trials", ""), ConfigError);
  EXPECT_EQ(c.get_int("trials", 0), 10);
  EXPECT_THROW(FlatConfig::parse(R"({"nested": {"a": 1}})"), ConfigError);
  EXPECT_THROW(FlatConfig::parse("[1, 2]"), ConfigError);
  EXPECT_THROW(FlatConfig::parse("{"), ConfigError);
}

TEST(Config, HashIgnoresKeyOrderAndWhitespace) {
  const FlatConfig a = FlatConfig::parse(R"({"a": 1, "b": [1, 2]})");
  const FlatConfig b = FlatConfig::parse("{\"b\":[1,2],\n \"a\":1}");
  EXPECT_EQ(a.canonical(), b.canonical());
  EXPECT_EQ(a.hash(), b.hash());
  const FlatConfig c = FlatConfig::parse(R"({"a": 2, "b": [1, 2]})");
  EXPECT_NE(a.hash(), c.hash());
  // FNV-1a reference values.
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("no-such-command").code, 2);
  const fs::path bad = write_temp("bad.json", R"({"trails": 10})");
  EXPECT_EQ(run("simulate --config " + bad.string()).code, 2);
  EXPECT_EQ(run("lattice-audit not-a-lattice").code, 2);
  const fs::path nest = write_temp("nest.json", R"({"R": 1.0986, "k_list": [1], "base": "Z^2"})");
  EXPECT_EQ(run("simulate --config " + nest.string()).code, 2);
  EXPECT_EQ(run("verify lattice").code, 0);
}

TEST(Cli, AuditValues) {
  const CliResult r = run("lattice-audit Z^2 qi qzeta5 golden --seed 5");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const auto& h = rows[0];
  EXPECT_EQ(rows[1][column(h, "seed")], "5");
  EXPECT_NEAR(std::stod(rows[2][column(h, "np")]), 1.0, 1e-9);
  EXPECT_NEAR(std::stod(rows[2][column(h, "np_margin")]), 0.0, 1e-9);
  EXPECT_NEAR(std::stod(rows[3][column(h, "hermite")]), 4 / std::pow(125.0, 0.25), 1e-6);
  EXPECT_NEAR(std::stod(rows[4][column(h, "min_pdet")]), 1.0, 1e-9);
  EXPECT_EQ(rows[1][column(h, "config_hash")], rows[4][column(h, "config_hash")]);
}

TEST(Cli, GaussianRatesMatchHandArithmetic) {
  const CliResult r = run("rates --mode gaussian");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  const auto& h = rows[0];
  int checked = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][column(h, "constants")] != "conway-thompson") continue;
    const double snr_b = std::stod(rows[i][column(h, "snr_b_db")]);
    const double rho_b = std::pow(10.0, snr_b / 10), rho_e = std::pow(10.0, 0.5);
    const double expect = std::log(1 + rho_b) - std::log(1 + rho_e) - std::log(4 * M_E / M_PI);
    EXPECT_NEAR(std::stod(rows[i][column(h, "R_max_nats")]), expect, 1e-8);
    EXPECT_NEAR(std::stod(rows[i][column(h, "R_max_bits")]), expect / std::log(2.0), 1e-8);
    ++checked;
  }
  EXPECT_EQ(checked, 61);
}

TEST(Cli, UserConstantsWithoutGap) {
  const fs::path cfg = write_temp(
      "user.json", R"({"mode": "gaussian", "constants": ["user"], "t_b": 0.6366197723675814,
                       "t_e": 0.6366197723675814})");
  const CliResult r = run("rates --config " + cfg.string());
  ASSERT_EQ(r.code, 0);
  const auto rows = csv(r.out);
  const auto& h = rows[0];
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_NEAR(std::stod(rows[i][column(h, "R_max_nats")]),
                std::stod(rows[i][column(h, "C_b_nats")]) -
                    std::stod(rows[i][column(h, "C_e_nats")]),
                1e-8);
}

TEST(Cli, SimulateIsReproducible) {
  const fs::path cfg = write_temp(
      "sim.json", R"({"k_list": [1, 2], "trials": 300, "leakage_trials": 2000, "snr_b_db": 30})");
  const CliResult a = run("simulate --config " + cfg.string() + " --threads 1");
  const CliResult b = run("simulate --config " + cfg.string() + " --threads 4");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliResult c = run("simulate --config " + cfg.string() + " --seed 9");
  EXPECT_NE(a.out, c.out);
  const auto rows = csv(c.out);
  EXPECT_EQ(rows[1][column(rows[0], "seed")], "9");
}

TEST(Cli, ShippedConfigsAreValid) {
  const fs::path dir = fs::path(LATSEC_SOURCE_DIR) / "configs";
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const FlatConfig cfg = FlatConfig::load(entry.path().string());
    EXPECT_TRUE(cfg.has("master_seed")) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 4);
  const fs::path out = fs::temp_directory_path() / "latsec_test_audit.csv";
  EXPECT_EQ(run("lattice-audit --config " + (dir / "audit_catalog.json").string() +
                " --out " + out.string())
                .code,
            0);
  EXPECT_TRUE(fs::exists(out));
}

TEST(Catalog, ManifestFileIsCurrent) {
  std::ifstream in(fs::path(LATSEC_SOURCE_DIR) / "data" / "catalog.json");
  ASSERT_TRUE(in.good());
  const nlohmann::json shipped = nlohmann::json::parse(in);
  EXPECT_EQ(shipped, nlohmann::json::parse(catalog_manifest_json()));
}

}  // namespace
}  // namespace latsec
