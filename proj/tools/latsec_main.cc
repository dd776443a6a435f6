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

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"
#include "latsec/catalog.h"
#include "latsec/errors.h"
#include "latsec/parallel.h"

namespace {

using latsec::FlatConfig;
namespace cli = latsec::cli;

struct Common {
  std::string config;
  std::string out;
  uint64_t seed = 0;
  bool seed_set = false;
  int threads = 1;
};

FlatConfig load_config(const Common& c) {
  FlatConfig cfg = c.config.empty() ? FlatConfig::parse("{}")
                                    : FlatConfig::load(c.config);
  if (c.seed_set) cfg.set("master_seed", std::to_string(c.seed));
  return cfg;
}

std::string quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') q += '\\';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latsec: lattice codes for fading and MIMO wiretap channels"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--config", common.config, "Flat JSON config file");
  app.add_option_function<uint64_t>(
      "--seed",
      [&](uint64_t s) {
        common.seed = s;
        common.seed_set = true;
      },
      "Master seed (overrides master_seed)");
  app.add_option("--out", common.out, "Output CSV path (default: stdout)");
  app.add_option("--threads", common.threads, "Worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("lattice-audit", "Invariants of catalog or file lattices");
  std::vector<std::string> audit_refs;
  audit->add_option("lattices", audit_refs, "Lattice references");
  bool manifest = false;
  audit->add_flag("--manifest", manifest, "Print the catalog manifest as JSON");

  auto* rates = app.add_subcommand("rates", "Achievable secrecy rate curves");
  std::string rate_mode;
  rates->add_option("--mode", rate_mode, "siso-fading, gaussian, mimo or compound");

  auto* sim = app.add_subcommand("simulate", "Monte Carlo wiretap experiments");
  std::vector<int> sim_k;
  sim->add_option("--k", sim_k, "Block counts to simulate");

  auto* ver = app.add_subcommand("verify", "Run the property suites");
  std::string suite;
  ver->add_option("suite", suite, "lattice, gauss, algebra, wiretap, channel or all");

  for (CLI::App* sub : {audit, rates, sim, ver}) {
    sub->add_option("--config", common.config, "Flat JSON config file");
    sub->add_option("--out", common.out, "Output CSV path");
    sub->add_option("--threads", common.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option_function<uint64_t>(
        "--seed",
        [&](uint64_t s) {
          common.seed = s;
          common.seed_set = true;
        },
        "Master seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitConfigError;
  }

  latsec::set_default_threads(common.threads);
  try {
    FlatConfig cfg = load_config(common);
    std::ofstream file;
    if (!common.out.empty()) {
      file.open(common.out);
      if (!file) throw latsec::ConfigError("cannot write " + common.out);
    } else if (cfg.has("output_path")) {
      const std::string path = cfg.get_string("output_path", "");
      file.open(path);
      if (!file) throw latsec::ConfigError("cannot write " + path);
    }
    std::ostream& out = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;

    if (*audit && manifest) {
      out << latsec::catalog_manifest_json() << '\n';
      return cli::kExitOk;
    }
    if (*audit) {
      if (!audit_refs.empty()) {
        std::string list = "[";
        for (std::size_t i = 0; i < audit_refs.size(); ++i)
          list += (i ? "," : "") + quote(audit_refs[i]);
        cfg.set("lattices", list + "]");
      }
      return cli::lattice_audit(cfg, out);
    }
    if (*rates) {
      if (!rate_mode.empty()) cfg.set("mode", quote(rate_mode));
      return cli::rates(cfg, out);
    }
    if (*sim) {
      if (!sim_k.empty()) {
        std::string list = "[";
        for (std::size_t i = 0; i < sim_k.size(); ++i)
          list += (i ? "," : "") + std::to_string(sim_k[i]);
        cfg.set("k_list", list + "]");
      }
      return cli::simulate(cfg, out);
    }
    if (!suite.empty()) cfg.set("suite", quote(suite));
    return cli::verify(cfg, out);
  } catch (const latsec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfigError;
  } catch (const latsec::UnknownReference& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfigError;
  } catch (const latsec::NestingError& e) {
    std::cerr << "config error: " << e.what()
              << " (nearest feasible R = " << e.nearest_feasible_rate << ")\n";
    return cli::kExitConfigError;
  } catch (const latsec::InvalidSpec& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitVerifyFailed;
  }
}
