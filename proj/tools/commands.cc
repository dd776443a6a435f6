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

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "latsec/catalog.h"
#include "latsec/channel.h"
#include "latsec/errors.h"
#include "latsec/experiments.h"
#include "latsec/lattice.h"
#include "latsec/matrix_lattice.h"
#include "latsec/rates.h"

namespace latsec::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::set<std::string> keys(std::initializer_list<std::string> extra) {
  std::set<std::string> out = {"command", "master_seed", "output_path"};
  out.insert(extra.begin(), extra.end());
  return out;
}

// For psi(I), I a fractional ideal of a field with discriminant d:
// Np >= 2^{k/2} / |d|^{1/4} and h >= 2k / |d|^{1/(2k)}.
double np_bound(int k, double d) { return std::pow(2.0, 0.5 * k) / std::pow(d, 0.25); }
double h_bound(int k, double d) { return 2.0 * k / std::pow(d, 1.0 / (2.0 * k)); }

bool dual_check(const CatalogLattice& c) {
  const Lattice& lat = c.lattice;
  bool ok = same_lattice(dual(dual(lat)), lat);
  const auto slash = c.ref.find('/');
  const std::string head = c.ref.substr(0, slash);
  const std::string kind = slash == std::string::npos ? "" : c.ref.substr(slash + 1);
  if (!c.discriminant || c.ref.rfind("Z^", 0) == 0) return ok;
  if (kind.empty())
    ok = ok && same_lattice(resolve_lattice(head + "/dual").lattice, dual(lat));
  else if (kind == "dual")
    ok = ok && same_lattice(resolve_lattice(head).lattice, dual(lat));
  return ok;
}

double mode_capacity(RateMode mode, const std::string& law, int n, double rho) {
  if (law == "static") return n * std::log1p(rho);
  if (law != "rayleigh") throw ConfigError("rates law must be static or rayleigh");
  if (mode == RateMode::kGaussian)
    throw ConfigError("gaussian mode needs the static law");
  if (n == 1) return rayleigh_capacity(rho);
  FadingSpec spec;
  spec.law = FadingSpec::Law::kRayleigh;
  spec.n_tx = spec.n_rx = n;
  spec.snr = rho;
  return ergodic_capacity(spec);
}

}  // namespace

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

int lattice_audit(const FlatConfig& cfg, std::ostream& out) {
  cfg.require_known(keys({"lattices", "radius_factor"}));
  const auto refs = cfg.get_string_list("lattices", {"Z^2"});
  const double rf = cfg.get_double("radius_factor", 2.0);
  const uint64_t seed = cfg.get_u64("master_seed", 0);
  const std::string hash = cfg.hash();
  out << "seed,config_hash,lattice,dim_complex,volume,lambda1,hermite,np,np_bound,"
         "np_margin,h_bound,h_margin,min_pdet,delta,dual_check\n";
  for (const std::string& ref : refs) {
    const CatalogLattice c = resolve_lattice(ref);
    const Lattice& lat = c.lattice;
    const int k = lat.dim_complex();
    const double h = hermite_invariant(lat);
    double np = kNan, npb = kNan, hb = kNan, min_pdet = kNan, delta = kNan;
    if (c.matrix) {
      const PdetMin pm = pdet_min(*c.matrix, rf);
      min_pdet = pm.pdet;
      delta = pm.delta;
    } else {
      np = product_distance(lat, rf).np;
      if (c.discriminant) {
        npb = np_bound(k, *c.discriminant);
        hb = h_bound(k, *c.discriminant);
      }
    }
    out << seed << ',' << hash << ',' << ref << ',' << k << ',' << fmt(lat.volume())
        << ',' << fmt(min_distance(lat).lambda1) << ',' << fmt(h) << ',' << fmt(np)
        << ',' << fmt(npb) << ',' << fmt(np - npb) << ',' << fmt(hb) << ','
        << fmt(h - hb) << ',' << fmt(min_pdet) << ',' << fmt(delta) << ','
        << (dual_check(c) ? "pass" : "fail") << '\n';
  }
  return kExitOk;
}

int rates(const FlatConfig& cfg, std::ostream& out) {
  cfg.require_known(keys({"mode", "law", "n", "snr_e_db", "snr_b_db", "snr_b_min",
                          "snr_b_max", "snr_b_step", "rd", "constants", "t_b", "t_e"}));
  const RateMode mode = parse_rate_mode(cfg.get_string("mode", "siso-fading"));
  const bool scalar = mode == RateMode::kSisoFading || mode == RateMode::kGaussian;
  const std::string law = cfg.get_string(
      "law", mode == RateMode::kGaussian || mode == RateMode::kCompound ? "static"
                                                                       : "rayleigh");
  const int n = static_cast<int>(cfg.get_int("n", mode == RateMode::kMimo ? 2 : 1));
  if (n < 1) throw ConfigError("n must be positive");
  if (scalar && n != 1) throw ConfigError("scalar rate modes need n = 1");
  const double snr_e_db = cfg.get_double("snr_e_db", 5.0);
  std::vector<double> grid = cfg.get_double_list("snr_b_db", {});
  if (grid.empty()) {
    const double lo = cfg.get_double("snr_b_min", 0.0);
    const double hi = cfg.get_double("snr_b_max", 60.0);
    const double step = cfg.get_double("snr_b_step", 1.0);
    if (!(step > 0) || hi < lo) throw ConfigError("bad SNR grid");
    const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (int i = 0; i < count; ++i) grid.push_back(lo + i * step);
  }
  const double rd = cfg.get_double("rd", kMartinetRootDiscriminant);
  const auto sets = cfg.get_string_list(
      "constants", mode == RateMode::kGaussian
                       ? std::vector<std::string>{"number-field", "conway-thompson"}
                       : std::vector<std::string>{"number-field"});

  struct Set {
    std::string name;
    double g_b, g_e;
  };
  std::vector<Set> constants;
  for (const std::string& s : sets) {
    if (s == "number-field") {
      const double g = scalar ? ideal_lattice_constant(rd) : algebra_lattice_constant(rd, n);
      constants.push_back({s, g, g});
    } else if (s == "conway-thompson") {
      if (!scalar) throw ConfigError("conway-thompson constants are scalar only");
      const double g = 1.0 / std::sqrt(M_PI * M_E);
      constants.push_back({s, g, g});
    } else if (s == "user") {
      if (!cfg.has("t_b") || !cfg.has("t_e"))
        throw ConfigError("user constants need t_b and t_e");
      constants.push_back({s, cfg.get_double("t_b", 1.0), cfg.get_double("t_e", 1.0)});
    } else {
      throw ConfigError("unknown constant set '" + s + "'");
    }
  }

  const uint64_t seed = cfg.get_u64("master_seed", 0);
  const std::string hash = cfg.hash();
  const double c_e = mode_capacity(mode, law, n, db_to_linear(snr_e_db));
  out << "seed,config_hash,mode,law,n,snr_b_db,snr_e_db,C_b_nats,C_e_nats,C_b_bits,"
         "C_e_bits,constants,g_b,g_e,kappa_nats,kappa_bits,R_prime_min_nats,"
         "R_sum_max_nats,R_max_nats,R_max_bits\n";
  for (double snr_b_db : grid) {
    const double c_b = mode_capacity(mode, law, n, db_to_linear(snr_b_db));
    for (const Set& s : constants) {
      RateBudget b;
      b.c_b = c_b;
      b.c_e = c_e;
      b.g_b = s.g_b;
      b.g_e = s.g_e;
      b.n = n;
      const AchievableRates r = achievable_rates(b, mode);
      const double kappa = c_b - c_e - r.r_max;
      out << seed << ',' << hash << ',' << rate_mode_name(mode) << ',' << law << ','
          << n << ',' << fmt(snr_b_db) << ',' << fmt(snr_e_db) << ',' << fmt(c_b)
          << ',' << fmt(c_e) << ',' << fmt(nats_to_bits(c_b)) << ','
          << fmt(nats_to_bits(c_e)) << ',' << s.name << ',' << fmt(s.g_b) << ','
          << fmt(s.g_e) << ',' << fmt(kappa) << ',' << fmt(nats_to_bits(kappa)) << ','
          << fmt(r.r_prime_min) << ',' << fmt(r.r_sum_max) << ',' << fmt(r.r_max)
          << ',' << fmt(nats_to_bits(r.r_max)) << '\n';
    }
  }
  return kExitOk;
}

int simulate(const FlatConfig& cfg, std::ostream& out) {
  cfg.require_known(keys({"k_list", "base", "snr_b_db", "snr_e_db", "R", "R_prime",
                          "P", "power_backoff", "gain_b", "gain_e", "trials",
                          "leakage_trials", "leakage_max_k"}));
  SimulateParams p;
  p.k_list = cfg.get_int_list("k_list", p.k_list);
  p.base = cfg.get_string("base", p.base);
  p.snr_b_db = cfg.get_double("snr_b_db", p.snr_b_db);
  p.snr_e_db = cfg.get_double("snr_e_db", p.snr_e_db);
  p.R = cfg.get_double("R", p.R);
  p.R_prime = cfg.get_double("R_prime", p.R_prime);
  p.P = cfg.get_double("P", p.P);
  p.power_backoff = cfg.get_double("power_backoff", p.power_backoff);
  p.gain_b = cfg.get_double("gain_b", p.gain_b);
  p.gain_e = cfg.get_double("gain_e", p.gain_e);
  p.trials = cfg.get_u64("trials", p.trials);
  p.leakage_trials = cfg.get_u64("leakage_trials", p.leakage_trials);
  p.leakage_max_k = static_cast<int>(cfg.get_int("leakage_max_k", p.leakage_max_k));
  p.seed = cfg.get_u64("master_seed", p.seed);
  p.threads = 0;
  const std::string hash = cfg.hash();
  const std::vector<SimulateRow> rows = latsec::simulate(p);
  out << "seed,config_hash,k,base,messages,snr_b_db,snr_e_db,R_nats,R_bits,"
         "R_prime_nats,R_prime_bits,P_e_hat,P_e_se,union_bound,epsilon_k,"
         "leakage_bound,V_hat,condition_met\n";
  for (const SimulateRow& r : rows) {
    out << r.seed << ',' << hash << ',' << r.k << ',' << r.base << ',' << r.messages
        << ',' << fmt(r.snr_b_db) << ',' << fmt(r.snr_e_db) << ',' << fmt(r.R) << ','
        << fmt(nats_to_bits(r.R)) << ',' << fmt(r.R_prime) << ','
        << fmt(nats_to_bits(r.R_prime)) << ',' << fmt(r.p_e_hat) << ','
        << fmt(r.p_e_se) << ',' << fmt(r.union_bound) << ',' << fmt(r.epsilon_k)
        << ',' << fmt(r.leakage_bound) << ',' << fmt(r.v_hat) << ','
        << (r.condition_met ? "true" : "false") << '\n';
  }
  return kExitOk;
}

}  // namespace latsec::cli
