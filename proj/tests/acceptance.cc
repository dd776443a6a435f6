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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "latsec/binning.h"
#include "latsec/catalog.h"
#include "latsec/channel.h"
#include "latsec/cyclic_algebra.h"
#include "latsec/decoder.h"
#include "latsec/experiments.h"
#include "latsec/gaussian.h"
#include "latsec/lattice.h"
#include "latsec/lemma_checks.h"
#include "latsec/matrix_lattice.h"
#include "latsec/parallel.h"
#include "latsec/rates.h"
#include "latsec/wiretap.h"

namespace {

using namespace latsec;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

template <class F>
void for_box(int n, int b, F f) {
  IntVector u = IntVector::Constant(n, -b);
  while (true) {
    f(u);
    int i = 0;
    while (i < n && u(i) == b) u(i++) = -b;
    if (i == n) return;
    ++u(i);
  }
}

// 1. Rate constants.
void constants(Outcome& o) {
  const double kappa = rate_constants(92.368, 1).kappa_siso;
  const double direct = 2.0 * std::log(92.368 / M_PI);
  const double ct = conway_thompson_gap();
  o.require(std::abs(kappa - direct) < 1e-12, "kappa formula");
  o.require(kappa >= 6.75 && kappa <= 6.77, "kappa nats");
  o.require(nats_to_bits(kappa) >= 9.74 && nats_to_bits(kappa) <= 9.77, "kappa bits");
  o.require(ct >= 1.23 && ct <= 1.25, "gap nats");
  o.require(nats_to_bits(ct) >= 1.78 && nats_to_bits(ct) <= 1.80, "gap bits");
  o.detail << "kappa=" << g(kappa) << " nats/" << g(nats_to_bits(kappa))
           << " bits, gap=" << g(ct) << " nats/" << g(nats_to_bits(ct)) << " bits";
}

// 2. Positive-rate threshold of the Rayleigh curve.
void rayleigh_threshold(Outcome& o) {
  const double snr_e_db = 5.0;
  const double g0 = ideal_lattice_constant(92.368);
  auto r_max = [&](double snr_b_db) {
    RateBudget b;
    b.c_b = rayleigh_capacity(db_to_linear(snr_b_db));
    b.c_e = rayleigh_capacity(db_to_linear(snr_e_db));
    b.g_b = b.g_e = g0;
    return achievable_rates(b, RateMode::kSisoFading).r_max;
  };
  double lo = snr_e_db, hi = 100.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (r_max(mid) > 0 ? hi : lo) = mid;
  }
  const double advantage = hi - snr_e_db;
  o.require(std::abs(advantage - 30.0) <= 1.0, "advantage within 30 +- 1 dB");

  // Closed form against Monte Carlo at both SNRs of the crossing.
  double worst = 0.0;
  for (double db : {snr_e_db, hi}) {
    const double rho = db_to_linear(db);
    Rng rng = make_rng(2, 0, static_cast<uint64_t>(db * 1000));
    double acc = 0.0;
    const int draws = 2'000'000;
    for (int t = 0; t < draws; ++t)
      acc += std::log1p(rho * std::norm(complex_normal(rng)));
    const double mc = acc / draws;
    worst = std::max(worst, std::abs(mc / rayleigh_capacity(rho) - 1.0));
  }
  o.require(worst < 0.01, "Monte Carlo within 1%");
  o.detail << "crossing at Bob SNR " << g(hi) << " dB, advantage " << g(advantage)
           << " dB (target 30 +- 1); MC rel. error " << g(worst);
}

// 3. Product-distance and Hermite bounds over the catalog.
void ideal_bounds(Outcome& o) {
  double qi_np = 0, z5_h = 0;
  int count = 0;
  double min_np_margin = INFINITY, min_h_margin = INFINITY;
  for (const auto& name : field_names()) {
    const NumberFieldCtx& f = catalog_field(name);
    const int k = f.k();
    const double d = std::abs(to_double(f.discriminant()));
    const double np_bound = std::pow(2.0, k / 2.0) / std::pow(d, 0.25);
    const double h_bound = 2.0 * k / std::pow(d, 1.0 / (2 * k));
    const Lattice ideal = resolve_lattice(name + "/ideal").lattice;
    const std::vector<std::pair<std::string, Lattice>> lats = {
        {name, resolve_lattice(name).lattice},
        {name + "/dual", resolve_lattice(name + "/dual").lattice},
        {name + "/ideal", ideal},
        {name + "/ideal-dual", dual(ideal)}};
    for (const auto& [ref, lat] : lats) {
      const double np = product_distance(lat).np;
      const double h = hermite_invariant(lat);
      o.require(np >= np_bound - 1e-9, ref + " Np bound");
      o.require(h >= h_bound - 1e-9, ref + " h bound");
      min_np_margin = std::min(min_np_margin, np - np_bound);
      min_h_margin = std::min(min_h_margin, h - h_bound);
      if (ref == "qi") qi_np = np - np_bound;
      if (ref == "qzeta5") z5_h = h - h_bound;
      ++count;
    }
  }
  o.require(std::abs(qi_np) < 1e-6, "Q(i) Np equality");
  o.require(std::abs(z5_h) < 1e-6, "Q(zeta5) h equality");
  o.detail << count << " lattices; min Np margin " << g(min_np_margin)
           << ", min h margin " << g(min_h_margin) << "; Q(i) Np gap " << g(qi_np)
           << ", Q(zeta5) h gap " << g(z5_h);
}

// Grid maximum of |V f_{sigma,Lambda} - 1| over a fundamental parallelogram.
double grid_flatness(const Lattice& lat, double sigma, int res) {
  const RealMatrix& b = lat.basis();
  const int box = static_cast<int>(std::ceil(8.0 * sigma / min_distance(lat).lambda1)) + 8;
  double worst = 0.0;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j) {
      const RealVector x = b * Eigen::Vector2d(double(i) / res, double(j) / res);
      double sum = 0.0;
      for (int a = -box; a <= box; ++a)
        for (int c = -box; c <= box; ++c)
          sum += std::exp(-(x - b * Eigen::Vector2d(a, c)).squaredNorm() / (sigma * sigma));
      worst = std::max(worst, std::abs(lat.volume() * sum / (M_PI * sigma * sigma) - 1.0));
    }
  return worst;
}

// 4. Flatness by the dual theta sum against direct maximization.
void flatness_oracle(Outcome& o) {
  RealMatrix b(2, 2);
  b << 1.13, 0.41, -0.07, 0.96;
  const std::vector<std::pair<std::string, Lattice>> lats = {
      {"Z^2", Lattice::integer(1)},
      {"random", Lattice(b)},
      {"qi", resolve_lattice("qi").lattice}};
  double worst = 0.0, worst_rt = 0.0;
  for (const auto& [name, lat] : lats)
    for (double sigma : {0.6, 0.8, 1.0}) {
      const double eps = flatness_factor(lat, GaussianSpec::isotropic(sigma));
      const double grid = grid_flatness(lat, sigma, 200);
      worst = std::max(worst, std::abs(eps - grid));
      const double eta = smoothing_parameter(lat, eps);
      worst_rt = std::max(worst_rt, std::abs(eta - std::sqrt(2 * M_PI) * sigma));
    }
  o.require(worst < 1e-6, "grid agreement");
  o.require(worst_rt < 1e-8, "round trip");
  o.detail << "max |theta - grid| " << g(worst) << ", max round-trip error " << g(worst_rt);
}

// 5. Banaszczyk's tail bound.
void banaszczyk(Outcome& o) {
  int checked = 0;
  double worst_ratio = 0.0, worst_oracle = 0.0;
  for (const char* ref : {"Z^2", "Z^4", "Z^8", "qzeta5"}) {
    const Lattice lat = resolve_lattice(ref).lattice;
    const int n = lat.dim_real();
    const double l1 = min_distance(lat).lambda1;
    for (double c : {0.8, 1.0, 1.5})
      for (int j = 0; j < 20; ++j) {
        const double tau = std::sqrt(double(n)) * c / l1 * (1.001 + 0.1 * j);
        const BanaszczykTail t = banaszczyk_tail(lat, tau, c);
        o.require(t.applicable && t.holds, std::string(ref) + " c=" + g(c) + " tau=" + g(tau));
        worst_ratio = std::max(worst_ratio, (t.lhs + t.lhs_tail_bound) / t.rhs);
        // Direct sum: the 1-d theta power for Z^n, a coefficient box otherwise.
        double direct;
        if (std::string(ref).rfind("Z^", 0) == 0) {
          double s = 0.0;
          for (int z = 1; z <= 40; ++z) s += 2.0 * std::exp(-M_PI * tau * tau * z * z);
          direct = std::expm1(n * std::log1p(s));
        } else {
          direct = 0.0;
          for_box(n, 6, [&](const IntVector& u) {
            if (!u.isZero())
              direct += std::exp(-M_PI * tau * tau * lat.point(u).squaredNorm());
          });
        }
        // The certified value brackets the direct sum, which obeys the bound.
        const double slack = 1e-9 * direct + 1e-300;
        o.require(direct >= t.lhs - slack && direct <= t.lhs + t.lhs_tail_bound + slack,
                  std::string(ref) + " certified bracket");
        o.require(direct <= t.rhs, std::string(ref) + " direct sum below bound");
        worst_oracle = std::max(worst_oracle, direct / t.rhs);
        ++checked;
      }
  }
  o.detail << checked << " cases; max certified lhs/rhs " << g(worst_ratio)
           << ", max direct/rhs " << g(worst_oracle);
}

// 6. Mixture of a lattice Gaussian and a continuous Gaussian.
void mixture(Outcome& o) {
  const ComplexMatrix s = ComplexMatrix::Identity(1, 1) * 4.0;
  const uint64_t trials = 10'000'000;
  const MixtureCheck m = regev_mixture_check(Lattice::integer(1), {}, s, s, trials, 6);
  o.require(m.epsilon < 1e-7, "epsilon < 1e-7");
  o.require(m.l1.raw < 0.02, "binned L1 < 0.02");

  // Calibration: the same estimator on exact continuous Gaussian samples.
  const GaussianBinning bins(GaussianSpec::correlated(s + s), 1, default_bins(1));
  std::vector<uint64_t> counts(bins.cells(), 0);
  const uint64_t chunk = 1 << 16;
  std::vector<std::vector<uint64_t>> partial((trials + chunk - 1) / chunk);
  parallel_for(partial.size(), 0, [&](std::size_t c) {
    std::vector<uint64_t> local(bins.cells(), 0);
    Rng rng = make_rng(60, 0, c);
    const uint64_t end = std::min<uint64_t>(trials, (c + 1) * chunk);
    for (uint64_t t = c * chunk; t < end; ++t) {
      ComplexVector z(1);
      z(0) = complex_normal(rng, 8.0);
      ++local[bins.cell(z)];
    }
    partial[c] = std::move(local);
  });
  for (const auto& p : partial)
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += p[i];
  const L1Estimate cal = l1_to_uniform(counts, 61);
  o.require(cal.raw < 0.02, "calibration floor < 0.02");
  o.require(m.l1.raw <= cal.raw + 3 * (m.l1.std_error + cal.std_error),
            "mixture indistinguishable from calibration");
  o.detail << "epsilon " << g(m.epsilon) << "; mixture L1 raw " << g(m.l1.raw)
           << " (floor " << g(m.l1.null_floor) << ", SE " << g(m.l1.std_error)
           << "); Gaussian calibration raw " << g(cal.raw);
}

// 7. Linear images and the subgaussian moment bound.
void transforms(Outcome& o) {
  Rng rng = make_rng(7, 0, 0);
  double min_p = 1.0;
  for (int t = 0; t < 10; ++t) {
    const int k = t < 5 ? 1 : 2;
    ComplexMatrix a(k, k);
    do {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a(i, j) = complex_normal(rng);
      if (k == 2) a += ComplexMatrix::Identity(2, 2);
    } while (std::abs(a.determinant()) < 0.3);
    const ComplexMatrix cov = ComplexMatrix::Identity(k, k) * (k == 1 ? 1.5 : 1.0);
    const ChiSquare c = linear_transform_check(Lattice::integer(k), {}, cov, a,
                                               k == 1 ? 1'000'000 : 400'000, 70 + t);
    min_p = std::min(min_p, c.p_value);
    o.require(c.p_value > 0.01, "transform " + std::to_string(t));
  }
  std::vector<ComplexVector> ts;
  for (int d = 0; d < 100; ++d) {
    ComplexVector t(1);
    t(0) = std::polar(0.3 * (d % 10 + 1), 2 * M_PI * d / 100.0);
    ts.push_back(t);
  }
  const MgfCheck m = subgaussian_mgf_check(Lattice::integer(1), {}, 2.0,
                                           ComplexMatrix::Identity(1, 1), ts);
  ComplexVector shift(1);
  shift(0) = Complex(0.3, -0.1);
  ComplexMatrix resid = mmse_gdfe(ComplexMatrix::Identity(1, 1) * 0.8, 10.0).r.inverse();
  const MgfCheck m2 = subgaussian_mgf_check(Lattice::integer(1), shift, 2.0, resid, ts);
  o.require(m.worst_ratio <= 1.0 + 1e-12 && m2.worst_ratio <= 1.0 + 1e-12, "MGF ratio <= 1");
  o.detail << "min chi-square p " << g(min_p) << "; MGF max ratio " << g(m.worst_ratio)
           << " (identity), " << g(m2.worst_ratio) << " (MMSE residual)";
}

// 8. The golden order lattice and its codifferent.
void golden(Outcome& o) {
  const CyclicAlgebraCtx& alg = golden_algebra();
  const MatrixLattice p = multiblock_embed(alg);
  const MatrixLattice d = algebra_codifferent(alg);
  const int dim = alg.dim();
  RealMatrix pairing(dim, dim);
  double int_err = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      pairing(i, j) = (d.generators()[i].adjoint() * p.generators()[j]).trace().real();
      int_err = std::max(int_err, std::abs(pairing(i, j) - std::round(pairing(i, j))));
    }
  const double det = std::abs(pairing.determinant());
  o.require(int_err < 1e-9 && std::abs(det - 1.0) < 1e-9, "pairing unimodular");

  // |pdet| over the coefficient box, updated incrementally along the odometer.
  std::vector<ComplexMatrix> gens = p.generators();
  IntVector u = IntVector::Constant(dim, -3);
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < dim; ++i) x -= 3.0 * gens[i];
  double min_pdet = INFINITY;
  uint64_t visited = 0;
  while (true) {
    if (!u.isZero()) min_pdet = std::min(min_pdet, std::abs(x.determinant()));
    ++visited;
    int i = 0;
    while (i < dim && u(i) == 3) {
      x -= 6.0 * gens[i];
      u(i++) = -3;
    }
    if (i == dim) break;
    ++u(i);
    x += gens[i];
  }
  o.require(std::abs(min_pdet - 1.0) < 1e-9, "min pdet = 1");

  const double gram = std::sqrt(p.lattice().gram().determinant());
  const double formula =
      std::pow(2.0, -alg.k() * alg.n() * alg.n()) * std::sqrt(std::abs(to_double(alg.discriminant())));
  o.require(std::abs(gram / formula - 1.0) < 1e-6, "volume identity");

  Rng rng = make_rng(8, 0, 0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    RationalVector a(dim);
    for (auto& c : a) c = std::uniform_int_distribution<int>(-6, 6)(rng);
    const double lhs = std::norm(pdet(alg.psi(a), alg.n()));
    const double rhs = std::abs(to_double(alg.norm_q(a)));
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
  }
  o.require(worst < 1e-8, "norm identity");
  o.detail << "pairing |det| " << g(det) << ", integrality error " << g(int_err)
           << "; min |pdet| " << g(min_pdet) << " over " << visited
           << " elements; volume " << g(gram) << " vs " << g(formula)
           << "; norm identity max rel. error " << g(worst);
}

// 9. Reliability on a static channel.
void reliability(Outcome& o) {
  CodeParams cp;
  cp.R = std::log(4.0);
  cp.R_prime = 1.0;
  const WiretapCode code = build_code(Lattice::integer(1), cp);
  const double rho = db_to_linear(15.0);
  RateBudget rb;
  rb.c_b = std::log1p(rho);
  rb.c_e = 0.0;
  rb.g_b = rb.g_e = hermite_invariant(code.base);
  o.require(code.R + code.R_prime < achievable_rates(rb, RateMode::kGaussian).r_sum_max,
            "rate condition");
  const WiretapEncoder enc(code);
  const auto hb = static_blocks(1, 1, 1, 1.0);
  const ErrorProbability e = error_prob_mc(enc, hb, code.P / rho, 10'000, 9);
  o.require(e.p_e_hat <= e.union_bound + 3 * e.std_error, "P_e <= union + 3 SE");
  o.require(e.tau_condition, "tau condition");
  if (e.tau_condition) o.require(e.union_bound <= e.banaszczyk_bound, "union <= Banaszczyk form");

  Rng rng = make_rng(9, 1, 0);
  const RealMatrix& b = code.lattice_b.basis();
  int agree = 0;
  for (int t = 0; t < 500; ++t) {
    ComplexMatrix h(1, 1);
    h(0, 0) = complex_normal(rng);
    const double r = std::exp(3.0 * uniform01(rng));
    const std::size_t m = t % code.messages();
    ComplexVector y = h * enc.encode(m, rng);
    y(0) += complex_normal(rng, 0.5);
    // The optimum beats x = 0, so |x| <= sqrt(r) |y| bounds its coefficients.
    const RealMatrix inv = b.inverse();
    const int box = int(std::ceil(std::max(inv.row(0).norm(), inv.row(1).norm()) *
                                  std::sqrt(r) * y.norm()));
    double best = INFINITY;
    std::size_t best_m = 0;
    for_box(2, box, [&](const IntVector& u) {
      const ComplexVector x = to_complex(b * u.cast<double>());
      const double v = x.squaredNorm() / r + (y - h * x).squaredNorm();
      if (v < best) {
        best = v;
        best_m = coset_index_coeffs(code, u);
      }
    });
    agree += decode_map(code, y, h, r) == best_m;
  }
  o.require(agree == 500, "decode_map matches brute force");
  o.detail << "P_e " << g(e.p_e_hat) << " +- " << g(e.std_error) << ", union "
           << g(e.union_bound) << ", Banaszczyk form " << g(e.banaszczyk_bound)
           << " (c* " << g(e.c_star) << "); MAP agreement " << agree << "/500";
}

// 10. Secrecy on a fixed channel.
void secrecy(Outcome& o) {
  const double sigma_e2 = 1.0;  // 0 dB
  CodeParams cp;
  cp.R = std::log(4.0);
  cp.R_prime = 4.0;
  const WiretapCode c1 = build_code(resolve_lattice("qi").lattice, cp);
  const WiretapCode c2 = build_code(resolve_lattice("qzeta5").lattice, cp);
  const SecrecyCheck s1 = secrecy_threshold_check(c1, static_blocks(1, 1, 1, 1.0), sigma_e2);
  const SecrecyCheck s2 = secrecy_threshold_check(c2, static_blocks(2, 1, 1, 1.0), sigma_e2);
  o.require(s1.condition_met, "R' above threshold");
  o.require(s2.epsilon_k < s1.epsilon_k, "epsilon decreasing in degree");

  const WiretapEncoder enc(c1);
  const LeakageEstimate le =
      leakage_estimate(enc, static_blocks(1, 1, 1, 1.0), sigma_e2, 1'000'000, 10);
  o.require(le.v_hat <= 4 * le.epsilon_k + 3 * le.std_error, "V_hat <= 4 eps + 3 SE");

  cp.R_prime = 1.0;
  const WiretapCode low = build_code(resolve_lattice("qi").lattice, cp);
  const SecrecyCheck s3 = secrecy_threshold_check(low, static_blocks(1, 1, 1, 1.0), sigma_e2);
  o.require(!s3.condition_met, "condition fails below threshold");
  o.detail << "eps_1 " << g(s1.epsilon_k) << " > eps_2 " << g(s2.epsilon_k)
           << "; V_hat " << g(le.v_hat) << " (SE " << g(le.std_error) << ", 4 eps "
           << g(4 * le.epsilon_k) << "); condition lhs " << g(s1.condition_lhs)
           << " at R'=4, " << g(s3.condition_lhs) << " at R'=1";
}

// 11. Law-of-large-numbers diagnostics.
void lln(Outcome& o) {
  FadingSpec ray;
  ray.law = FadingSpec::Law::kRayleigh;
  ray.snr = 1.0;
  const auto r = lln_diagnostic(ray, {10, 100, 1000}, 0.1, 20'000, 11);
  FadingSpec adv = ray;
  adv.law = FadingSpec::Law::kAdversarial;
  const auto a = lln_diagnostic(adv, {10, 100, 1000}, 0.1, 20'000, 11);
  o.require(strictly_decreasing_trend(r), "Rayleigh k P decreasing");
  o.require(nondecreasing_trend(a), "adversarial k P non-decreasing");
  o.detail << "Rayleigh k*P:";
  for (const auto& row : r) o.detail << ' ' << g(row.k_p_hat);
  o.detail << "; adversarial k*P:";
  for (const auto& row : a) o.detail << ' ' << g(row.k_p_hat);
}

// 12. Thread-count independence of the simulate output.
std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(LATSEC_CLI_PATH) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void determinism(Outcome& o) {
  const auto cfg = std::filesystem::temp_directory_path() / "latsec_acceptance_sim.json";
  std::ofstream(cfg) << R"({"k_list": [1, 2, 3], "trials": 3000, "leakage_trials": 5000,
                           "snr_b_db": 30, "master_seed": 12})";
  int c1 = 0, c4 = 0;
  const std::string a = run_cli("simulate --config " + cfg.string() + " --threads 1", c1);
  const std::string b = run_cli("simulate --config " + cfg.string() + " --threads 4", c4);
  o.require(c1 == 0 && c4 == 0, "simulate exit status");
  o.require(!a.empty() && a == b, "byte-identical CSV");
  o.detail << a.size() << " bytes, " << (a == b ? "identical" : "different")
           << " at 1 and 4 threads";
}

}  // namespace

int main() {
  set_default_threads(std::max(1u, std::thread::hardware_concurrency()));
  struct Criterion {
    int id;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1, constants},      {2, 60, rayleigh_threshold}, {3, 10, ideal_bounds},
      {4, 60, flatness_oracle}, {5, 60, banaszczyk},       {6, 300, mixture},
      {7, 120, transforms},   {8, 120, golden},            {9, 300, reliability},
      {10, 600, secrecy},     {11, 120, lln},              {12, 600, determinism}};
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= c.limit_s, "runtime limit");
    if (!o.pass) ++failed;
    std::cout << "CRITERION " << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << ' '
              << o.detail.str() << " (" << g(secs) << " s, limit " << g(c.limit_s)
              << " s)" << std::endl;
  }
  std::cout << (failed ? "ACCEPTANCE FAIL " : "ACCEPTANCE PASS ") << 12 - failed
            << "/12" << std::endl;
  return failed ? 1 : 0;
}
