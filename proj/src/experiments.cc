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

#include "latsec/experiments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>

#include "latsec/catalog.h"
#include "latsec/decoder.h"
#include "latsec/errors.h"
#include "latsec/gaussian.h"
#include "latsec/matrix_lattice.h"
#include "latsec/rates.h"

namespace latsec {
namespace {

constexpr uint64_t kChunk = 1 << 10;
constexpr uint64_t kErrorStream = 0x70e00000;
constexpr uint64_t kLeakStream = 0x1ea00000;
constexpr uint64_t kPermStream = 0x9e3000;

double subgaussian_factor(double eps) {
  return eps < 1.0 ? (1.0 + eps) / (1.0 - eps)
                   : std::numeric_limits<double>::infinity();
}

// Square blocks stay as they are; tall ones are replaced by their R factor.
std::vector<ComplexMatrix> reduced_blocks(const std::vector<ComplexMatrix>& he) {
  std::vector<ComplexMatrix> out;
  for (const ComplexMatrix& h : he)
    out.push_back(h.rows() == h.cols() ? h : tall_reduction(h).r);
  return out;
}

}  // namespace

std::vector<ComplexMatrix> static_blocks(int k, int n_rx, int n_tx, Complex gain) {
  return std::vector<ComplexMatrix>(k, ComplexMatrix::Identity(n_rx, n_tx) * gain);
}

ErrorProbability error_prob_mc(const WiretapEncoder& enc,
                               const std::vector<ComplexMatrix>& hb_blocks,
                               double sigma_b2, uint64_t trials, uint64_t seed,
                               int threads) {
  const WiretapCode& code = enc.code();
  if (!(sigma_b2 > 0)) throw InvalidSpec("sigma_b^2 must be positive");
  if (trials == 0) throw InvalidSpec("trials must be positive");
  const ComplexMatrix h = effective_channel(hb_blocks, code.n);
  if (h.cols() != code.dim_complex())
    throw InvalidSpec("channel does not match the code dimension");
  const double rho = code.sigma_s * code.sigma_s / sigma_b2;
  const MapDecoder decoder(code, h, rho);

  ErrorProbability out;
  out.trials = trials;
  const uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<uint64_t> errors(chunks, 0);
  const std::size_t messages = code.messages();
  parallel_for(chunks, threads, [&](std::size_t c) {
    const uint64_t lo = c * kChunk, hi = std::min<uint64_t>(trials, lo + kChunk);
    uint64_t e = 0;
    for (uint64_t t = lo; t < hi; ++t) {
      Rng rng = make_rng(seed, kErrorStream, t);
      const std::size_t m =
          std::uniform_int_distribution<std::size_t>(0, messages - 1)(rng);
      const ComplexVector x = enc.encode(m, rng);
      ComplexVector y = h * x;
      for (int i = 0; i < y.size(); ++i) y(i) += complex_normal(rng, sigma_b2);
      if (decoder.decode(y).message != m) ++e;
    }
    errors[c] = e;
  });
  out.errors = std::accumulate(errors.begin(), errors.end(), uint64_t{0});
  out.p_e_hat = static_cast<double>(out.errors) / trials;
  out.std_error = std::sqrt(out.p_e_hat * (1.0 - out.p_e_hat) / trials);

  out.epsilon = flatness_factor(code.lattice_e,
                                GaussianSpec::isotropic(code.sigma_s));
  const double factor = subgaussian_factor(out.epsilon);
  const Lattice rl = code.lattice_b.transformed(decoder.front_end().r);
  const int dim = rl.dim_real();
  out.lambda1 = min_distance(rl).lambda1;
  out.tau = 1.0 / std::sqrt(4.0 * M_PI * sigma_b2);
  out.c_star = out.tau * out.lambda1 / std::sqrt(static_cast<double>(dim)) *
               (1.0 - 1e-9);
  out.tau_condition = out.c_star > 1.0 / std::sqrt(2.0 * M_PI);
  double cd_ratio = std::numeric_limits<double>::infinity();
  if (out.tau_condition) {
    const double cd = std::pow(banaszczyk_constant(out.c_star), dim);
    if (cd < 1.0) cd_ratio = cd / (1.0 - cd);
  }
  out.banaszczyk_bound = factor * cd_ratio;
  // The tail tolerance follows the analytic bound so that tiny theta sums
  // keep their relative accuracy.
  const double tail_tol = std::max(1e-300, std::min(1e-15, 1e-6 * cd_ratio));
  try {
    const ThetaSum t = theta_sum(rl, 1.0 / (4.0 * sigma_b2), tail_tol);
    out.theta = t.value;
    out.union_bound = factor * (t.value + t.tail_bound);
  } catch (const Error&) {
    out.theta = out.union_bound = std::numeric_limits<double>::infinity();
  }
  out.within_union_bound = out.p_e_hat <= out.union_bound + 3.0 * out.std_error;
  return out;
}

EveObservation eve_observe(const WiretapEncoder& enc, std::size_t m,
                           const std::vector<ComplexMatrix>& he_blocks,
                           double sigma_e2, Rng& rng) {
  const WiretapCode& code = enc.code();
  const int n = code.n, k = code.k;
  if (static_cast<int>(he_blocks.size()) != k)
    throw InvalidSpec("expected one channel block per code block");
  const ComplexMatrix h = effective_channel(he_blocks, n);
  const ComplexVector x = enc.encode(m, rng);
  ComplexVector z = h * x;
  for (int i = 0; i < z.size(); ++i) z(i) += complex_normal(rng, sigma_e2);
  EveObservation out;
  out.z = z;
  const int ne = static_cast<int>(he_blocks[0].rows());
  if (ne == n) {
    out.z_reduced = z;
    out.z_discarded = ComplexVector(0);
    return out;
  }
  const ComplexMatrix y = devectorize(z, ne * k, n);
  ComplexMatrix top(n * k, n), rest((ne - n) * k, n);
  for (int i = 0; i < k; ++i) {
    const ComplexMatrix yi =
        tall_reduction(he_blocks[i]).q.adjoint() * y.middleRows(i * ne, ne);
    top.middleRows(i * n, n) = yi.topRows(n);
    rest.middleRows(i * (ne - n), ne - n) = yi.bottomRows(ne - n);
  }
  out.z_reduced = vectorize(top);
  out.z_discarded = vectorize(rest);
  return out;
}

PermutationTest discarded_independence_test(
    const WiretapEncoder& enc, const std::vector<ComplexMatrix>& he_blocks,
    double sigma_e2, uint64_t trials, uint64_t seed, int permutations) {
  const std::size_t messages = enc.code().messages();
  std::vector<std::size_t> labels(trials);
  std::vector<ComplexVector> obs(trials);
  parallel_for(trials, 0, [&](std::size_t t) {
    Rng rng = make_rng(seed, kPermStream, t);
    labels[t] = std::uniform_int_distribution<std::size_t>(0, messages - 1)(rng);
    obs[t] = eve_observe(enc, labels[t], he_blocks, sigma_e2, rng).z_discarded;
  });
  if (trials == 0 || obs[0].size() == 0)
    throw InvalidSpec("no discarded component (n_e = n)");
  const int d = static_cast<int>(obs[0].size());
  ComplexVector mean = ComplexVector::Zero(d);
  for (const ComplexVector& z : obs) mean += z;
  mean /= static_cast<double>(trials);

  auto stat = [&](const std::vector<std::size_t>& lab) {
    std::vector<ComplexVector> sums(messages, ComplexVector::Zero(d));
    std::vector<uint64_t> counts(messages, 0);
    for (uint64_t t = 0; t < trials; ++t) {
      sums[lab[t]] += obs[t];
      ++counts[lab[t]];
    }
    double s = 0.0;
    for (std::size_t m = 0; m < messages; ++m)
      if (counts[m] > 0)
        s += counts[m] * (sums[m] / static_cast<double>(counts[m]) - mean).squaredNorm();
    return s;
  };
  PermutationTest out{};
  out.statistic = stat(labels);
  Rng rng = make_rng(seed, kPermStream + 1, 0);
  std::vector<std::size_t> shuffled = labels;
  double acc = 0.0, acc2 = 0.0;
  for (int p = 0; p < permutations; ++p) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const double s = stat(shuffled);
    acc += s;
    acc2 += s * s;
  }
  out.null_mean = acc / permutations;
  out.null_sd = std::sqrt(std::max(0.0, acc2 / permutations - out.null_mean * out.null_mean));
  out.z_score = (out.statistic - out.null_mean) / out.null_sd;
  return out;
}

LeakageEstimate leakage_estimate(const WiretapEncoder& enc,
                                 const std::vector<ComplexMatrix>& he_blocks,
                                 double sigma_e2, uint64_t trials_per_message,
                                 uint64_t seed, int threads, int bins) {
  const WiretapCode& code = enc.code();
  const int dim = code.dim_complex();
  if (dim > 2) throw InvalidSpec("leakage estimation needs complex dimension <= 2");
  if (trials_per_message == 0) throw InvalidSpec("trials must be positive");
  LeakageEstimate out;
  out.bins = bins > 0 ? bins : default_bins(dim);
  out.epsilon_k = eve_flatness(code, he_blocks, sigma_e2);
  out.analytic_bound = 4.0 * out.epsilon_k;
  out.smooth = out.epsilon_k <= 0.5;

  const ComplexMatrix h = effective_channel(reduced_blocks(he_blocks), code.n);
  ComplexMatrix sigma0 = code.sigma_s * code.sigma_s * h * h.adjoint() +
                         sigma_e2 * ComplexMatrix::Identity(dim, dim);
  sigma0 = 0.5 * (sigma0 + sigma0.adjoint()).eval();
  const GaussianBinning binning(GaussianSpec::correlated(sigma0), dim, out.bins);

  const std::size_t messages = code.messages();
  std::vector<std::vector<uint64_t>> counts(
      messages, std::vector<uint64_t>(binning.cells(), 0));
  const uint64_t chunks = (trials_per_message + kChunk * 4 - 1) / (kChunk * 4);
  std::mutex mu;
  parallel_for(messages * chunks, threads, [&](std::size_t job) {
    const std::size_t m = job / chunks;
    const uint64_t c = job % chunks;
    const uint64_t lo = c * kChunk * 4;
    const uint64_t hi = std::min<uint64_t>(trials_per_message, lo + kChunk * 4);
    std::vector<std::pair<std::size_t, uint64_t>> local;
    std::vector<std::size_t> cells;
    cells.reserve(hi - lo);
    for (uint64_t t = lo; t < hi; ++t) {
      Rng rng = make_rng(seed, kLeakStream + m, t);
      cells.push_back(
          binning.cell(eve_observe(enc, m, he_blocks, sigma_e2, rng).z_reduced));
    }
    std::lock_guard<std::mutex> lock(mu);
    for (std::size_t cell : cells) ++counts[m][cell];
  });

  for (std::size_t m = 0; m < messages; ++m) {
    out.per_message.push_back(
        l1_to_uniform(counts[m], derive_seed(seed, kLeakStream, m)));
    if (m == 0 || out.per_message[m].corrected > out.v_hat) {
      out.v_hat = out.per_message[m].corrected;
      out.worst_message = m;
    }
  }
  out.v_raw = out.per_message[out.worst_message].raw;
  out.std_error = out.per_message[out.worst_message].std_error;
  for (std::size_t a = 0; a < messages; ++a)
    for (std::size_t b = a + 1; b < messages; ++b)
      out.pairwise_max = std::max(out.pairwise_max, l1_between(counts[a], counts[b]));
  return out;
}

std::vector<SimulateRow> simulate(const SimulateParams& p) {
  if (p.k_list.empty()) throw InvalidSpec("k_list is empty");
  std::vector<SimulateRow> rows;
  for (int k : p.k_list) {
    const std::string ref = p.base == "auto" ? field_for_dimension(k) : p.base;
    const CatalogLattice base = resolve_lattice(ref);
    CodeParams cp;
    cp.R = p.R;
    cp.R_prime = p.R_prime;
    cp.P = p.P;
    cp.power_backoff = p.power_backoff;
    const WiretapCode code =
        build_code(base.lattice, cp, base.matrix ? &*base.matrix : nullptr);
    if (code.k != k)
      throw InvalidSpec("lattice " + ref + " does not have k = " + std::to_string(k));
    const WiretapEncoder enc(code);
    const double sigma_b2 = p.P / db_to_linear(p.snr_b_db);
    const double sigma_e2 = p.P / db_to_linear(p.snr_e_db);
    const auto hb = static_blocks(k, code.n, code.n, p.gain_b);
    const auto he = static_blocks(k, code.n, code.n, p.gain_e);

    SimulateRow row{};
    row.seed = p.seed;
    row.k = k;
    row.base = ref;
    row.snr_b_db = p.snr_b_db;
    row.snr_e_db = p.snr_e_db;
    row.R = code.R;
    row.R_prime = code.R_prime;
    row.messages = code.messages();
    const ErrorProbability pe = error_prob_mc(
        enc, hb, sigma_b2, p.trials, derive_seed(p.seed, kErrorStream, k), p.threads);
    row.p_e_hat = pe.p_e_hat;
    row.p_e_se = pe.std_error;
    row.union_bound = pe.union_bound;
    const SecrecyCheck sc = secrecy_threshold_check(code, he, sigma_e2);
    row.epsilon_k = sc.epsilon_k;
    row.leakage_bound = sc.leakage_bound;
    row.condition_met = sc.condition_met;
    row.v_hat = std::numeric_limits<double>::quiet_NaN();
    if (p.leakage_trials > 0 && k <= p.leakage_max_k && code.dim_complex() <= 2)
      row.v_hat = leakage_estimate(enc, he, sigma_e2, p.leakage_trials,
                                   derive_seed(p.seed, kLeakStream, k), p.threads)
                      .v_hat;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace latsec
