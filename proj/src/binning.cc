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

#include "latsec/binning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <boost/math/distributions/chi_squared.hpp>

#include "latsec/errors.h"
#include "latsec/parallel.h"

namespace latsec {

GaussianBinning::GaussianBinning(const GaussianSpec& reference, int k, int bins)
    : k_(k), bins_(bins) {
  if (k < 1 || bins < 1) throw InvalidSpec("binning needs k >= 1 and bins >= 1");
  const double log_cells = 2.0 * k * std::log(static_cast<double>(bins));
  if (log_cells > std::log(1e8)) throw InvalidSpec("too many binning cells");
  cells_ = 1;
  for (int i = 0; i < 2 * k; ++i) cells_ *= static_cast<std::size_t>(bins);
  white_ = reference.whitening(k);
  center_ = reference.center(k);
}

std::size_t GaussianBinning::cell(const ComplexVector& z) const {
  const RealVector y = to_real(white_ * (z - center_));
  std::size_t index = 0;
  for (int j = static_cast<int>(y.size()) - 1; j >= 0; --j) {
    // Each whitened real coordinate is N(0, 1/2).
    const double u = 0.5 * std::erfc(-y(j));
    const int b = std::clamp(static_cast<int>(u * bins_), 0, bins_ - 1);
    index = index * bins_ + b;
  }
  return index;
}

int default_bins(int k) {
  if (k == 1) return 64;
  if (k == 2) return 16;
  throw InvalidSpec("binned L1 estimation supports k <= 2");
}

double binomial_mean_abs_deviation(uint64_t n, double q) {
  if (n == 0 || q <= 0.0 || q >= 1.0) return 0.0;
  const double nd = static_cast<double>(n);
  const double nu = std::floor(nd * q) + 1.0;
  if (nu > nd) return 0.0;
  const double log_mad = std::log(2.0 * nu) + std::lgamma(nd + 1.0) -
                         std::lgamma(nu + 1.0) - std::lgamma(nd - nu + 1.0) +
                         nu * std::log(q) + (nd - nu + 1.0) * std::log1p(-q);
  return std::exp(log_mad);
}

namespace {

double raw_l1(const std::vector<uint64_t>& counts, double total, double q) {
  double s = 0.0;
  for (uint64_t c : counts) s += std::abs(c / total - q);
  return s;
}

}  // namespace

L1Estimate l1_to_uniform(const std::vector<uint64_t>& counts, uint64_t seed,
                         int replicates) {
  L1Estimate out{};
  if (counts.empty()) throw InvalidSpec("no cells");
  uint64_t n = 0;
  for (uint64_t c : counts) n += c;
  if (n == 0) throw InvalidSpec("no samples");
  const double q = 1.0 / static_cast<double>(counts.size());
  out.samples = n;
  out.raw = raw_l1(counts, static_cast<double>(n), q);
  out.null_floor = counts.size() * binomial_mean_abs_deviation(n, q) / n;
  out.corrected = out.raw - out.null_floor;

  Rng rng = make_rng(seed, 0x6c31, 0);
  std::vector<uint64_t> boot(counts.size());
  double sum = 0.0, sum2 = 0.0;
  for (int b = 0; b < replicates; ++b) {
    uint64_t total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      boot[i] = counts[i] == 0 ? 0
                               : std::poisson_distribution<uint64_t>(
                                     static_cast<double>(counts[i]))(rng);
      total += boot[i];
    }
    const double r = raw_l1(boot, static_cast<double>(total), q);
    sum += r;
    sum2 += r * r;
  }
  if (replicates > 1) {
    const double mean = sum / replicates;
    out.std_error =
        std::sqrt(std::max(0.0, (sum2 - replicates * mean * mean) /
                                    (replicates - 1)));
  }
  return out;
}

double l1_between(const std::vector<uint64_t>& a,
                  const std::vector<uint64_t>& b) {
  if (a.size() != b.size()) throw InvalidSpec("histogram sizes differ");
  double na = 0, nb = 0;
  for (uint64_t c : a) na += c;
  for (uint64_t c : b) nb += c;
  if (na == 0 || nb == 0) throw InvalidSpec("empty histogram");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] / na - b[i] / nb);
  return s;
}

ChiSquare chi_square(const std::vector<uint64_t>& observed,
                     const std::vector<double>& probs, double min_expected) {
  if (observed.size() != probs.size() && observed.size() != probs.size() + 1)
    throw InvalidSpec("observed and probability sizes differ");
  double n = 0;
  for (uint64_t c : observed) n += c;
  double pooled_obs = observed.size() > probs.size() ? observed.back() : 0.0;
  double covered = 0.0;
  for (double p : probs) covered += p;
  double pooled_exp = n * std::max(0.0, 1.0 - covered);
  double stat = 0.0;
  int used = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double e = n * probs[i];
    if (e < min_expected) {
      pooled_obs += observed[i];
      pooled_exp += e;
      continue;
    }
    const double d = observed[i] - e;
    stat += d * d / e;
    ++used;
  }
  if (pooled_exp > 0) {
    const double d = pooled_obs - pooled_exp;
    stat += d * d / pooled_exp;
    ++used;
  } else if (pooled_obs > 0) {
    return {std::numeric_limits<double>::infinity(), std::max(used - 1, 1), 0.0};
  }
  ChiSquare out{stat, std::max(used - 1, 1), 1.0};
  boost::math::chi_squared dist(out.dof);
  out.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  return out;
}

}  // namespace latsec
