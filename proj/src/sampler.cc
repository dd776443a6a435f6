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

#include "latsec/sampler.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "latsec/enumeration.h"
#include "latsec/errors.h"

namespace latsec {
namespace {

// Below this width the 1-d sampler tabulates a window; above it, it rounds
// a continuous Gaussian and corrects by rejection.
constexpr double kWindowWidthLimit = 4.0;
constexpr int kMaxRejections = 10'000'000;

double log_ball_volume(int n, double radius) {
  return 0.5 * n * std::log(M_PI) + n * std::log(radius) -
         std::lgamma(0.5 * n + 1.0);
}

// P(round(Y) = c + d) for Y - c ~ N(0, s^2/2).
double rounded_normal_mass(double d, double s) {
  const double lo = (d - 0.5) / s, hi = (d + 0.5) / s;
  if (lo > 0) return 0.5 * (std::erfc(lo) - std::erfc(hi));
  if (hi < 0) return 0.5 * (std::erfc(-hi) - std::erfc(-lo));
  return 0.5 * (std::erf(hi) - std::erf(lo));
}

// Integer z with probability proportional to exp(-(z-c)^2/s^2).
double sample_integer_gaussian(double c, double s, Rng& rng) {
  if (s < kWindowWidthLimit) {
    const int half = static_cast<int>(std::ceil(9.0 * s)) + 1;
    const double base = std::floor(c) - half;
    const int count = 2 * half + 2;
    std::array<double, 128> w{};
    double dmin2 = std::numeric_limits<double>::infinity();
    for (int t = 0; t < count; ++t) {
      const double d = base + t - c;
      dmin2 = std::min(dmin2, d * d);
    }
    double total = 0.0;
    for (int t = 0; t < count; ++t) {
      const double d = base + t - c;
      total += std::exp(-(d * d - dmin2) / (s * s));
      w[t] = total;
    }
    const double u = uniform01(rng) * total;
    for (int t = 0; t < count; ++t)
      if (u < w[t]) return base + t;
    return base + count - 1;
  }
  const double log_m = std::log(s * std::sqrt(M_PI)) + 1.0 / (12.0 * s * s);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const double y = c + s / std::sqrt(2.0) * standard_normal(rng);
    const double z = std::round(y);
    const double d = z - c;
    const double q = rounded_normal_mass(d, s);
    if (!(q > 0)) continue;
    const double log_acc = -d * d / (s * s) - log_m - std::log(q);
    if (std::log(uniform01(rng)) < log_acc) return z;
  }
  throw SamplerError("1-d integer sampler did not accept");
}

}  // namespace

double log_rho_shifted_integers(double s, double c) {
  if (s >= 1.0) {
    // Poisson summation; converges after a handful of terms.
    double sum = 1.0;
    for (int k = 1;; ++k) {
      const double e = M_PI * M_PI * s * s * k * k;
      if (e > 745.0) break;
      sum += 2.0 * std::exp(-e) * std::cos(2.0 * M_PI * k * c);
    }
    return std::log(s * std::sqrt(M_PI)) + std::log(sum);
  }
  const int half = static_cast<int>(std::ceil(9.0 * s)) + 1;
  const double base = std::floor(c) - half;
  double dmin2 = std::numeric_limits<double>::infinity();
  for (int t = 0; t < 2 * half + 2; ++t) {
    const double d = base + t - c;
    dmin2 = std::min(dmin2, d * d);
  }
  double sum = 0.0;
  for (int t = 0; t < 2 * half + 2; ++t) {
    const double d = base + t - c;
    sum += std::exp(-(d * d - dmin2) / (s * s));
  }
  return -dmin2 / (s * s) + std::log(sum);
}

DiscreteGaussianSampler::DiscreteGaussianSampler(const Lattice& lat,
                                                 const ComplexVector& shift,
                                                 const GaussianSpec& spec,
                                                 SamplerOptions opts)
    : lattice_(lat), shift_(shift) {
  const int k = lat.dim_complex();
  if (shift_.size() == 0) shift_ = ComplexVector::Zero(k);
  if (shift_.size() != k) throw InvalidSpec("shift has the wrong size");
  const RealMatrix w = real_form(spec.whitening(k));
  white_basis_ = w * lat.basis();
  target_ = w * to_real(spec.center(k) - shift_);
  dim_ = lat.dim_real();

  bool table = opts.method == SamplerOptions::Method::kTable;
  if (opts.method == SamplerOptions::Method::kAuto) {
    const double radius = opts.truncation_radius_mult *
                          std::sqrt(dim_ * M_PI);
    const double log_count = log_ball_volume(dim_, radius) -
                             std::log(std::abs(white_basis_.determinant()));
    table = log_count <= std::log(static_cast<double>(opts.max_table_points));
  }
  if (table)
    build_table(opts);
  else
    build_rejection();
}

void DiscreteGaussianSampler::build_table(const SamplerOptions& opts) {
  table_ = true;
  Enumerator en(white_basis_);
  const RealVector zero = RealVector::Zero(dim_);
  double c = opts.truncation_radius_mult;
  for (int attempt = 0; attempt < 40; ++attempt, c *= 1.15) {
    if (c <= 1.0 / std::sqrt(2.0 * M_PI)) continue;
    const double r2 = M_PI * c * c * dim_;
    std::vector<int64_t> coeffs;
    std::vector<double> d2s;
    en.for_each(target_, r2, [&](const IntVector& u, double d2) {
      coeffs.insert(coeffs.end(), u.data(), u.data() + u.size());
      d2s.push_back(d2);
    });
    if (d2s.empty()) continue;
    double rho0 = 0.0;
    en.for_each(zero, r2, [&](const IntVector&, double d2) {
      rho0 += std::exp(-d2);
    });
    const double dmin = *std::min_element(d2s.begin(), d2s.end());
    double total = 0.0;
    for (double d2 : d2s) total += std::exp(-(d2 - dmin));
    // Banaszczyk: the coset mass outside the ball is below
    // 2 C^n rho(L) and rho(L) < rho_in(L) / (1 - C^n).
    const double cn = std::pow(banaszczyk_constant(c), dim_);
    const double log_bound = std::log(2.0 * cn / ((1.0 - cn) * (1.0 - cn))) +
                             std::log(rho0) + dmin - std::log(total);
    const double bound = std::exp(log_bound);
    if (!(bound <= opts.mass_tol)) continue;
    coeffs_ = std::move(coeffs);
    weights_.resize(d2s.size());
    cumulative_.resize(d2s.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < d2s.size(); ++i) {
      weights_[i] = std::exp(-(d2s[i] - dmin)) / total;
      acc += weights_[i];
      cumulative_[i] = acc;
    }
    cumulative_.back() = 1.0;
    mass_bound_ = bound;
    trunc_c_ = c;
    return;
  }
  throw SamplerError("could not certify the truncation of the sampler table");
}

void DiscreteGaussianSampler::build_rejection() {
  table_ = false;
  const Reduction red = lll_reduce(white_basis_);
  Eigen::HouseholderQR<RealMatrix> qr(red.basis);
  RealMatrix q = qr.householderQ();
  r_ = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim_; ++i) {
    if (r_(i, i) < 0) {
      r_.row(i) *= -1.0;
      q.col(i) *= -1.0;
    }
  }
  transform_ = red.transform;
  target_q_ = q.transpose() * target_;
  log_rho_zero_.resize(dim_);
  for (int i = 0; i < dim_; ++i)
    log_rho_zero_[i] = log_rho_shifted_integers(1.0 / r_(i, i), 0.0);
  // Only the tabulated 1-d windows truncate: each drops less than e^{-81}
  // of its mass.
  mass_bound_ = dim_ * 1e-35;
  trunc_c_ = std::numeric_limits<double>::infinity();
}

IntVector DiscreteGaussianSampler::sample_rejection(Rng& rng) const {
  std::vector<double> w(dim_, 0.0);
  IntVector wi(dim_);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    double log_acc = 0.0;
    for (int i = dim_ - 1; i >= 0; --i) {
      double t = target_q_(i);
      for (int j = i + 1; j < dim_; ++j) t -= r_(i, j) * w[j];
      const double s = 1.0 / r_(i, i);
      const double c = t / r_(i, i);
      w[i] = sample_integer_gaussian(c, s, rng);
      log_acc += log_rho_shifted_integers(s, c) - log_rho_zero_[i];
    }
    if (log_acc >= 0.0 || std::log(uniform01(rng)) < log_acc) {
      for (int i = 0; i < dim_; ++i) wi(i) = static_cast<int64_t>(w[i]);
      return transform_ * wi;
    }
  }
  throw SamplerError("rejection sampler did not accept");
}

std::size_t DiscreteGaussianSampler::sample_index(Rng& rng) const {
  if (!table_) throw SamplerError("sample_index needs table mode");
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1);
}

IntVector DiscreteGaussianSampler::support_coeffs(std::size_t i) const {
  IntVector u(dim_);
  for (int t = 0; t < dim_; ++t) u(t) = coeffs_[i * dim_ + t];
  return u;
}

ComplexVector DiscreteGaussianSampler::point(const IntVector& coeffs) const {
  return to_complex(lattice_.point(coeffs)) + shift_;
}

ComplexVector DiscreteGaussianSampler::support_point(std::size_t i) const {
  return point(support_coeffs(i));
}

IntVector DiscreteGaussianSampler::sample_coeffs(Rng& rng) const {
  if (table_) return support_coeffs(sample_index(rng));
  return sample_rejection(rng);
}

ComplexVector DiscreteGaussianSampler::sample(Rng& rng) const {
  return point(sample_coeffs(rng));
}

}  // namespace latsec
