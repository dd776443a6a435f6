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

#include "latsec/gaussian.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "latsec/errors.h"

namespace latsec {
namespace {

const double kMinC = 1.0 / std::sqrt(2.0 * M_PI);

// Smallest c (> 1/sqrt(2 pi)) with C(c)^n <= target.
double c_for_target(int n, double target) {
  double lo = kMinC, hi = kMinC + 1.0;
  while (n * std::log(banaszczyk_constant(hi)) > std::log(target)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (n * std::log(banaszczyk_constant(mid)) > std::log(target))
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

}  // namespace

GaussianSpec GaussianSpec::isotropic(double sigma, ComplexVector center) {
  if (!(sigma > 0) || !std::isfinite(sigma))
    throw InvalidSpec("sigma must be positive and finite");
  GaussianSpec g;
  g.sigma_ = sigma;
  g.center_ = std::move(center);
  return g;
}

GaussianSpec GaussianSpec::correlated(ComplexMatrix covariance,
                                      ComplexVector center) {
  check_positive_definite(covariance);
  if (center.size() != 0 && center.size() != covariance.rows())
    throw InvalidSpec("center and covariance sizes differ");
  GaussianSpec g;
  g.covariance_ = std::move(covariance);
  g.center_ = std::move(center);
  return g;
}

double GaussianSpec::sigma() const {
  if (!is_isotropic()) throw InvalidSpec("spec is correlated");
  return sigma_;
}

ComplexMatrix GaussianSpec::covariance(int k) const {
  if (covariance_) {
    if (covariance_->rows() != k) throw InvalidSpec("covariance size mismatch");
    return *covariance_;
  }
  return ComplexMatrix::Identity(k, k) * (sigma_ * sigma_);
}

ComplexVector GaussianSpec::center(int k) const {
  if (center_.size() == 0) return ComplexVector::Zero(k);
  if (center_.size() != k) throw InvalidSpec("center size mismatch");
  return center_;
}

ComplexMatrix GaussianSpec::whitening(int k) const {
  if (covariance_) return hermitian_inv_sqrt(covariance(k));
  return ComplexMatrix::Identity(k, k) / sigma_;
}

double GaussianSpec::log_density(const ComplexVector& z) const {
  const int k = static_cast<int>(z.size());
  const ComplexVector w = whitening(k) * (z - center(k));
  const double logdet = covariance_
                            ? std::log(covariance(k).determinant().real())
                            : 2.0 * k * std::log(sigma_);
  return -w.squaredNorm() - k * std::log(M_PI) - logdet;
}

double banaszczyk_constant(double c) {
  return c * std::sqrt(2.0 * M_PI * M_E) * std::exp(-M_PI * c * c);
}

ThetaSum theta_sum(const Lattice& lat, double a, double tail_tol) {
  if (!(a > 0)) throw InvalidSpec("theta_sum needs a > 0");
  tail_tol = std::max(tail_tol, 1e-300);
  const int n = lat.dim_real();
  const double tau = std::sqrt(a / M_PI);
  Enumerator en(lat.basis());
  const RealVector zero = RealVector::Zero(n);
  double inner = 0.0;  // running estimate of the nonzero sum inside the ball
  for (int attempt = 0; attempt < 8; ++attempt) {
    // Tail beyond radius c sqrt(n)/tau is below C^n/(1-C^n) (1 + inner).
    const double target = tail_tol / (1.0 + inner) / (1.0 + tail_tol);
    const double c = c_for_target(n, target);
    const double radius = c * std::sqrt(static_cast<double>(n)) / tau;
    double sum = 0.0;
    uint64_t points = 0;
    try {
      points = en.for_each(zero, radius * radius, [&](const IntVector& u, double d2) {
        if (u.isZero()) return;
        sum += std::exp(-a * d2);
      });
    } catch (const EnumerationLimit& e) {
      throw TailToleranceError(std::string("theta sum: ") + e.what());
    }
    const double cn = std::pow(banaszczyk_constant(c), n);
    const double tail = cn / (1.0 - cn) * (1.0 + sum);
    if (tail <= tail_tol) return {sum, tail, radius, points};
    inner = sum;
  }
  throw TailToleranceError("theta sum: tail tolerance not reached");
}

ThetaSum flatness_detail(const Lattice& lat, const GaussianSpec& spec,
                         double tail_tol) {
  if (spec.is_isotropic()) {
    const double s = spec.sigma();
    return theta_sum(dual(lat), M_PI * M_PI * s * s, tail_tol);
  }
  const Lattice white = lat.transformed(spec.whitening(lat.dim_complex()));
  return theta_sum(dual(white), M_PI * M_PI, tail_tol);
}

double flatness_factor(const Lattice& lat, const GaussianSpec& spec,
                       double tail_tol) {
  return flatness_detail(lat, spec, tail_tol).value;
}

double smoothing_parameter(const Lattice& lat, double eps) {
  if (!(eps > 0 && eps < 1)) throw InvalidSpec("eps must lie in (0, 1)");
  const Lattice d = dual(lat);
  const double tol = eps * 1e-13;
  auto g = [&](double s) {
    return theta_sum(d, 0.5 * M_PI * s * s, tol).value;
  };
  const double l1 = min_distance(d).lambda1;
  double lo = 1.0 / l1, hi = 1.0 / l1;
  while (g(hi) > eps) hi *= 2.0;
  while (g(lo) <= eps) lo *= 0.5;
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > eps)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

BanaszczykTail banaszczyk_tail(const Lattice& lat, double tau, double c) {
  const int n = lat.dim_real();
  const double big_c = banaszczyk_constant(c);
  const double cn = std::pow(big_c, n);
  BanaszczykTail out{};
  out.rhs = (c > kMinC && cn < 1.0) ? cn / (1.0 - cn)
                                    : std::numeric_limits<double>::infinity();
  const double l1 = min_distance(lat).lambda1;
  out.applicable = c > kMinC && tau > std::sqrt(static_cast<double>(n)) * c / l1;
  const double tol = std::min(1e-15, std::isfinite(out.rhs) ? out.rhs * 1e-6 : 1e-15);
  const ThetaSum t = theta_sum(lat, M_PI * tau * tau, std::max(tol, 1e-300));
  out.lhs = t.value;
  out.lhs_tail_bound = t.tail_bound;
  out.holds = out.applicable && (out.lhs + out.lhs_tail_bound <= out.rhs);
  return out;
}

}  // namespace latsec
