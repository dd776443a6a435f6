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

#ifndef LATSEC_GAUSSIAN_H_
#define LATSEC_GAUSSIAN_H_

#include <cstdint>
#include <optional>

#include "latsec/lattice.h"
#include "latsec/types.h"

namespace latsec {

// Complex Gaussian f_{sqrt(Sigma), c}(z) = exp(-(z-c)^H Sigma^{-1} (z-c)) /
// (pi^k det Sigma). The scalar form uses Sigma = sigma^2 I, so sigma^2 is the
// variance per complex dimension.
class GaussianSpec {
 public:
  static GaussianSpec isotropic(double sigma, ComplexVector center = {});
  static GaussianSpec correlated(ComplexMatrix covariance,
                                 ComplexVector center = {});

  bool is_isotropic() const { return !covariance_.has_value(); }
  double sigma() const;
  ComplexMatrix covariance(int k) const;
  ComplexVector center(int k) const;
  // Sigma^{-1/2}; the whitened variable has identity covariance.
  ComplexMatrix whitening(int k) const;
  double log_density(const ComplexVector& z) const;

 private:
  GaussianSpec() = default;
  double sigma_ = 0.0;
  std::optional<ComplexMatrix> covariance_;
  ComplexVector center_;
};

// C = c sqrt(2 pi e) exp(-pi c^2).
double banaszczyk_constant(double c);

struct ThetaSum {
  double value;       // sum over enumerated nonzero x of exp(-a |x|^2)
  double tail_bound;  // certified bound on the remaining terms
  double radius;
  uint64_t points;
};

// Sum over x in lat \ {0} of exp(-a |x|^2). The enumeration radius is
// chosen so that the tail beyond it, bounded through Banaszczyk's
// inequality, is at most tail_tol.
ThetaSum theta_sum(const Lattice& lat, double a, double tail_tol);

// Flatness factor via the dual theta sum of the whitened lattice.
ThetaSum flatness_detail(const Lattice& lat, const GaussianSpec& spec,
                         double tail_tol = 1e-15);
double flatness_factor(const Lattice& lat, const GaussianSpec& spec,
                       double tail_tol = 1e-15);

// Smallest s with sum_{y in lat* \ 0} exp(-(pi/2) s^2 |y|^2) <= eps.
double smoothing_parameter(const Lattice& lat, double eps);

struct BanaszczykTail {
  double lhs;
  double lhs_tail_bound;
  double rhs;
  bool applicable;  // tau > sqrt(n) c / lambda_1 and c > 1/sqrt(2 pi)
  bool holds;
};

BanaszczykTail banaszczyk_tail(const Lattice& lat, double tau, double c);

}  // namespace latsec

#endif  // LATSEC_GAUSSIAN_H_
