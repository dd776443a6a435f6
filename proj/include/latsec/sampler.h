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

#ifndef LATSEC_SAMPLER_H_
#define LATSEC_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latsec/gaussian.h"
#include "latsec/lattice.h"
#include "latsec/parallel.h"
#include "latsec/types.h"

namespace latsec {

struct SamplerOptions {
  enum class Method { kAuto, kTable, kRejection };
  // Initial truncation radius in units of c sqrt(n); it is enlarged until the
  // certified truncated mass is below mass_tol.
  double truncation_radius_mult = 1.5;
  double mass_tol = 1e-12;
  // kAuto switches to rejection sampling above this many support points.
  std::size_t max_table_points = 200'000;
  Method method = Method::kAuto;
};

// Discrete Gaussian D_{lat + shift, spec}: mass proportional to the density
// of `spec` on the coset lat + shift.
//
// Table mode enumerates a truncated support with normalized weights and
// samples categorically. Rejection mode runs a nearest-plane sampler over an
// LLL-reduced whitened basis and corrects it to the exact distribution by
// rejection; it is used when the support is too large to tabulate.
class DiscreteGaussianSampler {
 public:
  DiscreteGaussianSampler(const Lattice& lat, const ComplexVector& shift,
                          const GaussianSpec& spec, SamplerOptions opts = {});

  const Lattice& lattice() const { return lattice_; }
  const ComplexVector& shift() const { return shift_; }
  bool is_table() const { return table_; }

  // Coefficients u of the sample x = B u + shift.
  IntVector sample_coeffs(Rng& rng) const;
  ComplexVector sample(Rng& rng) const;
  ComplexVector point(const IntVector& coeffs) const;

  // Table mode only.
  std::size_t support_size() const { return weights_.size(); }
  IntVector support_coeffs(std::size_t i) const;
  ComplexVector support_point(std::size_t i) const;
  const std::vector<double>& weights() const { return weights_; }
  std::size_t sample_index(Rng& rng) const;

  // Certified bound on the probability mass left out by truncation.
  double truncated_mass_bound() const { return mass_bound_; }
  double truncation_c() const { return trunc_c_; }

 private:
  void build_table(const SamplerOptions& opts);
  void build_rejection();
  IntVector sample_rejection(Rng& rng) const;

  Lattice lattice_;
  ComplexVector shift_;
  RealMatrix white_basis_;  // whitened basis W B
  RealVector target_;       // W (center - shift)
  bool table_ = false;
  double mass_bound_ = 0.0;
  double trunc_c_ = 0.0;

  // Table state.
  int dim_ = 0;
  std::vector<int64_t> coeffs_;  // support, dim_ entries per point
  std::vector<double> weights_;
  std::vector<double> cumulative_;

  // Rejection state.
  IntMatrix transform_;
  RealMatrix r_;
  RealVector target_q_;
  std::vector<double> log_rho_zero_;
};

// Weights exp(-(z-c)^2/s^2) over integers z: log of their sum.
double log_rho_shifted_integers(double s, double c);

}  // namespace latsec

#endif  // LATSEC_SAMPLER_H_
