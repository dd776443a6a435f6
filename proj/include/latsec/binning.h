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

#ifndef LATSEC_BINNING_H_
#define LATSEC_BINNING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latsec/gaussian.h"
#include "latsec/types.h"

namespace latsec {

// Equal-mass product cells for a reference Gaussian: each whitened real
// coordinate is mapped through its normal CDF and cut into `bins` slices.
class GaussianBinning {
 public:
  GaussianBinning(const GaussianSpec& reference, int k, int bins);

  int k() const { return k_; }
  int bins() const { return bins_; }
  std::size_t cells() const { return cells_; }
  std::size_t cell(const ComplexVector& z) const;

 private:
  int k_;
  int bins_;
  std::size_t cells_;
  ComplexMatrix white_;
  ComplexVector center_;
};

// Bins per real dimension used by the L1 estimators: 64 at k = 1, 16 at k = 2.
int default_bins(int k);

// E|X - n q| for X ~ Binomial(n, q), in closed form.
double binomial_mean_abs_deviation(uint64_t n, double q);

struct L1Estimate {
  double raw;         // sum over cells |p_hat - q|
  double null_floor;  // expected raw value when the samples follow q exactly
  double corrected;   // raw - null_floor
  double std_error;   // Poisson bootstrap standard error of raw
  uint64_t samples;
};

// Binned L1 distance between empirical counts and equal cell masses.
L1Estimate l1_to_uniform(const std::vector<uint64_t>& counts, uint64_t seed,
                         int replicates = 100);

// Binned L1 distance between two empirical histograms.
double l1_between(const std::vector<uint64_t>& a,
                  const std::vector<uint64_t>& b);

struct ChiSquare {
  double statistic;
  int dof;
  double p_value;
};

// Pearson test of observed counts against cell probabilities; cells with
// expected count below min_expected are pooled, together with any mass
// missing from `probs`.
ChiSquare chi_square(const std::vector<uint64_t>& observed,
                     const std::vector<double>& probs,
                     double min_expected = 5.0);

}  // namespace latsec

#endif  // LATSEC_BINNING_H_
