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

#ifndef LATSEC_CHANNEL_H_
#define LATSEC_CHANNEL_H_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "latsec/parallel.h"
#include "latsec/types.h"

namespace latsec {

// Channel law for k fading blocks of n_rx x n_tx gains.
struct FadingSpec {
  enum class Law { kStatic, kRayleigh, kBlock, kCustom, kAdversarial };
  Law law = Law::kStatic;
  int n_tx = 1;
  int n_rx = 1;
  double noise_var = 1.0;  // sigma^2 per complex dimension
  double snr = 1.0;        // rho
  ComplexMatrix static_value;                // kStatic; empty means identity
  int block_len = 1;                         // kBlock
  Law inner = Law::kRayleigh;                // kBlock: law of each held value
  std::vector<ComplexMatrix> sequence;       // kCustom, repeated cyclically
  // kAdversarial: scalar gains switching between these two values after
  // Pareto(1.5) dwell times, started from the stationary residual law.
  double adversarial_low = 0.0;
  double adversarial_high = std::sqrt(2.0);

  void validate() const;
};

FadingSpec::Law parse_fading_law(const std::string& s);
std::string fading_law_name(FadingSpec::Law law);

struct ChannelRealization {
  std::vector<ComplexMatrix> blocks;
  double statistic;  // (1/k) sum ln det(I + rho H_i^H H_i)
};

ChannelRealization draw_channel(const FadingSpec& spec, int k, Rng& rng);

// ln det(I + rho H^H H).
double log_det_gain(const ComplexMatrix& h, double rho);

// Mean of ln det(I + rho H^H H) under the law: closed form for scalar
// Rayleigh, exact averages for deterministic laws, and a seeded Monte Carlo
// average (2^18 draws) for Rayleigh MIMO.
double ergodic_capacity(const FadingSpec& spec);

struct LlnRow {
  int k;
  double p_hat;    // P{|statistic - C| > delta}
  double k_p_hat;  // k * p_hat
};

std::vector<LlnRow> lln_diagnostic(const FadingSpec& spec,
                                   const std::vector<int>& k_list, double delta,
                                   uint64_t trials, uint64_t seed,
                                   int threads = 0);

// k p_hat strictly decreasing / never decreasing along the rows.
bool strictly_decreasing_trend(const std::vector<LlnRow>& rows);
bool nondecreasing_trend(const std::vector<LlnRow>& rows);

struct MmseGdfe {
  ComplexMatrix r;   // upper triangular, positive real diagonal
  ComplexMatrix q1;  // top block of the thin Q factor
};

// Thin QR of [H; I / sqrt(rho)].
MmseGdfe mmse_gdfe(const ComplexMatrix& h, double rho);

// Square factor R' of a tall H = Q [R'; 0] (identity for square H) and the
// full unitary Q.
struct TallReduction {
  ComplexMatrix r;
  ComplexMatrix q;
};
TallReduction tall_reduction(const ComplexMatrix& h);

}  // namespace latsec

#endif  // LATSEC_CHANNEL_H_
