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

#ifndef LATSEC_EXPERIMENTS_H_
#define LATSEC_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "latsec/binning.h"
#include "latsec/channel.h"
#include "latsec/parallel.h"
#include "latsec/types.h"
#include "latsec/wiretap.h"

namespace latsec {

// Channel blocks that are a scalar multiple of the identity.
std::vector<ComplexMatrix> static_blocks(int k, int n_rx, int n_tx, Complex gain);

struct ErrorProbability {
  uint64_t trials = 0;
  uint64_t errors = 0;
  double p_e_hat = 0.0;
  double std_error = 0.0;
  double epsilon = 0.0;      // flatness of Lambda_e at sigma_s
  double theta = 0.0;        // sum over R lattice_b \ 0 of exp(-|x|^2 / (4 sigma_b^2))
  double union_bound = 0.0;  // (1 + eps)/(1 - eps) * theta (tail included)
  double lambda1 = 0.0;      // of R lattice_b
  double tau = 0.0;          // 1 / sqrt(4 pi sigma_b^2)
  double c_star = 0.0;       // largest c with tau > sqrt(dim) c / lambda1
  bool tau_condition = false;       // c_star > 1/sqrt(2 pi)
  double banaszczyk_bound = 0.0;    // (1 + eps)/(1 - eps) C^d / (1 - C^d)
  bool within_union_bound = false;  // p_e_hat <= union_bound + 3 SE
};

// Encode a uniform message, pass it through y = H x + w with w ~
// CN(0, sigma_b^2 I), decode with the MAP decoder and count coset errors.
ErrorProbability error_prob_mc(const WiretapEncoder& enc,
                               const std::vector<ComplexMatrix>& hb_blocks,
                               double sigma_b2, uint64_t trials, uint64_t seed,
                               int threads = 0);

struct EveObservation {
  ComplexVector z;            // H x + w
  ComplexVector z_reduced;    // first n rows of Q_i^H Y_i in every block
  ComplexVector z_discarded;  // remaining n_e - n rows
};

EveObservation eve_observe(const WiretapEncoder& enc, std::size_t m,
                           const std::vector<ComplexMatrix>& he_blocks,
                           double sigma_e2, Rng& rng);

struct PermutationTest {
  double statistic;
  double null_mean;
  double null_sd;
  double z_score;
};

// Between-message spread of the discarded component against a label
// permutation null.
PermutationTest discarded_independence_test(
    const WiretapEncoder& enc, const std::vector<ComplexMatrix>& he_blocks,
    double sigma_e2, uint64_t trials, uint64_t seed, int permutations = 200);

struct LeakageEstimate {
  std::vector<L1Estimate> per_message;
  std::size_t worst_message = 0;
  double v_hat = 0.0;      // max over m of the corrected distance
  double v_raw = 0.0;      // raw distance of the worst message
  double std_error = 0.0;  // bootstrap SE of the worst message
  double pairwise_max = 0.0;  // max over m != m' of the binned distance
  double epsilon_k = 0.0;
  double analytic_bound = 0.0;  // 4 epsilon_k
  bool smooth = true;           // epsilon_k <= 1/2; the bound is vacuous otherwise
  int bins = 0;
};

// Binned distance between z | m and f_{sqrt(Sigma_0)}, Sigma_0 =
// sigma_s^2 H H^H + sigma_e^2 I, for every message (complex dimension <= 2).
LeakageEstimate leakage_estimate(const WiretapEncoder& enc,
                                 const std::vector<ComplexMatrix>& he_blocks,
                                 double sigma_e2, uint64_t trials_per_message,
                                 uint64_t seed, int threads = 0, int bins = 0);

struct SimulateParams {
  std::vector<int> k_list{1, 2};
  std::string base = "auto";  // lattice reference; "auto" picks a field per k
  double snr_b_db = 20.0;
  double snr_e_db = 0.0;
  double R = 2.0 * 0.6931471805599453;  // s = 2
  double R_prime = 4.0;
  double P = 1.0;
  double power_backoff = 0.0;
  double gain_b = 1.0;
  double gain_e = 1.0;
  uint64_t trials = 10'000;
  uint64_t leakage_trials = 0;  // per message; 0 skips the estimate
  int leakage_max_k = 2;
  uint64_t seed = 1;
  int threads = 0;
};

struct SimulateRow {
  uint64_t seed;
  int k;
  std::string base;
  double snr_b_db;
  double snr_e_db;
  double R;
  double R_prime;
  std::size_t messages;
  double p_e_hat;
  double p_e_se;
  double union_bound;
  double epsilon_k;
  double leakage_bound;
  double v_hat;  // NaN when not estimated
  bool condition_met;
};

std::vector<SimulateRow> simulate(const SimulateParams& p);

}  // namespace latsec

#endif  // LATSEC_EXPERIMENTS_H_
