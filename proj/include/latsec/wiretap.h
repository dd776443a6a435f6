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

#ifndef LATSEC_WIRETAP_H_
#define LATSEC_WIRETAP_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "latsec/lattice.h"
#include "latsec/matrix_lattice.h"
#include "latsec/parallel.h"
#include "latsec/sampler.h"
#include "latsec/types.h"

namespace latsec {

struct CodeParams {
  double R = 0.0;        // confidential rate, nats per complex channel use
  double R_prime = 0.0;  // auxiliary rate
  double P = 1.0;
  double power_backoff = 0.0;  // sigma_s^2 = P (1 - backoff) / n
  double theta_t = 0.1;        // t of theta_t = (pi - t)/pi
  // Nesting scalar s with Lambda_e = s Lambda_b. Unset: the smallest real
  // or Gaussian integer whose index matches R.
  std::optional<Complex> nesting_scalar;
};

// Nested pair Lambda_e = s Lambda_b over a common base lattice.
struct WiretapCode {
  Lattice base = Lattice::integer(1);
  std::optional<MatrixLattice> matrix_base;
  int n = 1;  // block size (1 for single antenna)
  int k = 1;  // number of blocks (complex dimension for n = 1)
  Lattice lattice_b = Lattice::integer(1);
  Lattice lattice_e = Lattice::integer(1);
  double alpha_b = 0.0;
  double alpha_e = 0.0;
  Complex s;
  double R = 0.0;
  double R_prime = 0.0;
  double P = 1.0;
  double sigma_s = 1.0;
  double theta_t = 0.1;
  IntMatrix nesting;                 // lattice_e.basis() = lattice_b.basis() * nesting
  std::vector<IntVector> leaders;    // coefficients in lattice_b.basis()
  std::vector<ComplexVector> leader_points;
  std::map<std::vector<int64_t>, std::size_t> leader_index;

  std::size_t messages() const { return leaders.size(); }
  int dim_complex() const { return lattice_b.dim_complex(); }
};

// Ratio of the nesting index to e^{nkR}; R = 2 n ln|s|.
double nesting_rate(Complex s, int n);

// Scales the base to V(Lambda_e) = (pi e sigma_s^2)^{n^2 k} / e^{nkR'} and
// nests Lambda_e = s Lambda_b. Throws NestingError (with the nearest
// feasible R) when no admissible s realises R.
WiretapCode build_code(const Lattice& base, const CodeParams& params,
                       const MatrixLattice* matrix_base = nullptr);

// Message carried by a point of Lambda_b (reduction modulo Lambda_e).
std::size_t coset_index(const WiretapCode& code, const ComplexVector& x);
// Same, from coefficients in lattice_b.basis().
std::size_t coset_index_coeffs(const WiretapCode& code, IntVector u);

// x ~ D_{Lambda_e + lambda_m, sigma_s}.
class WiretapEncoder {
 public:
  explicit WiretapEncoder(const WiretapCode& code);
  const WiretapCode& code() const { return code_; }
  ComplexVector encode(std::size_t m, Rng& rng) const;
  const DiscreteGaussianSampler& sampler(std::size_t m) const {
    return *samplers_.at(m);
  }

 private:
  const WiretapCode& code_;
  std::vector<std::unique_ptr<DiscreteGaussianSampler>> samplers_;
};

// Power and auxiliary-entropy bounds from the flatness of Lambda_e at
// sqrt(theta_t) sigma_s.
struct PowerEntropyBounds {
  double epsilon;      // flatness of Lambda_e at sqrt(theta_t) sigma_s
  double power_bound;  // |E|x|^2 - N sigma_s^2| <= this (infinite if eps >= 1)
  double nu;           // |H(M')/k - R'| <= nu
};
PowerEntropyBounds power_entropy_bounds(const WiretapCode& code);

// Entropy (nats per block) of the truncated discrete Gaussian of message m.
double auxiliary_entropy(const WiretapEncoder& enc, std::size_t m);

// 8 n^2 k eps R - 8 eps ln(8 eps); infinite when 8 eps > 1/e.
double leakage_bound(double eps, int n, int k, double R);

struct SecrecyCheck {
  double epsilon_k;      // flatness of the whitened faded Lambda_e
  double leakage_bound;  // from epsilon_k
  double c_bar_e;        // (1/k) sum ln det(I + rho_e H_i H_i^H)
  double product_term;   // p(Lambda_e^*)^{1/k} or pdet(Lambda_e^*)^{1/(nk)}
  double condition_lhs;  // must be <= 1
  bool condition_met;
};

// Eve's blocks are n_e x n with n_e >= n; rectangular blocks are reduced to
// their square QR factor first.
SecrecyCheck secrecy_threshold_check(const WiretapCode& code,
                                     const std::vector<ComplexMatrix>& he_blocks,
                                     double sigma_e2, double c = 1.0);

// Flatness of H_e Lambda_e for Sigma^{-1} = (H_e H_e^H)^{-1} / sigma_s^2 +
// I / sigma_e^2, after the square reduction of each block.
double eve_flatness(const WiretapCode& code,
                    const std::vector<ComplexMatrix>& he_blocks, double sigma_e2);

// The N x N matrix acting on the vectorized codeword.
ComplexMatrix effective_channel(const std::vector<ComplexMatrix>& blocks,
                                int n);

struct CompoundCheck {
  double stat_b;
  double stat_e;
  bool static_b;  // every block equal
  bool static_e;
  bool compound_b;  // static and ln det(I + rho_b H H^H) >= C_b
  bool compound_e;
  bool varying_b;  // block average >= C_b
  bool varying_e;
};

CompoundCheck compound_sets_check(const std::vector<ComplexMatrix>& hb,
                                  const std::vector<ComplexMatrix>& he,
                                  double c_b, double c_e, double rho_b,
                                  double rho_e);

// (1/k) sum ln det(I + rho H_i H_i^H).
double log_det_statistic(const std::vector<ComplexMatrix>& blocks, double rho);

}  // namespace latsec

#endif  // LATSEC_WIRETAP_H_
