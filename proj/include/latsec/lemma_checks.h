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

#ifndef LATSEC_LEMMA_CHECKS_H_
#define LATSEC_LEMMA_CHECKS_H_

#include <cstdint>
#include <vector>

#include "latsec/binning.h"
#include "latsec/gaussian.h"
#include "latsec/lattice.h"
#include "latsec/types.h"

namespace latsec {

struct MixtureCheck {
  L1Estimate l1;   // binned distance of X1 + X2 to f_{sqrt(Sigma1 + Sigma2)}
  double epsilon;  // flatness of lat for Sigma^{-1} = Sigma1^{-1} + Sigma2^{-1}
  double bound;    // 4 epsilon
};

// X1 ~ D_{lat + shift, sqrt(Sigma1)}, X2 ~ f_{sqrt(Sigma2)}; estimates the L1
// distance between X1 + X2 and the continuous Gaussian with covariance
// Sigma1 + Sigma2. Throws NotSmoothEnough when epsilon > 1/2.
MixtureCheck regev_mixture_check(const Lattice& lat, const ComplexVector& shift,
                                 const ComplexMatrix& sigma1,
                                 const ComplexMatrix& sigma2, uint64_t trials,
                                 uint64_t seed, int bins = 0, int threads = 0);

// Samples X ~ D_{lat + shift, sqrt(Sigma)}, maps them through A and tests the
// frequencies against D_{A(lat + shift), sqrt(A Sigma A^H)} built
// independently on the transformed lattice.
ChiSquare linear_transform_check(const Lattice& lat, const ComplexVector& shift,
                                 const ComplexMatrix& sigma,
                                 const ComplexMatrix& a, uint64_t trials,
                                 uint64_t seed, int threads = 0);

struct MgfCheck {
  double epsilon;
  double worst_ratio;  // max over t of E[exp(Re t^H A x)] / bound
  std::vector<double> ratios;
};

// Exact E[exp(Re(t^H A x))] for x ~ D_{lat + shift, sigma} against
// ((1 + eps)/(1 - eps)) exp(sigma^2 |A^H t|^2 / 4).
MgfCheck subgaussian_mgf_check(const Lattice& lat, const ComplexVector& shift,
                               double sigma, const ComplexMatrix& a,
                               const std::vector<ComplexVector>& t_vectors);

// Log of sum over x in lat + shift of exp(-|W (x - center)|^2 + Re(t^H x)),
// evaluated by enumeration with a certified-negligible tail; used by the
// moment checks.
double log_tilted_coset_sum(const Lattice& lat, const ComplexVector& shift,
                            const ComplexMatrix& whitening,
                            const ComplexVector& center,
                            const ComplexVector& tilt);

}  // namespace latsec

#endif  // LATSEC_LEMMA_CHECKS_H_
