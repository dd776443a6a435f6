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

#ifndef LATSEC_DECODER_H_
#define LATSEC_DECODER_H_

#include <cstddef>

#include "latsec/channel.h"
#include "latsec/enumeration.h"
#include "latsec/types.h"
#include "latsec/wiretap.h"

namespace latsec {

struct Decision {
  std::size_t message;
  IntVector coeffs;  // decoded point of lattice_b
  double metric;     // |Q1^H y - R x|^2
};

// MAP decoder for y = H x + w over lattice_b: the MMSE-GDFE front end turns
// argmin (1/rho)|x|^2 + |y - H x|^2 into a closest-point search in R lattice_b.
class MapDecoder {
 public:
  MapDecoder(const WiretapCode& code, const ComplexMatrix& h, double rho);
  Decision decode(const ComplexVector& y) const;
  const MmseGdfe& front_end() const { return gdfe_; }
  // Generator of R lattice_b (real coordinates).
  const RealMatrix& reduced_basis() const { return enumerator_.basis(); }

 private:
  const WiretapCode& code_;
  MmseGdfe gdfe_;
  Enumerator enumerator_;
};

std::size_t decode_map(const WiretapCode& code, const ComplexVector& y,
                       const ComplexMatrix& h, double rho);

}  // namespace latsec

#endif  // LATSEC_DECODER_H_
