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

#include "latsec/decoder.h"

#include "latsec/errors.h"

namespace latsec {

MapDecoder::MapDecoder(const WiretapCode& code, const ComplexMatrix& h,
                       double rho)
    : code_(code),
      gdfe_(mmse_gdfe(h, rho)),
      enumerator_(real_form(gdfe_.r) * code.lattice_b.basis()) {
  if (h.cols() != code.dim_complex())
    throw InvalidSpec("channel does not match the code dimension");
}

Decision MapDecoder::decode(const ComplexVector& y) const {
  if (y.size() != gdfe_.q1.rows()) throw InvalidSpec("observation has the wrong size");
  const ComplexVector yp = gdfe_.q1.adjoint() * y;
  auto [u, d2] = enumerator_.closest(to_real(yp));
  return {coset_index_coeffs(code_, u), u, d2};
}

std::size_t decode_map(const WiretapCode& code, const ComplexVector& y,
                       const ComplexMatrix& h, double rho) {
  return MapDecoder(code, h, rho).decode(y).message;
}

}  // namespace latsec
