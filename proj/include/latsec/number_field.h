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

#ifndef LATSEC_NUMBER_FIELD_H_
#define LATSEC_NUMBER_FIELD_H_

#include <cstdint>
#include <string>
#include <vector>

#include "latsec/lattice.h"
#include "latsec/rational.h"
#include "latsec/types.h"

namespace latsec {

// Totally complex field Q[x]/(f) of degree 2k with integral basis
// 1, x, ..., x^{2k-1} (every catalog field is monogenic). Elements are
// exact rational coordinate vectors over that basis.
class NumberFieldCtx {
 public:
  // `poly` lists the coefficients of the monic f from degree 0 upwards.
  // Throws InvalidSpec if f has a real root and ConsistencyError if the
  // computed discriminant differs from `expected_discriminant` (0 skips the
  // comparison).
  NumberFieldCtx(std::string name, std::vector<int64_t> poly,
                 int64_t expected_discriminant = 0);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int k() const { return degree_ / 2; }
  const std::vector<int64_t>& polynomial() const { return poly_; }
  const Rational& discriminant() const { return disc_; }
  // One root per conjugate pair (positive imaginary part, by argument).
  const ComplexVector& roots() const { return roots_; }

  RationalVector one() const;
  RationalVector generator() const;  // x
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  // Matrix of y -> a y in the power basis.
  RationalMatrix multiplication_matrix(const RationalVector& a) const;
  Rational trace(const RationalVector& a) const;
  Rational norm(const RationalVector& a) const;
  // Tr(w_i w_j) over the integral basis.
  const RationalMatrix& trace_form() const { return trace_form_; }

  // psi(a) = (sigma_1(a), ..., sigma_k(a)).
  ComplexVector embed(const RationalVector& a) const;
  // All 2k embeddings, conjugates last.
  ComplexVector embed_all(const RationalVector& a) const;

 private:
  std::string name_;
  std::vector<int64_t> poly_;
  int degree_;
  ComplexVector roots_;
  RationalMatrix trace_form_;
  Rational disc_;
};

// Z-module basis of a fractional ideal, as coordinates over the integral
// basis; norm = |det| of the coordinate matrix.
struct FractionalIdealBasis {
  std::vector<RationalVector> basis;
  Rational norm;
};

// Validates that `basis` spans a full-rank module closed under
// multiplication by O_F; throws ConsistencyError otherwise.
FractionalIdealBasis make_ideal(const NumberFieldCtx& field,
                                std::vector<RationalVector> basis);
FractionalIdealBasis ring_of_integers(const NumberFieldCtx& field);
FractionalIdealBasis principal_ideal(const NumberFieldCtx& field,
                                     const RationalVector& generator);
// Trace dual of O_F: basis T^{-1} of the trace form.
FractionalIdealBasis codifferent_ideal(const NumberFieldCtx& field);

// psi(I). Checks V = 2^{-k} sqrt|d_F| N(I) to 1e-6 relative.
Lattice ideal_lattice(const NumberFieldCtx& field,
                      const FractionalIdealBasis& ideal);
// 2 conj(psi(O_F^vee)); checks that it is the dual of psi(O_F).
Lattice codifferent_lattice(const NumberFieldCtx& field);

}  // namespace latsec

#endif  // LATSEC_NUMBER_FIELD_H_
