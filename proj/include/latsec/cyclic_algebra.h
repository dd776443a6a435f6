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

#ifndef LATSEC_CYCLIC_ALGEBRA_H_
#define LATSEC_CYCLIC_ALGEBRA_H_

#include <string>
#include <vector>

#include "latsec/matrix_lattice.h"
#include "latsec/number_field.h"
#include "latsec/rational.h"
#include "latsec/types.h"

namespace latsec {

// Element of E = F(theta): coefficients (in F) of 1, theta, ..., theta^{n-1}.
using ExtElement = std::vector<RationalVector>;

// Cyclic algebra (E/F, sigma, gamma) = E + uE + ... + u^{n-1}E with
// x u = u sigma(x) and u^n = gamma. Elements a = sum_l u^l x_l are stored as
// flat rational coordinates over the natural order basis u^l theta^j w_i
// (index (l n + j) 2k + i), so integer vectors are exactly the order
// elements.
class CyclicAlgebraCtx {
 public:
  // g: monic minimal polynomial of theta over F, constant term first.
  // sigma_theta: sigma(theta) as an element of E.
  CyclicAlgebraCtx(std::string name, NumberFieldCtx center,
                   std::vector<RationalVector> g, ExtElement sigma_theta,
                   RationalVector gamma);

  const std::string& name() const { return name_; }
  const NumberFieldCtx& center() const { return center_; }
  int n() const { return n_; }
  int k() const { return center_.k(); }
  int dim() const { return n_ * n_ * center_.degree(); }
  const RationalVector& gamma() const { return gamma_; }

  ExtElement ext_zero() const;
  ExtElement ext_from_center(const RationalVector& f) const;
  ExtElement ext_multiply(const ExtElement& a, const ExtElement& b) const;
  ExtElement ext_sigma(const ExtElement& a, int power = 1) const;
  // alpha_l extended to E.
  Complex ext_embed(const ExtElement& a, int l) const;

  RationalVector unit(int index) const;
  std::vector<ExtElement> components(const RationalVector& a) const;
  RationalVector from_components(const std::vector<ExtElement>& x) const;
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;

  // phi(a) with exact entries in E.
  std::vector<std::vector<ExtElement>> left_regular(const RationalVector& a) const;
  // alpha_l(phi(a)).
  ComplexMatrix left_regular_embedded(const RationalVector& a, int l) const;
  // Stacked alpha_1(phi(a)), ..., alpha_k(phi(a)), an nk x n matrix.
  ComplexMatrix psi(const RationalVector& a) const;

  // Tr_{D/F}(a) and det(phi(a)), as elements of F.
  RationalVector reduced_trace(const RationalVector& a) const;
  RationalVector reduced_norm(const RationalVector& a) const;
  // Tr_{F/Q}(reduced trace); N_{F/Q}(reduced norm).
  Rational trace_q(const RationalVector& a) const;
  Rational norm_q(const RationalVector& a) const;

  // Tr_{D/Q}(b_i b_j) over the order basis.
  const RationalMatrix& trace_form() const { return trace_form_; }
  const Rational& discriminant() const { return disc_; }

 private:
  RationalVector center_part(const ExtElement& e, const char* what) const;

  std::string name_;
  NumberFieldCtx center_;
  std::vector<RationalVector> g_;
  ExtElement sigma_theta_;
  RationalVector gamma_;
  int n_;
  std::vector<Complex> theta_roots_;  // alpha_l(theta)
  RationalMatrix trace_form_;
  Rational disc_;
};

// n = 1: the algebra is the center itself and psi reduces to the canonical
// embedding.
CyclicAlgebraCtx trivial_algebra(const NumberFieldCtx& field);

// psi(order). Checks closure of the order and
// V = 2^{-k n^2} sqrt|d(order/Z)|; throws ConsistencyError otherwise.
MatrixLattice multiblock_embed(const CyclicAlgebraCtx& algebra);

// 2 psi(order^vee)^h, where order^vee is the dual basis for the reduced
// trace form. Checks that Re Tr(X_i^H Y_j) = delta_ij against psi(order).
MatrixLattice algebra_codifferent(const CyclicAlgebraCtx& algebra);

// Basis of the codifferent order^vee as flat rational coordinates.
std::vector<RationalVector> codifferent_basis(const CyclicAlgebraCtx& algebra);

}  // namespace latsec

#endif  // LATSEC_CYCLIC_ALGEBRA_H_
