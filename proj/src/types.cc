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

#include "latsec/types.h"

#include <Eigen/Eigenvalues>

#include "latsec/errors.h"

namespace latsec {

RealVector to_real(const ComplexVector& z) {
  const Eigen::Index k = z.size();
  RealVector x(2 * k);
  x.head(k) = z.real();
  x.tail(k) = z.imag();
  return x;
}

ComplexVector to_complex(const RealVector& x) {
  if (x.size() % 2 != 0) throw InvalidSpec("real vector has odd length");
  const Eigen::Index k = x.size() / 2;
  ComplexVector z(k);
  for (Eigen::Index i = 0; i < k; ++i) z(i) = Complex(x(i), x(k + i));
  return z;
}

RealMatrix real_form(const ComplexMatrix& a) {
  const Eigen::Index r = a.rows(), c = a.cols();
  RealMatrix m(2 * r, 2 * c);
  m.topLeftCorner(r, c) = a.real();
  m.topRightCorner(r, c) = -a.imag();
  m.bottomLeftCorner(r, c) = a.imag();
  m.bottomRightCorner(r, c) = a.real();
  return m;
}

ComplexMatrix complex_form(const RealMatrix& a) {
  const Eigen::Index r = a.rows() / 2, c = a.cols() / 2;
  ComplexMatrix m(r, c);
  m.real() = a.topLeftCorner(r, c);
  m.imag() = a.bottomLeftCorner(r, c);
  return m;
}

void check_positive_definite(const ComplexMatrix& s) {
  if (s.rows() != s.cols() || s.rows() == 0)
    throw InvalidSpec("covariance must be square and nonempty");
  if ((s - s.adjoint()).norm() > 1e-12 * (1.0 + s.norm()))
    throw InvalidSpec("covariance is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw InvalidSpec("covariance is not positive definite");
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& s) {
  check_positive_definite(s);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
  return es.eigenvectors() *
         es.eigenvalues().cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& s) {
  check_positive_definite(s);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s);
  return es.eigenvectors() *
         es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace latsec
