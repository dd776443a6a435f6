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

#ifndef LATSEC_TYPES_H_
#define LATSEC_TYPES_H_

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace latsec {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using IntVector = Eigen::Matrix<int64_t, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Real coordinates of z in C^k: (Re z_1, ..., Re z_k, Im z_1, ..., Im z_k).
// Every complex/real conversion in the library goes through these helpers.
RealVector to_real(const ComplexVector& z);
ComplexVector to_complex(const RealVector& x);

// The 2k x 2k real matrix that acts on to_real(z) as A acts on z.
RealMatrix real_form(const ComplexMatrix& a);

// Inverse of real_form for matrices that commute with multiplication by i.
ComplexMatrix complex_form(const RealMatrix& a);

// Hermitian square root and inverse square root of a positive definite matrix.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& s);
ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& s);

// Throws InvalidSpec unless s is Hermitian with all eigenvalues > 0.
void check_positive_definite(const ComplexMatrix& s);

}  // namespace latsec

#endif  // LATSEC_TYPES_H_
