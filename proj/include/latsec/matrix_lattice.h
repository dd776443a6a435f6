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

#ifndef LATSEC_MATRIX_LATTICE_H_
#define LATSEC_MATRIX_LATTICE_H_

#include <string>
#include <vector>

#include "latsec/lattice.h"
#include "latsec/types.h"

namespace latsec {

// Column stacking of an nk x n matrix into C^{n^2 k}.
ComplexVector vectorize(const ComplexMatrix& x);
ComplexMatrix devectorize(const ComplexVector& v, int rows, int cols);

// The matrix acting on vectorize(X) as left multiplication by H acts on X.
// With column stacking this is kron(I_n, H).
ComplexMatrix left_action(const ComplexMatrix& h, int n);

// Block-wise conjugate transpose: the n x n blocks X_i of an nk x n matrix
// are replaced by X_i^H.
ComplexMatrix block_adjoint(const ComplexMatrix& x, int n);

// Product of the determinants of the n x n blocks.
Complex pdet(const ComplexMatrix& x, int n);

// Lattice of nk x n complex matrices with inner product Re Tr(X^H Y).
class MatrixLattice {
 public:
  MatrixLattice(std::vector<ComplexMatrix> generators, int n, int k,
                std::string provenance = "explicit");

  int block_size() const { return n_; }
  int block_rows() const { return k_; }
  const std::vector<ComplexMatrix>& generators() const { return generators_; }
  // The same lattice through vectorize + to_real.
  const Lattice& lattice() const { return lattice_; }
  const std::string& provenance() const { return lattice_.provenance(); }

  ComplexMatrix element(const IntVector& coeffs) const;
  double volume() const { return lattice_.volume(); }

 private:
  std::vector<ComplexMatrix> generators_;
  int n_;
  int k_;
  Lattice lattice_;
};

struct PdetMin {
  double pdet;    // minimum |pdet| over enumerated nonzero elements
  double delta;   // pdet / V^{1/(2n)}
  double radius;  // every nonzero element of norm <= radius was examined
  IntVector witness;
};

// Minimum |pdet| over nonzero elements with norm at most
// radius_factor * lambda_1 (real dimension <= 16).
PdetMin pdet_min(const MatrixLattice& mlat, double radius_factor = 2.0);

}  // namespace latsec

#endif  // LATSEC_MATRIX_LATTICE_H_
