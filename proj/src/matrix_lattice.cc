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

#include "latsec/matrix_lattice.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "latsec/errors.h"

namespace latsec {
namespace {

constexpr int kMaxPdetDim = 16;

Lattice vectorized_lattice(const std::vector<ComplexMatrix>& gens, int n,
                           int k, const std::string& provenance) {
  const int dim = 2 * n * n * k;
  if (static_cast<int>(gens.size()) != dim)
    throw InvalidLattice("matrix lattice needs 2 n^2 k generators");
  RealMatrix b(dim, dim);
  for (int j = 0; j < dim; ++j) {
    if (gens[j].rows() != n * k || gens[j].cols() != n)
      throw InvalidLattice("generator has the wrong shape");
    b.col(j) = to_real(vectorize(gens[j]));
  }
  return Lattice(std::move(b), provenance);
}

}  // namespace

ComplexVector vectorize(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix devectorize(const ComplexVector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw InvalidSpec("devectorize: shape mismatch");
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

ComplexMatrix left_action(const ComplexMatrix& h, int n) {
  const Eigen::Index r = h.rows(), c = h.cols();
  ComplexMatrix out = ComplexMatrix::Zero(r * n, c * n);
  for (int j = 0; j < n; ++j) out.block(j * r, j * c, r, c) = h;
  return out;
}

ComplexMatrix block_adjoint(const ComplexMatrix& x, int n) {
  if (x.cols() != n || x.rows() % n != 0)
    throw InvalidSpec("block_adjoint: shape mismatch");
  ComplexMatrix out(x.rows(), n);
  for (Eigen::Index i = 0; i < x.rows() / n; ++i)
    out.block(i * n, 0, n, n) = x.block(i * n, 0, n, n).adjoint();
  return out;
}

Complex pdet(const ComplexMatrix& x, int n) {
  if (x.cols() != n || x.rows() % n != 0)
    throw InvalidSpec("pdet: shape mismatch");
  Complex p(1.0, 0.0);
  for (Eigen::Index i = 0; i < x.rows() / n; ++i)
    p *= x.block(i * n, 0, n, n).determinant();
  return p;
}

MatrixLattice::MatrixLattice(std::vector<ComplexMatrix> generators, int n,
                             int k, std::string provenance)
    : generators_(std::move(generators)),
      n_(n),
      k_(k),
      lattice_(vectorized_lattice(generators_, n, k, provenance)) {}

ComplexMatrix MatrixLattice::element(const IntVector& coeffs) const {
  return devectorize(to_complex(lattice_.point(coeffs)), n_ * k_, n_);
}

PdetMin pdet_min(const MatrixLattice& mlat, double radius_factor) {
  const Lattice& lat = mlat.lattice();
  if (lat.dim_real() > kMaxPdetDim)
    throw EnumerationLimit("pdet_min supports real dimension <= 16");
  const int n = mlat.block_size(), k = mlat.block_rows();
  const MinDistance md = min_distance(lat);
  double best = std::abs(pdet(mlat.element(md.witness), n));
  IntVector witness = md.witness;
  double r2 = radius_factor * radius_factor * md.lambda1 * md.lambda1;
  r2 = std::max(r2, n * k * std::pow(best, 2.0 / (n * k)));
  Enumerator en(lat.basis());
  en.for_each(RealVector::Zero(lat.dim_real()), r2,
              [&](const IntVector& u, double) {
                if (u.isZero()) return;
                const double p = std::abs(pdet(mlat.element(u), n));
                if (p < best * (1 - 1e-12) ||
                    (p <= best * (1 + 1e-12) &&
                     std::lexicographical_compare(u.data(), u.data() + u.size(),
                                                  witness.data(),
                                                  witness.data() + witness.size()))) {
                  best = std::min(best, p);
                  witness = u;
                }
              });
  const double delta = best / std::pow(lat.volume(), 1.0 / (2.0 * n));
  return {best, delta, std::sqrt(r2), witness};
}

}  // namespace latsec
