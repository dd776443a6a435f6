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

#ifndef LATSEC_LATTICE_H_
#define LATSEC_LATTICE_H_

#include <string>

#include "latsec/enumeration.h"
#include "latsec/types.h"

namespace latsec {

// Full-rank lattice in C^k stored through its real 2k x 2k generator
// (columns are basis vectors, coordinates as in to_real).
class Lattice {
 public:
  explicit Lattice(RealMatrix basis, std::string provenance = "explicit");

  // Basis given as complex column vectors in C^k.
  static Lattice from_complex(const ComplexMatrix& basis,
                              std::string provenance = "explicit");
  // Z^{2k}, i.e. Z[i]^k.
  static Lattice integer(int k);

  int dim_complex() const { return static_cast<int>(basis_.cols() / 2); }
  int dim_real() const { return static_cast<int>(basis_.cols()); }
  const RealMatrix& basis() const { return basis_; }
  const RealMatrix& gram() const { return gram_; }
  double volume() const { return volume_; }
  const std::string& provenance() const { return provenance_; }

  RealVector point(const IntVector& coeffs) const;
  ComplexMatrix complex_basis() const;

  // A * Lambda for a real 2k x 2k (or complex k x k) linear map A.
  Lattice transformed(const RealMatrix& a) const;
  Lattice transformed(const ComplexMatrix& a) const;
  Lattice scaled(double alpha) const;

 private:
  RealMatrix basis_;
  RealMatrix gram_;
  double volume_;
  std::string provenance_;
};

// Dual lattice for the pairing Re(x^H y); basis B^{-T}.
Lattice dual(const Lattice& lat);

struct MinDistance {
  double lambda1;
  IntVector witness;  // coordinates in lat.basis()
  RealVector point;
};

// Exact lambda_1 by enumeration (real dimension <= 24). A nonpositive
// radius_hint starts from the first reduced basis vector.
MinDistance min_distance(const Lattice& lat, double radius_hint = 0.0);

// lambda_1^2 / V^{1/k}.
double hermite_invariant(const Lattice& lat);

struct ProductDistance {
  double p;       // minimum of prod |x_i| over enumerated nonzero vectors
  double np;      // p / sqrt(V)
  double radius;  // every nonzero vector of norm <= radius was examined
  IntVector witness;
};

inline constexpr double kZeroCoordinate = 1e-12;

// Product of moduli of the complex coordinates; coordinates below
// kZeroCoordinate count as exact zeros.
double coordinate_product(const ComplexVector& z);

// Minimum product distance over all nonzero vectors with norm at most
// radius_factor * lambda_1 (complex dimension <= 8).
ProductDistance product_distance(const Lattice& lat, double radius_factor = 2.0);

// True when every basis vector of `sub` has integer coordinates (to tol) in
// the basis of `super`.
bool is_sublattice(const Lattice& sub, const Lattice& super, double tol = 1e-9);
// True when the two bases generate the same point set.
bool same_lattice(const Lattice& a, const Lattice& b, double tol = 1e-9);
// Integer matrix M with sub.basis() = super.basis() * M; throws
// ConsistencyError if `sub` is not contained in `super`.
IntMatrix sublattice_coordinates(const Lattice& sub, const Lattice& super,
                                 double tol = 1e-9);

// Exchange format: {"dim_complex", "basis" (row-major reals), "provenance"}.
std::string lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const std::string& text);

}  // namespace latsec

#endif  // LATSEC_LATTICE_H_
