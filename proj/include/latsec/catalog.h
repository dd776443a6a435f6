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

#ifndef LATSEC_CATALOG_H_
#define LATSEC_CATALOG_H_

#include <optional>
#include <string>
#include <vector>

#include "latsec/cyclic_algebra.h"
#include "latsec/lattice.h"
#include "latsec/matrix_lattice.h"
#include "latsec/number_field.h"

namespace latsec {

// Built-in fields: qi, qzeta5, qzeta7, qzeta8, qzeta12, qzeta15.
std::vector<std::string> field_names();
// Throws UnknownReference.
const NumberFieldCtx& catalog_field(const std::string& name);
// Generator of the catalog's principal ideal of `field`.
RationalVector catalog_ideal_generator(const std::string& field);
// Field used for complex dimension k in rate and secrecy sweeps.
std::string field_for_dimension(int k);

// Q(i)(theta), theta^2 = theta + 1, sigma(theta) = 1 - theta, gamma = i.
const CyclicAlgebraCtx& golden_algebra();

struct CatalogLattice {
  std::string ref;
  Lattice lattice;
  std::optional<MatrixLattice> matrix;  // set for algebra lattices
  // |d_F| for ideal lattices, |d(order/Z)| for algebra lattices.
  std::optional<double> discriminant;
  double ideal_norm = 1.0;
  bool is_dual = false;
};

// References:
//   Z^<n>                  integer lattice of even real dimension n
//   <field>                psi(O_F)
//   <field>/dual           2 conj(psi(O_F^vee))
//   <field>/ideal          psi(I) for the catalog principal ideal I
//   golden, golden/dual    the order lattice and its codifferent
//   anything else          a lattice exchange file
CatalogLattice resolve_lattice(const std::string& ref);

// JSON manifest of every built-in field and algebra with invariant data.
std::string catalog_manifest_json();

}  // namespace latsec

#endif  // LATSEC_CATALOG_H_
