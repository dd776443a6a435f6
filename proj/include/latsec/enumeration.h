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

#ifndef LATSEC_ENUMERATION_H_
#define LATSEC_ENUMERATION_H_

#include <cstdint>
#include <functional>
#include <utility>

#include "latsec/types.h"

namespace latsec {

inline constexpr double kLllDelta = 0.99;

// LLL-reduced basis (columns) together with the unimodular transform U such
// that reduced = input * U.
struct Reduction {
  RealMatrix basis;
  IntMatrix transform;
};

Reduction lll_reduce(const RealMatrix& basis, double delta = kLllDelta);

struct EnumerationOptions {
  uint64_t node_limit = 400'000'000;
};

// Fincke-Pohst enumeration over an LLL-reduced copy of a basis. Results are
// always reported as integer coordinates in the basis passed to the
// constructor.
class Enumerator {
 public:
  using Visitor = std::function<void(const IntVector& coeffs, double dist2)>;

  explicit Enumerator(const RealMatrix& basis, EnumerationOptions opts = {});

  int dim() const { return static_cast<int>(basis_.cols()); }
  const RealMatrix& basis() const { return basis_; }
  const Reduction& reduction() const { return red_; }

  // Visits every lattice point B*u with |B*u - center|^2 <= radius2 (a
  // relative slack of 1e-10 is allowed, callers filter if they need a strict
  // ball). The visiting order depends only on the inputs. Returns the number
  // of points visited. Throws EnumerationLimit past the node budget.
  uint64_t for_each(const RealVector& center, double radius2,
                    const Visitor& visit) const;

  // Exact closest lattice point (Schnorr-Euchner with radius shrinking).
  std::pair<IntVector, double> closest(const RealVector& center) const;

 private:
  RealMatrix basis_;
  Reduction red_;
  RealMatrix q_;  // orthogonal factor of the reduced basis
  RealMatrix r_;  // upper triangular factor, positive diagonal
  EnumerationOptions opts_;
};

}  // namespace latsec

#endif  // LATSEC_ENUMERATION_H_
