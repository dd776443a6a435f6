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

#include "latsec/lattice.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "json.hpp"

#include "latsec/errors.h"

namespace latsec {
namespace {

constexpr int kMaxEnumerationDim = 24;
constexpr int kMaxProductDim = 8;

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

}  // namespace

Lattice::Lattice(RealMatrix basis, std::string provenance)
    : basis_(std::move(basis)), provenance_(std::move(provenance)) {
  if (basis_.rows() != basis_.cols() || basis_.cols() == 0 ||
      basis_.cols() % 2 != 0)
    throw InvalidLattice("basis must be a nonempty even-dimensional square");
  if (!basis_.allFinite()) throw InvalidLattice("basis has non-finite entries");
  gram_ = basis_.transpose() * basis_;
  const double det = std::abs(basis_.determinant());
  const double scale = basis_.colwise().norm().prod();
  if (!(det > 1e-13 * scale)) throw InvalidLattice("singular basis");
  volume_ = det;
}

Lattice Lattice::from_complex(const ComplexMatrix& basis,
                              std::string provenance) {
  const Eigen::Index k = basis.rows();
  if (basis.cols() != 2 * k)
    throw InvalidLattice("complex basis needs 2k columns in C^k");
  RealMatrix b(2 * k, 2 * k);
  for (Eigen::Index j = 0; j < 2 * k; ++j) b.col(j) = to_real(basis.col(j));
  return Lattice(std::move(b), std::move(provenance));
}

Lattice Lattice::integer(int k) {
  return Lattice(RealMatrix::Identity(2 * k, 2 * k), "Z^" + std::to_string(2 * k));
}

RealVector Lattice::point(const IntVector& coeffs) const {
  return basis_ * coeffs.cast<double>();
}

ComplexMatrix Lattice::complex_basis() const {
  ComplexMatrix out(dim_complex(), dim_real());
  for (int j = 0; j < dim_real(); ++j) out.col(j) = to_complex(basis_.col(j));
  return out;
}

Lattice Lattice::transformed(const RealMatrix& a) const {
  return Lattice(a * basis_, provenance_);
}

Lattice Lattice::transformed(const ComplexMatrix& a) const {
  return Lattice(real_form(a) * basis_, provenance_);
}

Lattice Lattice::scaled(double alpha) const {
  return Lattice(alpha * basis_, provenance_);
}

Lattice dual(const Lattice& lat) {
  RealMatrix inv = lat.basis().inverse().transpose();
  return Lattice(std::move(inv), lat.provenance() + "*");
}

MinDistance min_distance(const Lattice& lat, double radius_hint) {
  if (lat.dim_real() > kMaxEnumerationDim)
    throw EnumerationLimit("min_distance supports real dimension <= 24");
  Enumerator en(lat.basis());
  double r2 = en.reduction().basis.col(0).squaredNorm();
  if (radius_hint > 0) r2 = std::min(r2, radius_hint * radius_hint);
  const RealVector zero = RealVector::Zero(lat.dim_real());
  while (true) {
    double best = std::numeric_limits<double>::infinity();
    IntVector witness;
    en.for_each(zero, r2, [&](const IntVector& u, double d2) {
      if (u.isZero()) return;
      if (d2 < best * (1 - 1e-9)) {
        best = d2;
        witness = u;
      } else if (d2 <= best * (1 + 1e-9)) {
        best = std::min(best, d2);
        if (lex_less(u, witness)) witness = u;
      }
    });
    if (witness.size() > 0) {
      RealVector p = lat.point(witness);
      return {p.norm(), witness, p};
    }
    r2 *= 2.0;
  }
}

double hermite_invariant(const Lattice& lat) {
  const double l1 = min_distance(lat).lambda1;
  return l1 * l1 / std::pow(lat.volume(), 1.0 / lat.dim_complex());
}

double coordinate_product(const ComplexVector& z) {
  double p = 1.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double a = std::abs(z(i));
    if (a < kZeroCoordinate) return 0.0;
    p *= a;
  }
  return p;
}

ProductDistance product_distance(const Lattice& lat, double radius_factor) {
  if (lat.dim_complex() > kMaxProductDim)
    throw EnumerationLimit("product_distance supports complex dimension <= 8");
  const MinDistance md = min_distance(lat);
  const int k = lat.dim_complex();
  Enumerator en(lat.basis());
  // Start from the product at the shortest vector; the search radius covers
  // radius_factor * lambda_1 and never less than the AM-GM radius of the
  // running minimum.
  double best = coordinate_product(to_complex(md.point));
  IntVector witness = md.witness;
  double r2 = radius_factor * radius_factor * md.lambda1 * md.lambda1;
  r2 = std::max(r2, k * std::pow(best, 2.0 / k));
  en.for_each(RealVector::Zero(lat.dim_real()), r2,
              [&](const IntVector& u, double) {
                if (u.isZero()) return;
                const double p = coordinate_product(to_complex(lat.point(u)));
                if (p < best * (1 - 1e-12)) {
                  best = p;
                  witness = u;
                } else if (p <= best * (1 + 1e-12) && lex_less(u, witness)) {
                  witness = u;
                }
              });
  return {best, best / std::sqrt(lat.volume()), std::sqrt(r2), witness};
}

IntMatrix sublattice_coordinates(const Lattice& sub, const Lattice& super,
                                 double tol) {
  if (sub.dim_real() != super.dim_real())
    throw ConsistencyError("dimension mismatch");
  const RealMatrix m = super.basis().fullPivLu().solve(sub.basis());
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double r = std::round(m(i, j));
      if (std::abs(m(i, j) - r) > tol)
        throw ConsistencyError("not a sublattice: non-integer coordinate");
      out(i, j) = static_cast<int64_t>(r);
    }
  return out;
}

bool is_sublattice(const Lattice& sub, const Lattice& super, double tol) {
  try {
    sublattice_coordinates(sub, super, tol);
    return true;
  } catch (const ConsistencyError&) {
    return false;
  }
}

bool same_lattice(const Lattice& a, const Lattice& b, double tol) {
  return is_sublattice(a, b, tol) && is_sublattice(b, a, tol);
}

std::string lattice_to_json(const Lattice& lat) {
  nlohmann::json j;
  j["dim_complex"] = lat.dim_complex();
  std::vector<double> rows;
  for (int i = 0; i < lat.dim_real(); ++i)
    for (int c = 0; c < lat.dim_real(); ++c) rows.push_back(lat.basis()(i, c));
  j["basis"] = rows;
  j["provenance"] = lat.provenance();
  return j.dump(2);
}

Lattice lattice_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidLattice(std::string("lattice file: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "dim_complex" && key != "basis" && key != "provenance")
      throw InvalidLattice("lattice file: unknown field '" + key + "'");
  }
  if (!j.contains("dim_complex") || !j.contains("basis"))
    throw InvalidLattice("lattice file: need dim_complex and basis");
  const int k = j["dim_complex"].get<int>();
  const auto rows = j["basis"].get<std::vector<double>>();
  const int n = 2 * k;
  if (k <= 0 || static_cast<int>(rows.size()) != n * n)
    throw InvalidLattice("lattice file: basis must hold (2k)^2 reals");
  RealMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) b(i, c) = rows[i * n + c];
  return Lattice(std::move(b), j.value("provenance", std::string("file")));
}

}  // namespace latsec
