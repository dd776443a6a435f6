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

#include "latsec/number_field.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

#include "latsec/errors.h"

namespace latsec {
namespace {

Complex eval_poly(const std::vector<int64_t>& f, Complex z, Complex* deriv) {
  Complex p = 0, dp = 0;
  for (int j = static_cast<int>(f.size()) - 1; j >= 0; --j) {
    dp = dp * z + p;
    p = p * z + static_cast<double>(f[j]);
  }
  if (deriv) *deriv = dp;
  return p;
}

}  // namespace

NumberFieldCtx::NumberFieldCtx(std::string name, std::vector<int64_t> poly,
                               int64_t expected_discriminant)
    : name_(std::move(name)), poly_(std::move(poly)) {
  degree_ = static_cast<int>(poly_.size()) - 1;
  if (degree_ < 2 || degree_ % 2 != 0 || poly_.back() != 1)
    throw InvalidSpec(name_ + ": need a monic polynomial of even degree");

  ComplexMatrix companion = ComplexMatrix::Zero(degree_, degree_);
  for (int i = 1; i < degree_; ++i) companion(i, i - 1) = 1.0;
  for (int j = 0; j < degree_; ++j)
    companion(j, degree_ - 1) = -static_cast<double>(poly_[j]);
  Eigen::ComplexEigenSolver<ComplexMatrix> es(companion);
  std::vector<Complex> upper;
  for (int i = 0; i < degree_; ++i) {
    Complex z = es.eigenvalues()(i);
    for (int it = 0; it < 20; ++it) {
      Complex dp;
      const Complex p = eval_poly(poly_, z, &dp);
      if (std::abs(dp) == 0) break;
      const Complex step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    if (std::abs(z.imag()) < 1e-8)
      throw InvalidSpec(name_ + ": field is not totally complex");
    if (z.imag() > 0) upper.push_back(z);
  }
  if (static_cast<int>(upper.size()) != k())
    throw InvalidSpec(name_ + ": root pairing failed");
  std::sort(upper.begin(), upper.end(),
            [](Complex a, Complex b) { return std::arg(a) < std::arg(b); });
  roots_ = Eigen::Map<ComplexVector>(upper.data(), k());

  trace_form_ = RationalMatrix(degree_, degree_);
  std::vector<Rational> power_traces(2 * degree_ - 1);
  RationalVector xi = one();
  for (int i = 0; i < 2 * degree_ - 1; ++i) {
    power_traces[i] = trace(xi);
    xi = multiply(xi, generator());
  }
  for (int i = 0; i < degree_; ++i)
    for (int j = 0; j < degree_; ++j) trace_form_(i, j) = power_traces[i + j];
  disc_ = trace_form_.determinant();
  if (expected_discriminant != 0 && disc_ != Rational(expected_discriminant))
    throw ConsistencyError(name_ + ": discriminant mismatch");
}

RationalVector NumberFieldCtx::one() const {
  RationalVector v(degree_);
  v[0] = 1;
  return v;
}

RationalVector NumberFieldCtx::generator() const {
  RationalVector v(degree_);
  v[1] = 1;
  return v;
}

RationalVector NumberFieldCtx::multiply(const RationalVector& a,
                                        const RationalVector& b) const {
  if (static_cast<int>(a.size()) != degree_ ||
      static_cast<int>(b.size()) != degree_)
    throw InvalidSpec(name_ + ": element has the wrong length");
  std::vector<Rational> prod(2 * degree_ - 1);
  for (int i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) prod[i + j] += a[i] * b[j];
  }
  for (int m = 2 * degree_ - 2; m >= degree_; --m) {
    if (prod[m] == 0) continue;
    const Rational c = prod[m];
    prod[m] = 0;
    for (int j = 0; j < degree_; ++j) prod[m - degree_ + j] -= c * poly_[j];
  }
  prod.resize(degree_);
  return prod;
}

RationalMatrix NumberFieldCtx::multiplication_matrix(
    const RationalVector& a) const {
  RationalMatrix m(degree_, degree_);
  RationalVector col = a;
  for (int j = 0; j < degree_; ++j) {
    for (int i = 0; i < degree_; ++i) m(i, j) = col[i];
    col = multiply(col, generator());
  }
  return m;
}

Rational NumberFieldCtx::trace(const RationalVector& a) const {
  const RationalMatrix m = multiplication_matrix(a);
  Rational t = 0;
  for (int i = 0; i < degree_; ++i) t += m(i, i);
  return t;
}

Rational NumberFieldCtx::norm(const RationalVector& a) const {
  return multiplication_matrix(a).determinant();
}

ComplexVector NumberFieldCtx::embed(const RationalVector& a) const {
  ComplexVector out(k());
  for (int i = 0; i < k(); ++i) {
    Complex s = 0;
    for (int j = degree_ - 1; j >= 0; --j) s = s * roots_(i) + to_double(a[j]);
    out(i) = s;
  }
  return out;
}

ComplexVector NumberFieldCtx::embed_all(const RationalVector& a) const {
  const ComplexVector half = embed(a);
  ComplexVector out(degree_);
  out << half, half.conjugate();
  return out;
}

FractionalIdealBasis make_ideal(const NumberFieldCtx& field,
                                std::vector<RationalVector> basis) {
  const int d = field.degree();
  if (static_cast<int>(basis.size()) != d)
    throw ConsistencyError("ideal basis must have 2k elements");
  RationalMatrix m(d, d);
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(basis[j].size()) != d)
      throw ConsistencyError("ideal basis element has the wrong length");
    for (int i = 0; i < d; ++i) m(i, j) = basis[j][i];
  }
  const Rational det = m.determinant();
  if (det == 0) throw ConsistencyError("ideal basis is not full rank");
  const RationalMatrix inv = m.inverse();
  for (int j = 0; j < d; ++j) {
    const RationalVector c = inv * field.multiply(field.generator(), basis[j]);
    for (const Rational& q : c)
      if (!is_integer(q))
        throw ConsistencyError("module is not closed under O_F");
  }
  return {std::move(basis), abs(det)};
}

FractionalIdealBasis ring_of_integers(const NumberFieldCtx& field) {
  std::vector<RationalVector> basis;
  RationalVector x = field.one();
  for (int j = 0; j < field.degree(); ++j) {
    basis.push_back(x);
    x = field.multiply(x, field.generator());
  }
  return make_ideal(field, std::move(basis));
}

FractionalIdealBasis principal_ideal(const NumberFieldCtx& field,
                                     const RationalVector& generator) {
  std::vector<RationalVector> basis;
  RationalVector x = generator;
  for (int j = 0; j < field.degree(); ++j) {
    basis.push_back(x);
    x = field.multiply(x, field.generator());
  }
  return make_ideal(field, std::move(basis));
}

FractionalIdealBasis codifferent_ideal(const NumberFieldCtx& field) {
  const int d = field.degree();
  const RationalMatrix tinv = field.trace_form().inverse();
  std::vector<RationalVector> basis(d, RationalVector(d));
  // w'_i = sum_l (T^{-1})_{il} x^l, so Tr(w'_i x^j) = delta_ij.
  for (int i = 0; i < d; ++i)
    for (int l = 0; l < d; ++l) basis[i][l] = tinv(i, l);
  return make_ideal(field, std::move(basis));
}

Lattice ideal_lattice(const NumberFieldCtx& field,
                      const FractionalIdealBasis& ideal) {
  const int k = field.k();
  ComplexMatrix b(k, field.degree());
  for (int j = 0; j < field.degree(); ++j) b.col(j) = field.embed(ideal.basis[j]);
  Lattice lat = Lattice::from_complex(b, "number-field:" + field.name());
  const double expected = std::pow(2.0, -k) *
                          std::sqrt(std::abs(to_double(field.discriminant()))) *
                          to_double(ideal.norm);
  if (std::abs(lat.volume() - expected) > 1e-6 * expected)
    throw ConsistencyError(field.name() + ": ideal lattice volume mismatch");
  return lat;
}

Lattice codifferent_lattice(const NumberFieldCtx& field) {
  const FractionalIdealBasis dual_ideal = codifferent_ideal(field);
  const int k = field.k();
  ComplexMatrix b(k, field.degree());
  for (int j = 0; j < field.degree(); ++j)
    b.col(j) = 2.0 * field.embed(dual_ideal.basis[j]).conjugate();
  Lattice lat = Lattice::from_complex(b, "codifferent:" + field.name());
  const Lattice primal = ideal_lattice(field, ring_of_integers(field));
  if (!same_lattice(lat, dual(primal), 1e-8))
    throw ConsistencyError(field.name() + ": codifferent is not the dual");
  return lat;
}

}  // namespace latsec
