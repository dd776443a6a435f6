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

#include "latsec/cyclic_algebra.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>

#include "latsec/errors.h"

namespace latsec {
namespace {

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero(const RationalVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; });
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

CyclicAlgebraCtx::CyclicAlgebraCtx(std::string name, NumberFieldCtx center,
                                   std::vector<RationalVector> g,
                                   ExtElement sigma_theta, RationalVector gamma)
    : name_(std::move(name)),
      center_(std::move(center)),
      g_(std::move(g)),
      sigma_theta_(std::move(sigma_theta)),
      gamma_(std::move(gamma)) {
  n_ = static_cast<int>(g_.size()) - 1;
  const int d = center_.degree();
  if (n_ < 1) throw InvalidSpec(name_ + ": extension polynomial too short");
  for (const auto& c : g_)
    if (static_cast<int>(c.size()) != d)
      throw InvalidSpec(name_ + ": extension coefficient has the wrong length");
  if (g_.back() != center_.one())
    throw InvalidSpec(name_ + ": extension polynomial must be monic");
  if (static_cast<int>(sigma_theta_.size()) != n_ ||
      static_cast<int>(gamma_.size()) != d)
    throw InvalidSpec(name_ + ": sigma or gamma has the wrong shape");
  if (is_zero(gamma_)) throw InvalidSpec(name_ + ": gamma must be nonzero");

  // sigma(theta) must be a root of g and sigma must have order n.
  ExtElement value = ext_zero();
  ExtElement power = ext_from_center(center_.one());
  for (int j = 0; j <= n_; ++j) {
    const ExtElement term = ext_multiply(ext_from_center(g_[j]), power);
    for (int t = 0; t < n_; ++t) value[t] = add(value[t], term[t]);
    power = ext_multiply(power, sigma_theta_);
  }
  for (const auto& c : value)
    if (!is_zero(c)) throw ConsistencyError(name_ + ": sigma(theta) is not a root");
  ExtElement theta = ext_zero();
  if (n_ > 1) theta[1] = center_.one();
  for (int p = 1; p < n_; ++p)
    if (ext_sigma(theta, p) == theta)
      throw ConsistencyError(name_ + ": sigma does not have order n");
  if (ext_sigma(theta, n_) != theta)
    throw ConsistencyError(name_ + ": sigma^n is not the identity");

  for (int l = 0; l < k(); ++l) {
    std::vector<Complex> c(n_ + 1);
    for (int j = 0; j <= n_; ++j) c[j] = center_.embed(g_[j])(l);
    Complex root;
    if (n_ == 1) {
      root = -c[0];
    } else {
      ComplexMatrix companion = ComplexMatrix::Zero(n_, n_);
      for (int i = 1; i < n_; ++i) companion(i, i - 1) = 1.0;
      for (int j = 0; j < n_; ++j) companion(j, n_ - 1) = -c[j];
      Eigen::ComplexEigenSolver<ComplexMatrix> es(companion);
      std::vector<Complex> roots(es.eigenvalues().data(),
                                 es.eigenvalues().data() + n_);
      std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
      });
      root = roots.front();
      for (int it = 0; it < 20; ++it) {
        Complex p = 0, dp = 0;
        for (int j = n_; j >= 0; --j) {
          dp = dp * root + p;
          p = p * root + c[j];
        }
        if (std::abs(dp) == 0) break;
        root -= p / dp;
      }
    }
    theta_roots_.push_back(root);
  }

  const int m = dim();
  trace_form_ = RationalMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      trace_form_(i, j) = trace_q(multiply(unit(i), unit(j)));
      trace_form_(j, i) = trace_form_(i, j);
    }
  disc_ = trace_form_.determinant();
  if (disc_ == 0) throw ConsistencyError(name_ + ": singular reduced trace form");
}

ExtElement CyclicAlgebraCtx::ext_zero() const {
  return ExtElement(n_, RationalVector(center_.degree()));
}

ExtElement CyclicAlgebraCtx::ext_from_center(const RationalVector& f) const {
  ExtElement e = ext_zero();
  e[0] = f;
  return e;
}

ExtElement CyclicAlgebraCtx::ext_multiply(const ExtElement& a,
                                          const ExtElement& b) const {
  const int d = center_.degree();
  std::vector<RationalVector> prod(2 * n_ - 1, RationalVector(d));
  for (int i = 0; i < n_; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < n_; ++j) {
      if (is_zero(b[j])) continue;
      prod[i + j] = add(prod[i + j], center_.multiply(a[i], b[j]));
    }
  }
  for (int m = 2 * n_ - 2; m >= n_; --m) {
    if (is_zero(prod[m])) continue;
    const RationalVector c = prod[m];
    prod[m] = RationalVector(d);
    for (int j = 0; j < n_; ++j) {
      const RationalVector t = center_.multiply(c, g_[j]);
      for (int i = 0; i < d; ++i) prod[m - n_ + j][i] -= t[i];
    }
  }
  prod.resize(n_);
  return prod;
}

ExtElement CyclicAlgebraCtx::ext_sigma(const ExtElement& a, int power) const {
  power = ((power % n_) + n_) % n_;
  ExtElement cur = a;
  for (int p = 0; p < power; ++p) {
    ExtElement out = ext_zero();
    ExtElement st = ext_from_center(center_.one());
    for (int j = 0; j < n_; ++j) {
      const ExtElement term = ext_multiply(ext_from_center(cur[j]), st);
      for (int t = 0; t < n_; ++t) out[t] = add(out[t], term[t]);
      st = ext_multiply(st, sigma_theta_);
    }
    cur = std::move(out);
  }
  return cur;
}

Complex CyclicAlgebraCtx::ext_embed(const ExtElement& a, int l) const {
  Complex s = 0;
  for (int j = n_ - 1; j >= 0; --j)
    s = s * theta_roots_[l] + center_.embed(a[j])(l);
  return s;
}

RationalVector CyclicAlgebraCtx::unit(int index) const {
  RationalVector v(dim());
  v.at(index) = 1;
  return v;
}

std::vector<ExtElement> CyclicAlgebraCtx::components(
    const RationalVector& a) const {
  const int d = center_.degree();
  if (static_cast<int>(a.size()) != dim())
    throw InvalidSpec(name_ + ": element has the wrong length");
  std::vector<ExtElement> x(n_, ext_zero());
  for (int l = 0; l < n_; ++l)
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < d; ++i) x[l][j][i] = a[(l * n_ + j) * d + i];
  return x;
}

RationalVector CyclicAlgebraCtx::from_components(
    const std::vector<ExtElement>& x) const {
  const int d = center_.degree();
  RationalVector a(dim());
  for (int l = 0; l < n_; ++l)
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < d; ++i) a[(l * n_ + j) * d + i] = x[l][j][i];
  return a;
}

RationalVector CyclicAlgebraCtx::multiply(const RationalVector& a,
                                          const RationalVector& b) const {
  const auto xa = components(a);
  const auto xb = components(b);
  std::vector<ExtElement> out(n_, ext_zero());
  const ExtElement gamma = ext_from_center(gamma_);
  for (int i = 0; i < n_; ++i) {
    if (std::all_of(xa[i].begin(), xa[i].end(), is_zero)) continue;
    for (int j = 0; j < n_; ++j) {
      if (std::all_of(xb[j].begin(), xb[j].end(), is_zero)) continue;
      // (u^i x)(u^j y) = u^{i+j} sigma^j(x) y.
      ExtElement term = ext_multiply(ext_sigma(xa[i], j), xb[j]);
      int e = i + j;
      if (e >= n_) {
        term = ext_multiply(gamma, term);
        e -= n_;
      }
      for (int t = 0; t < n_; ++t) out[e][t] = add(out[e][t], term[t]);
    }
  }
  return from_components(out);
}

std::vector<std::vector<ExtElement>> CyclicAlgebraCtx::left_regular(
    const RationalVector& a) const {
  const auto x = components(a);
  const ExtElement gamma = ext_from_center(gamma_);
  std::vector<std::vector<ExtElement>> phi(n_, std::vector<ExtElement>(n_));
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      phi[r][c] = r >= c ? ext_sigma(x[r - c], c)
                         : ext_multiply(gamma, ext_sigma(x[n_ + r - c], c));
  return phi;
}

ComplexMatrix CyclicAlgebraCtx::left_regular_embedded(const RationalVector& a,
                                                      int l) const {
  const auto phi = left_regular(a);
  ComplexMatrix m(n_, n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m(r, c) = ext_embed(phi[r][c], l);
  return m;
}

ComplexMatrix CyclicAlgebraCtx::psi(const RationalVector& a) const {
  const auto phi = left_regular(a);
  ComplexMatrix m(n_ * k(), n_);
  for (int l = 0; l < k(); ++l)
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) m(l * n_ + r, c) = ext_embed(phi[r][c], l);
  return m;
}

RationalVector CyclicAlgebraCtx::center_part(const ExtElement& e,
                                             const char* what) const {
  for (int j = 1; j < n_; ++j)
    if (!is_zero(e[j]))
      throw ConsistencyError(name_ + ": " + what + " is not in the center");
  return e[0];
}

RationalVector CyclicAlgebraCtx::reduced_trace(const RationalVector& a) const {
  const auto x = components(a);
  ExtElement t = ext_zero();
  for (int c = 0; c < n_; ++c) {
    const ExtElement s = ext_sigma(x[0], c);
    for (int j = 0; j < n_; ++j) t[j] = add(t[j], s[j]);
  }
  return center_part(t, "reduced trace");
}

RationalVector CyclicAlgebraCtx::reduced_norm(const RationalVector& a) const {
  const auto phi = left_regular(a);
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  ExtElement det = ext_zero();
  do {
    ExtElement term = ext_from_center(center_.one());
    for (int r = 0; r < n_; ++r) term = ext_multiply(term, phi[r][perm[r]]);
    const int sign = permutation_sign(perm);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < center_.degree(); ++i) det[j][i] += sign * term[j][i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return center_part(det, "reduced norm");
}

Rational CyclicAlgebraCtx::trace_q(const RationalVector& a) const {
  return center_.trace(reduced_trace(a));
}

Rational CyclicAlgebraCtx::norm_q(const RationalVector& a) const {
  return center_.norm(reduced_norm(a));
}

CyclicAlgebraCtx trivial_algebra(const NumberFieldCtx& field) {
  RationalVector zero(field.degree());
  return CyclicAlgebraCtx(field.name() + "/trivial", field, {zero, field.one()},
                          ExtElement{zero}, field.one());
}

MatrixLattice multiblock_embed(const CyclicAlgebraCtx& algebra) {
  const int m = algebra.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const Rational& q : algebra.multiply(algebra.unit(i), algebra.unit(j)))
        if (!is_integer(q))
          throw ConsistencyError(algebra.name() + ": order is not closed");
  std::vector<ComplexMatrix> gens;
  for (int i = 0; i < m; ++i) gens.push_back(algebra.psi(algebra.unit(i)));
  MatrixLattice mlat(std::move(gens), algebra.n(), algebra.k(),
                     "division-algebra:" + algebra.name());
  const int k = algebra.k(), n = algebra.n();
  const double expected = std::pow(2.0, -k * n * n) *
                          std::sqrt(std::abs(to_double(algebra.discriminant())));
  if (std::abs(mlat.volume() - expected) > 1e-6 * expected)
    throw ConsistencyError(algebra.name() + ": order lattice volume mismatch");
  return mlat;
}

std::vector<RationalVector> codifferent_basis(const CyclicAlgebraCtx& algebra) {
  const int m = algebra.dim();
  const RationalMatrix tinv = algebra.trace_form().inverse();
  std::vector<RationalVector> basis(m, RationalVector(m));
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < m; ++l) basis[i][l] = tinv(i, l);
  return basis;
}

MatrixLattice algebra_codifferent(const CyclicAlgebraCtx& algebra) {
  const int m = algebra.dim();
  const int n = algebra.n();
  std::vector<ComplexMatrix> gens;
  for (const RationalVector& b : codifferent_basis(algebra))
    gens.push_back(2.0 * block_adjoint(algebra.psi(b), n));
  MatrixLattice dual_lat(std::move(gens), n, algebra.k(),
                         "codifferent:" + algebra.name());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const ComplexMatrix y = algebra.psi(algebra.unit(j));
      const double pairing =
          (dual_lat.generators()[i].adjoint() * y).trace().real();
      if (std::abs(pairing - (i == j ? 1.0 : 0.0)) > 1e-9)
        throw ConsistencyError(algebra.name() + ": codifferent pairing failed");
    }
  return dual_lat;
}

}  // namespace latsec
