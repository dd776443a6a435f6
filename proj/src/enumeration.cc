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

#include "latsec/enumeration.h"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "latsec/errors.h"

namespace latsec {
namespace {

// Gram-Schmidt coefficients of the columns of b.
void gram_schmidt(const RealMatrix& b, RealMatrix& mu, RealVector& norms) {
  const Eigen::Index n = b.cols();
  RealMatrix bstar = b;
  mu = RealMatrix::Identity(n, n);
  norms.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      mu(i, j) = b.col(i).dot(bstar.col(j)) / norms(j);
      bstar.col(i) -= mu(i, j) * bstar.col(j);
    }
    norms(i) = bstar.col(i).squaredNorm();
  }
}

}  // namespace

Reduction lll_reduce(const RealMatrix& basis, double delta) {
  const Eigen::Index n = basis.cols();
  Reduction out{basis, IntMatrix::Identity(n, n)};
  if (n <= 1) return out;
  RealMatrix& b = out.basis;
  IntMatrix& u = out.transform;
  RealMatrix mu;
  RealVector norms;
  gram_schmidt(b, mu, norms);
  Eigen::Index k = 1;
  int64_t iterations = 0;
  while (k < n) {
    if (++iterations > 1'000'000) throw InvalidLattice("LLL did not converge");
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      const double q = std::round(mu(k, j));
      if (q == 0.0) continue;
      const auto qi = static_cast<int64_t>(q);
      b.col(k) -= q * b.col(j);
      u.col(k) -= qi * u.col(j);
      for (Eigen::Index l = 0; l <= j; ++l) mu(k, l) -= q * mu(j, l);
    }
    if (norms(k) >= (delta - mu(k, k - 1) * mu(k, k - 1)) * norms(k - 1)) {
      ++k;
    } else {
      b.col(k).swap(b.col(k - 1));
      u.col(k).swap(u.col(k - 1));
      gram_schmidt(b, mu, norms);
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  return out;
}

Enumerator::Enumerator(const RealMatrix& basis, EnumerationOptions opts)
    : basis_(basis), opts_(opts) {
  if (basis.rows() != basis.cols() || basis.cols() == 0)
    throw InvalidLattice("enumeration needs a square nonempty basis");
  red_ = lll_reduce(basis);
  Eigen::HouseholderQR<RealMatrix> qr(red_.basis);
  q_ = qr.householderQ();
  r_ = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < r_.rows(); ++i) {
    if (r_(i, i) < 0) {
      r_.row(i) *= -1.0;
      q_.col(i) *= -1.0;
    }
    if (!(r_(i, i) > 0)) throw InvalidLattice("singular basis");
  }
}

uint64_t Enumerator::for_each(const RealVector& center, double radius2,
                              const Visitor& visit) const {
  const int n = dim();
  const RealVector cp = q_.transpose() * center;
  const double r2 = radius2 * (1.0 + 1e-10);
  std::vector<double> w(n, 0.0);
  IntVector wi(n), coeffs(n);
  uint64_t nodes = 0, visited = 0;

  std::function<void(int, double)> level = [&](int i, double partial) {
    double s = cp(i);
    for (int j = i + 1; j < n; ++j) s -= r_(i, j) * w[j];
    const double ctr = s / r_(i, i);
    const double rem = r2 - partial;
    if (rem < 0) return;
    const double half = std::sqrt(rem) / r_(i, i);
    const double lo = std::ceil(ctr - half), hi = std::floor(ctr + half);
    for (double z = lo; z <= hi; z += 1.0) {
      if (++nodes > opts_.node_limit)
        throw EnumerationLimit("enumeration node budget exceeded (" +
                               std::to_string(opts_.node_limit) + ")");
      const double d = r_(i, i) * (z - ctr);
      const double np = partial + d * d;
      if (np > r2) continue;
      w[i] = z;
      if (i == 0) {
        for (int t = 0; t < n; ++t) wi(t) = static_cast<int64_t>(w[t]);
        coeffs.noalias() = red_.transform * wi;
        ++visited;
        visit(coeffs, np);
      } else {
        level(i - 1, np);
      }
    }
    w[i] = 0.0;
  };
  level(n - 1, 0.0);
  return visited;
}

std::pair<IntVector, double> Enumerator::closest(
    const RealVector& center) const {
  const int n = dim();
  const RealVector cp = q_.transpose() * center;

  // Babai rounding gives the starting radius.
  std::vector<double> w(n, 0.0), best(n, 0.0);
  double babai = 0.0;
  for (int i = n - 1; i >= 0; --i) {
    double s = cp(i);
    for (int j = i + 1; j < n; ++j) s -= r_(i, j) * w[j];
    w[i] = std::round(s / r_(i, i));
    const double d = r_(i, i) * w[i] - s;
    babai += d * d;
  }
  best = w;
  double r2 = babai * (1.0 + 1e-12) + 1e-300;
  uint64_t nodes = 0;
  std::fill(w.begin(), w.end(), 0.0);

  std::function<void(int, double)> level = [&](int i, double partial) {
    double s = cp(i);
    for (int j = i + 1; j < n; ++j) s -= r_(i, j) * w[j];
    const double ctr = s / r_(i, i);
    const double z0 = std::round(ctr);
    const double sgn = (ctr >= z0) ? 1.0 : -1.0;
    // Zig-zag around the projected center, nearest first. Along each side
    // the distance only grows, so a side is closed at its first miss.
    bool side_open[2] = {true, true};
    for (int t = 0; side_open[0] || side_open[1]; ++t) {
      const int side = (t % 2 == 1) ? 0 : 1;
      if (t > 0 && !side_open[side]) continue;
      const double off = (t + 1) / 2;
      const double z = z0 + (side == 0 ? sgn : -sgn) * off;
      if (++nodes > opts_.node_limit)
        throw EnumerationLimit("closest-point node budget exceeded");
      const double d = r_(i, i) * (z - ctr);
      const double np = partial + d * d;
      if (np > r2) {
        if (t == 0) break;
        side_open[side] = false;
        continue;
      }
      w[i] = z;
      if (i == 0) {
        if (np < r2) {
          r2 = np;
          best = w;
        }
      } else {
        level(i - 1, np);
      }
    }
    w[i] = 0.0;
  };
  level(n - 1, 0.0);

  IntVector wi(n);
  for (int t = 0; t < n; ++t) wi(t) = static_cast<int64_t>(best[t]);
  IntVector u = red_.transform * wi;
  const RealVector diff = basis_ * u.cast<double>() - center;
  return {u, diff.squaredNorm()};
}

}  // namespace latsec
