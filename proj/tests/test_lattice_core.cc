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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "latsec/catalog.h"
#include "latsec/enumeration.h"
#include "latsec/errors.h"
#include "latsec/lattice.h"
#include "latsec/matrix_lattice.h"

namespace latsec {
namespace {

RealMatrix random_basis(std::mt19937_64& gen, int n) {
  std::normal_distribution<double> nd;
  RealMatrix b(n, n);
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = nd(gen) + (i == j ? 2.0 : 0.0);
  } while (std::abs(b.determinant()) < 0.5);
  return b;
}

ComplexMatrix random_complex(std::mt19937_64& gen, int r, int c) {
  std::normal_distribution<double> nd;
  ComplexMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Complex(nd(gen), nd(gen));
  return m;
}

// Calls f on every integer vector with entries in [-b, b].
template <class F>
void for_box(int n, int b, F f) {
  IntVector u = IntVector::Constant(n, -b);
  while (true) {
    f(u);
    int i = 0;
    while (i < n && u(i) == b) u(i++) = -b;
    if (i == n) return;
    ++u(i);
  }
}

double brute_lambda1(const RealMatrix& b, int box) {
  double best = INFINITY;
  for_box(b.cols(), box, [&](const IntVector& u) {
    if (u.isZero()) return;
    best = std::min(best, (b * u.cast<double>()).norm());
  });
  return best;
}

TEST(RealForm, ActsLikeComplexMatrix) {
  std::mt19937_64 gen(3);
  const ComplexMatrix a = random_complex(gen, 3, 3);
  const ComplexVector z = random_complex(gen, 3, 1);
  EXPECT_LT((real_form(a) * to_real(z) - to_real(a * z)).norm(), 1e-12);
  EXPECT_LT((complex_form(real_form(a)) - a).norm(), 1e-12);
  EXPECT_LT((to_complex(to_real(z)) - z).norm(), 1e-15);
  EXPECT_NEAR(to_real(z).norm(), z.norm(), 1e-12);
}

TEST(Lattice, SingularBasisRejected) {
  RealMatrix b(2, 2);
  b << 1, 2, 2, 4;
  EXPECT_THROW(Lattice{b}, InvalidLattice);
}

TEST(Dual, IntegerLatticeIsSelfDual) {
  EXPECT_TRUE(same_lattice(dual(Lattice::integer(1)), Lattice::integer(1)));
  EXPECT_TRUE(same_lattice(dual(Lattice::integer(3)), Lattice::integer(3)));
}

TEST(Dual, Scaling) {
  const Lattice z2 = Lattice::integer(1);
  EXPECT_TRUE(same_lattice(dual(z2.scaled(2.0)), dual(z2).scaled(0.5)));
}

TEST(Dual, VolumeAndPairingOnRandomLattices) {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 20; ++t) {
    const Lattice lat(random_basis(gen, 4));
    const Lattice d = dual(lat);
    EXPECT_NEAR(lat.volume() * d.volume(), 1.0, 1e-9);
    const RealMatrix pairing = d.basis().transpose() * lat.basis();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        EXPECT_NEAR(pairing(i, j), std::round(pairing(i, j)), 1e-9);
    EXPECT_TRUE(same_lattice(dual(d), lat));
  }
}

TEST(Dual, CatalogFieldsMatchCodifferent) {
  for (const auto& f : field_names()) {
    const CatalogLattice p = resolve_lattice(f);
    const CatalogLattice d = resolve_lattice(f + "/dual");
    EXPECT_TRUE(same_lattice(dual(p.lattice), d.lattice)) << f;
    EXPECT_NEAR(p.lattice.volume() * d.lattice.volume(), 1.0, 1e-9) << f;
  }
}

TEST(Lll, TransformIsUnimodularAndBasisReduced) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 20; ++t) {
    const RealMatrix b = random_basis(gen, 6) * 7.0;
    const Reduction red = lll_reduce(b);
    EXPECT_NEAR(std::abs(red.transform.cast<double>().determinant()), 1.0, 1e-9);
    EXPECT_LT((b * red.transform.cast<double>() - red.basis).norm(), 1e-8 * b.norm());
    // Gram-Schmidt check of size reduction and the Lovasz condition.
    Eigen::HouseholderQR<RealMatrix> qr(red.basis);
    const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 1; j < 6; ++j) {
      for (int i = 0; i < j; ++i)
        EXPECT_LE(std::abs(r(i, j) / r(i, i)), 0.5 + 1e-9);
      const double lhs = kLllDelta * r(j - 1, j - 1) * r(j - 1, j - 1);
      const double rhs = r(j, j) * r(j, j) + r(j - 1, j) * r(j - 1, j);
      EXPECT_LE(lhs, rhs * (1 + 1e-9));
    }
  }
}

TEST(Enumerator, CircleCountMatchesBruteForce) {
  const Enumerator en(RealMatrix::Identity(2, 2));
  for (double r : {1.0, 2.5, 5.0, 7.3}) {
    uint64_t brute = 0;
    for_box(2, 8, [&](const IntVector& u) {
      if (u.cast<double>().squaredNorm() <= r * r) ++brute;
    });
    uint64_t count = 0;
    en.for_each(RealVector::Zero(2), r * r, [&](const IntVector& u, double) {
      if (u.cast<double>().squaredNorm() <= r * r) ++count;
    });
    EXPECT_EQ(count, brute) << r;
  }
}

TEST(Enumerator, ClosestMatchesBruteForce) {
  std::mt19937_64 gen(21);
  std::normal_distribution<double> nd;
  int checked = 0;
  while (checked < 50) {
    const RealMatrix b = random_basis(gen, 4);
    RealVector target(4);
    for (int i = 0; i < 4; ++i) target(i) = 1.5 * nd(gen);
    // The closest point x satisfies |x| <= 2 |target|, which bounds B^{-1} x.
    const RealMatrix inv = b.inverse();
    int box = 0;
    for (int i = 0; i < 4; ++i)
      box = std::max(box, int(std::ceil(inv.row(i).norm() * 2.0 * target.norm())));
    if (box > 10) continue;
    ++checked;
    const Enumerator en(b);
    const auto [u, d2] = en.closest(target);
    double best = INFINITY;
    for_box(4, box, [&](const IntVector& v) {
      best = std::min(best, (b * v.cast<double>() - target).squaredNorm());
    });
    EXPECT_NEAR(d2, best, 1e-9);
    EXPECT_NEAR((b * u.cast<double>() - target).squaredNorm(), d2, 1e-9);
  }
}

TEST(MinDistance, MatchesBruteForceOnRandomLattices) {
  std::mt19937_64 gen(8);
  for (int t = 0; t < 30; ++t) {
    const RealMatrix b = random_basis(gen, 4);
    const Lattice lat(lll_reduce(b).basis);
    EXPECT_NEAR(min_distance(lat).lambda1, brute_lambda1(lat.basis(), 5), 1e-9);
  }
}

TEST(MinDistance, KnownValues) {
  for (int k = 1; k <= 4; ++k)
    EXPECT_NEAR(min_distance(Lattice::integer(k)).lambda1, 1.0, 1e-12);
  EXPECT_NEAR(min_distance(Lattice::integer(1).scaled(3.0)).lambda1, 3.0, 1e-12);
  const MinDistance m = min_distance(resolve_lattice("qzeta5").lattice);
  EXPECT_NEAR(m.lambda1, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(m.point.norm(), m.lambda1, 1e-12);
}

TEST(Hermite, KnownValues) {
  EXPECT_NEAR(hermite_invariant(Lattice::integer(1)), 1.0, 1e-12);
  EXPECT_NEAR(hermite_invariant(resolve_lattice("qzeta5").lattice),
              4.0 / std::pow(125.0, 0.25), 1e-9);
  std::mt19937_64 gen(4);
  const Lattice lat(random_basis(gen, 4));
  EXPECT_NEAR(hermite_invariant(lat.scaled(2.0)), hermite_invariant(lat), 1e-9);
}

TEST(ProductDistance, GaussianIntegers) {
  const ProductDistance pd = product_distance(Lattice::integer(1));
  EXPECT_NEAR(pd.p, 1.0, 1e-12);
  EXPECT_NEAR(pd.np, 1.0, 1e-12);
  EXPECT_NEAR(product_distance(Lattice::integer(1).scaled(2.0)).np, 1.0, 1e-12);
}

TEST(ProductDistance, RingOfIntegersHasUnitMinimum) {
  // For a in O_F the product of |sigma_i(a)| over one embedding per pair is
  // sqrt|N(a)|, an integer square root >= 1 with equality at units.
  for (const char* f : {"qzeta5", "qzeta8", "qzeta12"}) {
    const NumberFieldCtx& field = catalog_field(f);
    double brute = INFINITY;
    for_box(field.degree(), 2, [&](const IntVector& u) {
      if (u.isZero()) return;
      RationalVector a(u.data(), u.data() + u.size());
      brute = std::min(brute, std::sqrt(std::abs(to_double(field.norm(a)))));
    });
    const Lattice lat = resolve_lattice(f).lattice;
    const ProductDistance pd = product_distance(lat);
    EXPECT_NEAR(pd.p, brute, 1e-9) << f;
    EXPECT_NEAR(pd.np, brute / std::sqrt(lat.volume()), 1e-9) << f;
    const int k = field.k();
    const double bound = std::pow(2.0, k / 2.0) /
                         std::pow(std::abs(to_double(field.discriminant())), 0.25);
    EXPECT_GE(pd.np, bound - 1e-9) << f;
    // Np^2 <= h^k / k^k.
    EXPECT_LE(pd.np * pd.np,
              std::pow(hermite_invariant(lat), k) / std::pow(k, k) + 1e-9)
        << f;
  }
}

TEST(Vectorize, IdentitiesOnRandomMatrices) {
  std::mt19937_64 gen(17);
  const int n = 2, k = 3;
  const ComplexMatrix x = random_complex(gen, n * k, n);
  EXPECT_NEAR(vectorize(x).norm(), x.norm(), 1e-12);
  EXPECT_LT((devectorize(vectorize(x), n * k, n) - x).norm(), 1e-15);
  const ComplexMatrix h = random_complex(gen, n * k, n * k);
  EXPECT_LT((vectorize(h * x) - left_action(h, n) * vectorize(x)).norm(), 1e-12);
  const ComplexVector v = vectorize(ComplexMatrix::Identity(2, 2));
  ComplexVector expect(4);
  expect << 1, 0, 0, 1;
  EXPECT_LT((v - expect).norm(), 1e-15);
}

TEST(PdetMin, SingleBlockIsProductDistance) {
  const MatrixLattice m({ComplexMatrix::Constant(1, 1, 1.0),
                         ComplexMatrix::Constant(1, 1, Complex(0, 1))},
                        1, 1);
  EXPECT_NEAR(pdet_min(m).pdet, product_distance(m.lattice()).p, 1e-12);
}

TEST(PdetMin, GoldenOrderAndScaling) {
  const CatalogLattice g = resolve_lattice("golden");
  ASSERT_TRUE(g.matrix.has_value());
  const PdetMin pm = pdet_min(*g.matrix);
  EXPECT_NEAR(pm.pdet, 1.0, 1e-9);
  std::vector<ComplexMatrix> scaled;
  for (const auto& gen : g.matrix->generators()) scaled.push_back(2.0 * gen);
  const MatrixLattice m2(scaled, 2, 1);
  EXPECT_NEAR(pdet_min(m2).delta, pm.delta, 1e-9);
}

TEST(PdetMin, NormBoundsDeterminant) {
  // ||X||^2 >= nk |pdet X|^{2/(nk)} by AM-GM on singular values.
  const CatalogLattice g = resolve_lattice("golden");
  const MatrixLattice& m = *g.matrix;
  for_box(8, 1, [&](const IntVector& u) {
    if (u.isZero()) return;
    const ComplexMatrix x = m.element(u);
    const double p = std::abs(pdet(x, 2));
    EXPECT_GE(x.squaredNorm() * (1 + 1e-12), 2.0 * std::pow(p, 1.0));
  });
}

TEST(LatticeJson, RoundTrip) {
  std::mt19937_64 gen(2);
  const Lattice lat(random_basis(gen, 4), "random");
  const Lattice back = lattice_from_json(lattice_to_json(lat));
  EXPECT_EQ(back.provenance(), "random");
  EXPECT_LT((back.basis() - lat.basis()).norm(), 1e-15);
}

TEST(Sublattice, ScaledGaussianIntegers) {
  const Lattice z = Lattice::integer(1);
  EXPECT_TRUE(is_sublattice(z.scaled(2.0), z));
  EXPECT_FALSE(is_sublattice(z, z.scaled(2.0)));
  ComplexMatrix s(1, 1);
  s(0, 0) = Complex(2, 1);
  EXPECT_TRUE(is_sublattice(z.transformed(s), z));
  const IntMatrix m = sublattice_coordinates(z.transformed(s), z);
  EXPECT_EQ(std::llabs(static_cast<long long>(
                std::llround(m.cast<double>().determinant()))),
            5);
}

}  // namespace
}  // namespace latsec
