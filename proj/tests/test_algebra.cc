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
#include "latsec/cyclic_algebra.h"
#include "latsec/errors.h"
#include "latsec/gaussian.h"
#include "latsec/lattice.h"
#include "latsec/matrix_lattice.h"
#include "latsec/number_field.h"

namespace latsec {
namespace {

// Discriminant of Q(zeta_m): (-1)^{phi/2} m^phi / prod_{p | m} p^{phi/(p-1)}.
double cyclotomic_discriminant(int m) {
  int phi = m;
  std::vector<int> primes;
  for (int p = 2, r = m; p <= r; ++p)
    if (r % p == 0) {
      primes.push_back(p);
      phi = phi / p * (p - 1);
      while (r % p == 0) r /= p;
    }
  double d = std::pow(m, phi);
  for (int p : primes) d /= std::pow(p, phi / (p - 1));
  return (phi / 2) % 2 ? -d : d;
}

RationalVector random_element(std::mt19937_64& gen, int dim, int box) {
  std::uniform_int_distribution<int> ud(-box, box);
  RationalVector a(dim);
  for (auto& x : a) x = ud(gen);
  return a;
}

TEST(NumberField, CyclotomicDiscriminants) {
  const std::vector<std::pair<const char*, int>> fields = {
      {"qi", 4}, {"qzeta5", 5}, {"qzeta7", 7}, {"qzeta8", 8}, {"qzeta12", 12},
      {"qzeta15", 15}};
  for (const auto& [name, m] : fields)
    EXPECT_DOUBLE_EQ(to_double(catalog_field(name).discriminant()),
                     cyclotomic_discriminant(m))
        << name;
}

TEST(NumberField, RejectsRealFieldsAndWrongDiscriminant) {
  EXPECT_THROW(NumberFieldCtx("real", {-2, 0, 1}), InvalidSpec);
  EXPECT_THROW(NumberFieldCtx("wrong", {1, 0, 1}, -8), ConsistencyError);
}

TEST(NumberField, EmbeddingsAreRingHomomorphisms) {
  std::mt19937_64 gen(1);
  for (const auto& name : field_names()) {
    const NumberFieldCtx& f = catalog_field(name);
    for (int t = 0; t < 10; ++t) {
      const RationalVector a = random_element(gen, f.degree(), 3);
      const RationalVector b = random_element(gen, f.degree(), 3);
      const ComplexVector ea = f.embed_all(a), eb = f.embed_all(b);
      const ComplexVector eab = f.embed_all(f.multiply(a, b));
      EXPECT_LT((eab - ea.cwiseProduct(eb)).norm(), 1e-9 * (1 + eab.norm())) << name;
      Complex prod = 1.0, sum = 0.0;
      for (int i = 0; i < ea.size(); ++i) {
        prod *= ea(i);
        sum += ea(i);
      }
      EXPECT_NEAR(prod.real(), to_double(f.norm(a)), 1e-7 * (1 + std::abs(prod)));
      EXPECT_NEAR(sum.real(), to_double(f.trace(a)), 1e-9 * (1 + std::abs(sum)));
    }
  }
}

TEST(IdealLattice, VolumesFromGram) {
  EXPECT_NEAR(resolve_lattice("qi").lattice.volume(), 1.0, 1e-12);
  EXPECT_NEAR(resolve_lattice("qzeta5").lattice.volume(), std::sqrt(125.0) / 4, 1e-9);
  EXPECT_NEAR(resolve_lattice("qzeta8").lattice.volume(), 4.0, 1e-9);
  for (const auto& name : field_names()) {
    const CatalogLattice c = resolve_lattice(name + "/ideal");
    const Lattice& lat = c.lattice;
    const double gram_volume = std::sqrt(lat.gram().determinant());
    const int k = lat.dim_complex();
    EXPECT_NEAR(gram_volume,
                std::pow(2.0, -k) * std::sqrt(*c.discriminant) * c.ideal_norm,
                1e-6 * gram_volume)
        << name;
  }
}

TEST(IdealLattice, CodifferentNormAndPairing) {
  const NumberFieldCtx& qi = catalog_field("qi");
  EXPECT_EQ(codifferent_ideal(qi).norm, Rational(1, 4));
  EXPECT_TRUE(same_lattice(codifferent_lattice(qi), Lattice::integer(1)));
  const NumberFieldCtx& z5 = catalog_field("qzeta5");
  EXPECT_EQ(codifferent_ideal(z5).norm, Rational(1, 125));
  const Lattice p = resolve_lattice("qzeta5").lattice;
  const Lattice d = codifferent_lattice(z5);
  const RealMatrix pairing = d.basis().transpose() * p.basis();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(pairing(i, j), std::round(pairing(i, j)), 1e-9);
  EXPECT_NEAR(std::abs(pairing.determinant()), 1.0, 1e-9);
}

TEST(IdealLattice, RejectsNonIdealModule) {
  const NumberFieldCtx& qi = catalog_field("qi");
  // Z + 2iZ is not closed under multiplication by i.
  EXPECT_THROW(make_ideal(qi, {RationalVector{1, 0}, RationalVector{0, 2}}),
               ConsistencyError);
}

TEST(IdealLattice, ProductDistanceAndHermiteBounds) {
  for (const auto& name : field_names()) {
    const double d = std::abs(to_double(catalog_field(name).discriminant()));
    const int k = catalog_field(name).k();
    if (k > 3) continue;  // the quartic fields are covered by the acceptance run
    for (const char* suffix : {"", "/dual", "/ideal"}) {
      const Lattice lat = resolve_lattice(name + suffix).lattice;
      const double np_bound = std::pow(2.0, k / 2.0) / std::pow(d, 0.25);
      const double h_bound = 2.0 * k / std::pow(d, 1.0 / (2 * k));
      EXPECT_GE(product_distance(lat).np, np_bound - 1e-9) << name << suffix;
      EXPECT_GE(hermite_invariant(lat), h_bound - 1e-9) << name << suffix;
    }
  }
  EXPECT_NEAR(product_distance(resolve_lattice("qi").lattice).np, 1.0, 1e-9);
  EXPECT_NEAR(hermite_invariant(resolve_lattice("qzeta5").lattice),
              4.0 / std::pow(125.0, 0.25), 1e-9);
}

TEST(IdealLattice, FlatnessAtDiscriminantScale) {
  const double cn_base = banaszczyk_constant(1.0);
  for (const auto& name : field_names()) {
    const NumberFieldCtx& f = catalog_field(name);
    const int k = f.k();
    const double d = std::abs(to_double(f.discriminant()));
    const double sigma = std::pow(d, 1.0 / (2 * k)) / std::sqrt(2 * M_PI);
    const double cn = std::pow(cn_base, 2 * k);
    EXPECT_LE(flatness_factor(resolve_lattice(name).lattice,
                              GaussianSpec::isotropic(sigma)),
              cn / (1 - cn))
        << name;
  }
}

class Golden : public ::testing::Test {
 protected:
  const CyclicAlgebraCtx& alg = golden_algebra();
};

TEST_F(Golden, LeftRegularRepresentation) {
  const RationalVector one = alg.unit(0);
  const RationalVector u = alg.unit(4);
  EXPECT_LT((alg.left_regular_embedded(one, 0) - ComplexMatrix::Identity(2, 2)).norm(),
            1e-14);
  const ComplexMatrix pu = alg.left_regular_embedded(u, 0);
  EXPECT_LT((pu * pu - Complex(0, 1) * ComplexMatrix::Identity(2, 2)).norm(), 1e-12);
  EXPECT_TRUE(alg.multiply(u, u) == alg.from_components(
                  {alg.ext_from_center(alg.gamma()), alg.ext_zero()}));
  std::mt19937_64 gen(2);
  for (int t = 0; t < 20; ++t) {
    const RationalVector a = random_element(gen, alg.dim(), 4);
    const RationalVector b = random_element(gen, alg.dim(), 4);
    const ComplexMatrix lhs = alg.psi(alg.multiply(a, b));
    const ComplexMatrix rhs = alg.psi(a) * alg.psi(b);
    EXPECT_LT((lhs - rhs).norm(), 1e-10 * (1 + lhs.norm()));
  }
}

TEST_F(Golden, OrderLatticeVolumeAndPdet) {
  const MatrixLattice m = multiblock_embed(alg);
  EXPECT_LT((alg.psi(alg.unit(0)) - ComplexMatrix::Identity(2, 2)).norm(), 1e-14);
  const double gram_volume = std::sqrt(m.lattice().gram().determinant());
  const double formula = std::pow(2.0, -4) * std::sqrt(std::abs(to_double(alg.discriminant())));
  EXPECT_NEAR(gram_volume, formula, 1e-6 * formula);
  EXPECT_NEAR(pdet_min(m).pdet, 1.0, 1e-9);
}

TEST_F(Golden, CodifferentPairingAndNorm) {
  const MatrixLattice p = multiblock_embed(alg);
  const MatrixLattice d = algebra_codifferent(alg);
  const int dim = alg.dim();
  RealMatrix pairing(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      pairing(i, j) = (d.generators()[i].adjoint() * p.generators()[j]).trace().real();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      EXPECT_NEAR(pairing(i, j), std::round(pairing(i, j)), 1e-9);
  EXPECT_NEAR(std::abs(pairing.determinant()), 1.0, 1e-9);
  // The codifferent has index |d(order/Z)| over the order, so its reduced
  // norm is d^{-1/n}.
  const std::vector<RationalVector> basis = codifferent_basis(alg);
  RationalMatrix coords(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) coords(j, i) = basis[i][j];
  const double index = std::abs(to_double(coords.determinant()));
  const double disc = std::abs(to_double(alg.discriminant()));
  EXPECT_NEAR(std::pow(index, 1.0 / alg.n()), std::pow(disc, -1.0 / alg.n()), 1e-12);
}

TEST_F(Golden, ReducedNormIdentity) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 100; ++t) {
    const RationalVector a = random_element(gen, alg.dim(), 5);
    const double lhs = std::norm(alg.psi(a).determinant());
    const double rhs = std::abs(to_double(alg.norm_q(a)));
    EXPECT_NEAR(lhs, rhs, 1e-8 * std::max(1.0, rhs));
  }
}

TEST_F(Golden, NoZeroDeterminantInSmallBox) {
  const MatrixLattice m = multiblock_embed(alg);
  double best = INFINITY;
  IntVector u = IntVector::Constant(alg.dim(), -2);
  while (true) {
    if (!u.isZero()) best = std::min(best, std::abs(m.element(u).determinant()));
    int i = 0;
    while (i < u.size() && u(i) == 2) u(i++) = -2;
    if (i == u.size()) break;
    ++u(i);
  }
  EXPECT_NEAR(best, 1.0, 1e-9);
}

TEST(TrivialAlgebra, ReducesToField) {
  const NumberFieldCtx& f = catalog_field("qzeta5");
  const CyclicAlgebraCtx t = trivial_algebra(f);
  EXPECT_TRUE(same_lattice(algebra_codifferent(t).lattice(), codifferent_lattice(f)));
  EXPECT_TRUE(same_lattice(multiblock_embed(t).lattice(),
                           ideal_lattice(f, ring_of_integers(f))));
}

}  // namespace
}  // namespace latsec
