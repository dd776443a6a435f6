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

#include "latsec/lemma_checks.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "latsec/enumeration.h"
#include "latsec/errors.h"
#include "latsec/parallel.h"
#include "latsec/sampler.h"

namespace latsec {
namespace {

constexpr uint64_t kChunk = 1 << 15;
constexpr uint64_t kStreamMixture = 0x4d495854;
constexpr uint64_t kStreamTransform = 0x4c494e54;

// sqrt(Sigma) g with g standard complex normal, i.e. a draw from f_{sqrt(Sigma)}.
ComplexVector gaussian_draw(const ComplexMatrix& sqrt_sigma, Rng& rng) {
  ComplexVector g(sqrt_sigma.cols());
  for (int i = 0; i < g.size(); ++i) g(i) = complex_normal(rng, 1.0);
  return sqrt_sigma * g;
}

}  // namespace

MixtureCheck regev_mixture_check(const Lattice& lat, const ComplexVector& shift,
                                 const ComplexMatrix& sigma1,
                                 const ComplexMatrix& sigma2, uint64_t trials,
                                 uint64_t seed, int bins, int threads) {
  const int k = lat.dim_complex();
  check_positive_definite(sigma1);
  check_positive_definite(sigma2);
  const ComplexMatrix sigma =
      (sigma1.inverse() + sigma2.inverse()).inverse().eval();
  const ComplexMatrix sigma_h = 0.5 * (sigma + sigma.adjoint());
  MixtureCheck out{};
  out.epsilon = flatness_factor(lat, GaussianSpec::correlated(sigma_h));
  out.bound = 4.0 * out.epsilon;
  if (out.epsilon > 0.5)
    throw NotSmoothEnough("mixture check needs flatness <= 1/2", out.epsilon);

  const DiscreteGaussianSampler sampler(lat, shift,
                                        GaussianSpec::correlated(sigma1));
  const ComplexMatrix sqrt2 = hermitian_sqrt(sigma2);
  const GaussianBinning binning(GaussianSpec::correlated(sigma1 + sigma2), k,
                                bins > 0 ? bins : default_bins(k));
  std::vector<uint64_t> counts(binning.cells(), 0);
  std::mutex mu;
  const uint64_t chunks = (trials + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    Rng rng = make_rng(seed, kStreamMixture, c);
    const uint64_t begin = c * kChunk;
    const uint64_t end = std::min(trials, begin + kChunk);
    std::vector<std::pair<std::size_t, uint32_t>> local;
    std::map<std::size_t, uint32_t> hits;
    for (uint64_t t = begin; t < end; ++t) {
      const ComplexVector z = sampler.sample(rng) + gaussian_draw(sqrt2, rng);
      ++hits[binning.cell(z)];
    }
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [cell, n] : hits) counts[cell] += n;
  });
  out.l1 = l1_to_uniform(counts, seed);
  return out;
}

ChiSquare linear_transform_check(const Lattice& lat, const ComplexVector& shift,
                                 const ComplexMatrix& sigma,
                                 const ComplexMatrix& a, uint64_t trials,
                                 uint64_t seed, int threads) {
  const int k = lat.dim_complex();
  if (a.rows() != k || a.cols() != k) throw InvalidSpec("A has the wrong shape");
  const double scale = a.norm();
  if (std::abs(a.determinant()) <= 1e-12 * std::pow(scale, k))
    throw InvalidSpec("A is singular");
  const ComplexVector c = shift.size() == 0 ? ComplexVector::Zero(k) : shift;

  const DiscreteGaussianSampler source(lat, c, GaussianSpec::correlated(sigma));
  const ComplexMatrix image_cov = a * sigma * a.adjoint();
  SamplerOptions table_opts;
  table_opts.method = SamplerOptions::Method::kTable;
  const Lattice image = lat.transformed(a);
  const ComplexVector image_shift = a * c;
  const DiscreteGaussianSampler target(
      image, image_shift,
      GaussianSpec::correlated(0.5 * (image_cov + image_cov.adjoint())),
      table_opts);

  std::map<std::vector<int64_t>, std::size_t> index;
  for (std::size_t i = 0; i < target.support_size(); ++i) {
    const IntVector u = target.support_coeffs(i);
    index.emplace(std::vector<int64_t>(u.data(), u.data() + u.size()), i);
  }
  const RealMatrix image_inv = image.basis().inverse();
  const std::size_t outside = target.support_size();
  std::vector<uint64_t> counts(outside + 1, 0);
  std::mutex mu;
  const uint64_t chunks = (trials + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t ch) {
    Rng rng = make_rng(seed, kStreamTransform, ch);
    const uint64_t begin = ch * kChunk;
    const uint64_t end = std::min(trials, begin + kChunk);
    std::map<std::size_t, uint32_t> hits;
    std::vector<int64_t> key(2 * k);
    for (uint64_t t = begin; t < end; ++t) {
      const ComplexVector y = a * source.sample(rng);
      const RealVector u = image_inv * to_real(y - image_shift);
      for (int j = 0; j < 2 * k; ++j) key[j] = std::llround(u(j));
      const auto it = index.find(key);
      ++hits[it == index.end() ? outside : it->second];
    }
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [cell, n] : hits) counts[cell] += n;
  });
  return chi_square(counts, target.weights());
}

double log_tilted_coset_sum(const Lattice& lat, const ComplexVector& shift,
                            const ComplexMatrix& whitening,
                            const ComplexVector& center,
                            const ComplexVector& tilt) {
  const int k = lat.dim_complex();
  const int n = lat.dim_real();
  const ComplexMatrix gram_inv = (whitening.adjoint() * whitening).inverse();
  // The summand is a Gaussian bump peaking at center + (W^H W)^{-1} tilt / 2.
  const ComplexVector peak = center + 0.5 * gram_inv * tilt;
  const RealMatrix w = real_form(whitening);
  Enumerator en(w * lat.basis());
  const double c = 3.0;  // C(3)^n < 1e-11 for every n >= 1
  const double r2 = M_PI * c * c * n;
  const RealVector target = w * to_real(peak - shift);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> terms;
  en.for_each(target, r2, [&](const IntVector& u, double) {
    const ComplexVector x = to_complex(lat.point(u)) + shift;
    const double e = -(whitening * (x - center)).squaredNorm() +
                     tilt.dot(x).real();
    terms.push_back(e);
    best = std::max(best, e);
  });
  if (terms.empty()) throw TailToleranceError("empty coset enumeration");
  double s = 0.0;
  for (double e : terms) s += std::exp(e - best);
  (void)k;
  return best + std::log(s);
}

MgfCheck subgaussian_mgf_check(const Lattice& lat, const ComplexVector& shift,
                               double sigma, const ComplexMatrix& a,
                               const std::vector<ComplexVector>& t_vectors) {
  const int k = lat.dim_complex();
  MgfCheck out{};
  out.epsilon = flatness_factor(lat, GaussianSpec::isotropic(sigma));
  if (!(out.epsilon < 1.0))
    throw NotSmoothEnough("subgaussian check needs flatness < 1", out.epsilon);
  const ComplexVector c = shift.size() == 0 ? ComplexVector::Zero(k) : shift;
  const ComplexMatrix w = ComplexMatrix::Identity(k, k) / sigma;
  const ComplexVector zero = ComplexVector::Zero(k);
  const double log_norm = log_tilted_coset_sum(lat, c, w, zero, zero);
  const double log_factor =
      std::log((1.0 + out.epsilon) / (1.0 - out.epsilon));
  out.worst_ratio = 0.0;
  for (const ComplexVector& t : t_vectors) {
    // Re(t^H A x) = Re((A^H t)^H x).
    const ComplexVector s = a.adjoint() * t;
    const double log_mgf = log_tilted_coset_sum(lat, c, w, zero, s) - log_norm;
    const double log_bound = log_factor + 0.25 * sigma * sigma * s.squaredNorm();
    const double ratio = std::exp(log_mgf - log_bound);
    out.ratios.push_back(ratio);
    out.worst_ratio = std::max(out.worst_ratio, ratio);
  }
  return out;
}

}  // namespace latsec
