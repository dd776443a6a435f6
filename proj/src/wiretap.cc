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

#include "latsec/wiretap.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "latsec/channel.h"
#include "latsec/errors.h"
#include "latsec/gaussian.h"

namespace latsec {
namespace {

constexpr std::size_t kMaxMessages = 4096;
constexpr double kRateTol = 1e-9;

// Lower-triangular basis of the column lattice of a (square, nonsingular)
// integer matrix, by unimodular column operations.
IntMatrix hermite_lower(IntMatrix a) {
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i) {
    while (true) {
      int pivot = -1;
      for (int j = i; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pivot < 0 || std::llabs(a(i, j)) < std::llabs(a(i, pivot))) pivot = j;
      }
      if (pivot < 0) throw ConsistencyError("nesting matrix is singular");
      a.col(i).swap(a.col(pivot));
      bool done = true;
      for (int j = i + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        const int64_t q = a(i, j) / a(i, i);
        a.col(j) -= q * a.col(i);
        if (a(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (a(i, i) < 0) a.col(i) *= -1;
  }
  return a;
}

std::vector<int64_t> key_of(const IntVector& u) {
  return std::vector<int64_t>(u.data(), u.data() + u.size());
}

// u - M floor(M^{-1} u): the representative in the parallelotope of M.
IntVector reduce_mod(const IntMatrix& m, const RealMatrix& m_inv,
                     const IntVector& u) {
  const RealVector c = m_inv * u.cast<double>();
  IntVector f(c.size());
  for (int i = 0; i < c.size(); ++i)
    f(i) = static_cast<int64_t>(std::floor(c(i) + 1e-9));
  return u - m * f;
}

bool nesting_feasible(const Lattice& base, Complex s) {
  if (std::abs(s.imag()) < 1e-15) return true;
  const int k = base.dim_complex();
  const Lattice scaled =
      base.transformed(ComplexMatrix(ComplexMatrix::Identity(k, k) * s));
  return is_sublattice(scaled, base);
}

// Scalars with |s|^2 = q: the real root if q is a square, then Gaussian
// integers a + bi, a - bi with a >= b > 0.
std::vector<Complex> scalars_of_norm(int64_t q) {
  std::vector<Complex> out;
  const int64_t r = static_cast<int64_t>(std::llround(std::sqrt(double(q))));
  if (r * r == q) out.emplace_back(static_cast<double>(r), 0.0);
  for (int64_t b = 1; 2 * b * b <= q; ++b) {
    const int64_t a2 = q - b * b;
    const int64_t a = static_cast<int64_t>(std::llround(std::sqrt(double(a2))));
    if (a * a != a2) continue;
    out.emplace_back(static_cast<double>(a), static_cast<double>(b));
    out.emplace_back(static_cast<double>(a), -static_cast<double>(b));
  }
  return out;
}

std::optional<Complex> feasible_scalar(const Lattice& base, int64_t q) {
  for (const Complex& s : scalars_of_norm(q))
    if (nesting_feasible(base, s)) return s;
  return std::nullopt;
}

// Reduces an n_e x n block to an n x n block with the same Gram matrix.
ComplexMatrix square_block(const ComplexMatrix& h) {
  if (h.rows() < h.cols())
    throw InvalidSpec("eavesdropper needs at least as many antennas as the sender");
  if (h.rows() == h.cols()) return h;
  return tall_reduction(h).r;
}

}  // namespace

double nesting_rate(Complex s, int n) { return 2.0 * n * std::log(std::abs(s)); }

WiretapCode build_code(const Lattice& base, const CodeParams& params,
                       const MatrixLattice* matrix_base) {
  WiretapCode code;
  code.base = base;
  code.n = matrix_base ? matrix_base->block_size() : 1;
  if (matrix_base) code.matrix_base = *matrix_base;
  const int n = code.n;
  const int dim = base.dim_complex();
  if (dim % (n * n) != 0) throw InvalidSpec("base dimension is not n^2 k");
  code.k = dim / (n * n);
  if (!(params.P > 0)) throw InvalidSpec("power must be positive");
  if (!(params.power_backoff >= 0 && params.power_backoff < 1))
    throw InvalidSpec("power_backoff must lie in [0, 1)");

  Complex s;
  if (params.nesting_scalar) {
    s = *params.nesting_scalar;
    const double norm = std::norm(s);
    if (std::abs(norm - std::round(norm)) > 1e-9 || std::round(norm) < 2 ||
        std::abs(s.real() - std::round(s.real())) > 1e-9 ||
        std::abs(s.imag() - std::round(s.imag())) > 1e-9)
      throw InvalidSpec("nesting scalar must be a Gaussian integer of norm >= 2");
    if (!nesting_feasible(base, s))
      throw NestingError("scalar does not map the base lattice into itself",
                         nesting_rate(s, n));
    if (params.R > 0 && std::abs(nesting_rate(s, n) - params.R) > kRateTol)
      throw NestingError("R does not match the nesting scalar",
                         nesting_rate(s, n));
  } else {
    if (!(params.R > 0)) throw InvalidSpec("R must be positive");
    const double q_target = std::exp(params.R / n);
    const int64_t q = std::llround(q_target);
    std::optional<Complex> found;
    if (q >= 2 && std::abs(q - q_target) <= kRateTol * q_target)
      found = feasible_scalar(base, q);
    if (!found) {
      double nearest = std::numeric_limits<double>::quiet_NaN();
      double best = std::numeric_limits<double>::infinity();
      const int64_t limit = std::max<int64_t>(64, 4 * q + 4);
      for (int64_t cand = 2; cand <= limit; ++cand) {
        if (!feasible_scalar(base, cand)) continue;
        const double r = n * std::log(static_cast<double>(cand));
        if (std::abs(r - params.R) < best) {
          best = std::abs(r - params.R);
          nearest = r;
        }
      }
      throw NestingError("no scalar nesting realises R = " +
                             std::to_string(params.R),
                         nearest);
    }
    s = *found;
  }
  code.s = s;
  code.R = nesting_rate(s, n);
  code.R_prime = params.R_prime;
  code.P = params.P;
  code.theta_t = params.theta_t;
  code.sigma_s = std::sqrt(params.P * (1.0 - params.power_backoff) / n);

  const double big_n = static_cast<double>(dim);
  const double log_ve = big_n * std::log(M_PI * M_E * code.sigma_s * code.sigma_s) -
                        n * code.k * params.R_prime;
  code.alpha_e = std::exp((log_ve - std::log(base.volume())) / (2.0 * big_n));
  code.alpha_b = code.alpha_e / std::abs(s);

  const double log_messages = 2.0 * big_n * std::log(std::abs(s));
  if (log_messages > std::log(static_cast<double>(kMaxMessages)) + 1e-9)
    throw InvalidSpec("code has more than " + std::to_string(kMaxMessages) +
                      " messages");

  code.lattice_e = base.scaled(code.alpha_e);
  code.lattice_b = code.lattice_e.transformed(
      ComplexMatrix(ComplexMatrix::Identity(dim, dim) / s));
  code.nesting = sublattice_coordinates(code.lattice_e, code.lattice_b);

  const IntMatrix h = hermite_lower(code.nesting);
  const RealMatrix m_inv = code.nesting.cast<double>().inverse();
  const int d = static_cast<int>(h.rows());
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(h(i, i));
  IntVector u = IntVector::Zero(d);
  for (std::size_t m = 0; m < count; ++m) {
    std::size_t rest = m;
    for (int i = 0; i < d; ++i) {
      u(i) = static_cast<int64_t>(rest % h(i, i));
      rest /= h(i, i);
    }
    const IntVector leader = reduce_mod(code.nesting, m_inv, u);
    code.leader_index.emplace(key_of(leader), code.leaders.size());
    code.leaders.push_back(leader);
    code.leader_points.push_back(to_complex(code.lattice_b.point(leader)));
  }
  if (code.leader_index.size() != count)
    throw ConsistencyError("coset leaders are not distinct");
  return code;
}

std::size_t coset_index_coeffs(const WiretapCode& code, IntVector u) {
  const RealMatrix m_inv = code.nesting.cast<double>().inverse();
  const IntVector r = reduce_mod(code.nesting, m_inv, u);
  const auto it = code.leader_index.find(key_of(r));
  if (it == code.leader_index.end())
    throw ConsistencyError("coset representative not found");
  return it->second;
}

std::size_t coset_index(const WiretapCode& code, const ComplexVector& x) {
  const RealVector c =
      code.lattice_b.basis().partialPivLu().solve(to_real(x));
  IntVector u(c.size());
  for (int i = 0; i < c.size(); ++i) {
    const double r = std::round(c(i));
    if (std::abs(r - c(i)) > 1e-6) throw InvalidSpec("not a point of lattice_b");
    u(i) = static_cast<int64_t>(r);
  }
  return coset_index_coeffs(code, u);
}

WiretapEncoder::WiretapEncoder(const WiretapCode& code) : code_(code) {
  SamplerOptions opts;
  opts.max_table_points = 20'000;
  const GaussianSpec spec = GaussianSpec::isotropic(code.sigma_s);
  samplers_.reserve(code.messages());
  for (std::size_t m = 0; m < code.messages(); ++m)
    samplers_.push_back(std::make_unique<DiscreteGaussianSampler>(
        code.lattice_e, code.leader_points[m], spec, opts));
}

ComplexVector WiretapEncoder::encode(std::size_t m, Rng& rng) const {
  return samplers_.at(m)->sample(rng);
}

PowerEntropyBounds power_entropy_bounds(const WiretapCode& code) {
  const double t = code.theta_t;
  const double theta = (M_PI - t) / M_PI;
  const double eps = flatness_factor(
      code.lattice_e, GaussianSpec::isotropic(std::sqrt(theta) * code.sigma_s));
  PowerEntropyBounds out{};
  out.epsilon = eps;
  if (eps >= 1.0) {
    out.power_bound = out.nu = std::numeric_limits<double>::infinity();
    return out;
  }
  out.power_bound = 2.0 * M_PI * eps / (1.0 - eps) * code.sigma_s * code.sigma_s;
  out.nu = -std::log1p(-eps) +
           M_PI * eps * (1.0 + 1.0 / std::pow(t, 4)) / (1.0 - eps);
  return out;
}

double auxiliary_entropy(const WiretapEncoder& enc, std::size_t m) {
  const DiscreteGaussianSampler& s = enc.sampler(m);
  if (!s.is_table()) throw SamplerError("entropy needs a tabulated sampler");
  double h = 0.0;
  for (double w : s.weights())
    if (w > 0) h -= w * std::log(w);
  return h / (enc.code().n * enc.code().k);
}

double leakage_bound(double eps, int n, int k, double R) {
  if (eps <= 0) return 0.0;
  if (8.0 * eps > 1.0 / M_E) return std::numeric_limits<double>::infinity();
  return 8.0 * n * n * k * eps * R - 8.0 * eps * std::log(8.0 * eps);
}

ComplexMatrix effective_channel(const std::vector<ComplexMatrix>& blocks,
                                int n) {
  if (blocks.empty()) throw InvalidSpec("no channel blocks");
  const int rows = static_cast<int>(blocks[0].rows());
  const int cols = static_cast<int>(blocks[0].cols());
  if (cols != n) throw InvalidSpec("channel blocks must have n columns");
  const int k = static_cast<int>(blocks.size());
  ComplexMatrix bd = ComplexMatrix::Zero(rows * k, cols * k);
  for (int i = 0; i < k; ++i) {
    if (blocks[i].rows() != rows || blocks[i].cols() != cols)
      throw InvalidSpec("channel blocks differ in shape");
    bd.block(i * rows, i * cols, rows, cols) = blocks[i];
  }
  return left_action(bd, n);
}

double log_det_statistic(const std::vector<ComplexMatrix>& blocks, double rho) {
  if (blocks.empty()) throw InvalidSpec("no channel blocks");
  double acc = 0.0;
  for (const ComplexMatrix& h : blocks) {
    const int m = static_cast<int>(h.rows());
    const ComplexMatrix g =
        ComplexMatrix::Identity(m, m) + rho * h * h.adjoint();
    acc += std::log(g.ldlt().vectorD().real().prod());
  }
  return acc / static_cast<double>(blocks.size());
}

double eve_flatness(const WiretapCode& code,
                    const std::vector<ComplexMatrix>& he_blocks, double sigma_e2) {
  if (static_cast<int>(he_blocks.size()) != code.k)
    throw InvalidSpec("expected one channel block per code block");
  if (!(sigma_e2 > 0)) throw InvalidSpec("noise variance must be positive");
  std::vector<ComplexMatrix> sq;
  for (const ComplexMatrix& h : he_blocks) sq.push_back(square_block(h));
  const ComplexMatrix heff = effective_channel(sq, code.n);
  const int dim = static_cast<int>(heff.rows());
  const double s2 = code.sigma_s * code.sigma_s;
  const ComplexMatrix hh = heff * heff.adjoint();
  ComplexMatrix sigma_inv = hh.inverse() / s2 +
                            ComplexMatrix::Identity(dim, dim) / sigma_e2;
  sigma_inv = 0.5 * (sigma_inv + sigma_inv.adjoint()).eval();
  ComplexMatrix sigma = sigma_inv.inverse();
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();
  return flatness_factor(code.lattice_e.transformed(heff),
                         GaussianSpec::correlated(sigma));
}

SecrecyCheck secrecy_threshold_check(const WiretapCode& code,
                                     const std::vector<ComplexMatrix>& he_blocks,
                                     double sigma_e2, double c) {
  const int n = code.n, k = code.k;
  SecrecyCheck out{};
  out.epsilon_k = eve_flatness(code, he_blocks, sigma_e2);
  out.c_bar_e = log_det_statistic(he_blocks, code.P / sigma_e2);
  out.leakage_bound = leakage_bound(out.epsilon_k, n, k, code.R);

  const Lattice dual_e = dual(code.lattice_e);
  if (n == 1) {
    out.product_term = std::pow(product_distance(dual_e).p, 1.0 / k);
  } else {
    std::vector<ComplexMatrix> gens;
    for (int j = 0; j < dual_e.dim_real(); ++j) {
      const ComplexVector v = to_complex(dual_e.basis().col(j));
      gens.push_back(devectorize(v, n * k, n));
    }
    const MatrixLattice mdual(std::move(gens), n, k, "dual");
    out.product_term = std::pow(pdet_min(mdual).pdet, 1.0 / (n * k));
  }
  out.condition_lhs = 2.0 * c * std::sqrt(static_cast<double>(n)) *
                      std::exp(out.c_bar_e / (2.0 * n)) /
                      (out.product_term * code.sigma_s * std::sqrt(2.0 * M_PI));
  out.condition_met = out.condition_lhs <= 1.0;
  return out;
}

CompoundCheck compound_sets_check(const std::vector<ComplexMatrix>& hb,
                                  const std::vector<ComplexMatrix>& he,
                                  double c_b, double c_e, double rho_b,
                                  double rho_e) {
  constexpr double kTol = 1e-12;
  auto all_equal = [](const std::vector<ComplexMatrix>& v) {
    for (const ComplexMatrix& h : v)
      if ((h - v.front()).norm() > 1e-12 * (1.0 + v.front().norm())) return false;
    return true;
  };
  CompoundCheck out{};
  out.stat_b = log_det_statistic(hb, rho_b);
  out.stat_e = log_det_statistic(he, rho_e);
  out.static_b = all_equal(hb);
  out.static_e = all_equal(he);
  out.varying_b = out.stat_b >= c_b - kTol;
  out.varying_e = out.stat_e <= c_e + kTol;
  out.compound_b = out.static_b && out.varying_b;
  out.compound_e = out.static_e && out.varying_e;
  return out;
}

}  // namespace latsec
