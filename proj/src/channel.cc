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

#include "latsec/channel.h"

#include <algorithm>
#include <cmath>

#include "latsec/errors.h"
#include "latsec/rates.h"

namespace latsec {
namespace {

constexpr uint64_t kLlnStream = 0x6c6c6e;
constexpr uint64_t kErgodicStream = 0x657267;
constexpr uint64_t kChunk = 1 << 12;

ComplexMatrix rayleigh_block(int rows, int cols, Rng& rng) {
  ComplexMatrix h(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) h(i, j) = complex_normal(rng);
  return h;
}

ComplexMatrix static_block(const FadingSpec& spec) {
  if (spec.static_value.size() != 0) return spec.static_value;
  return ComplexMatrix::Identity(spec.n_rx, spec.n_tx);
}

// Gains h_i for i < k of the alternating renewal process. Dwell times are
// Pareto with P(T > t) = t^{-3/2} (mean 3); the first one follows the
// residual-life law so the process is stationary from time 0.
std::vector<double> adversarial_gains(const FadingSpec& spec, int k, Rng& rng) {
  std::vector<double> out(k);
  bool high = uniform01(rng) < 0.5;
  const double u0 = uniform01(rng);
  double switch_at = u0 < 1.0 / 3.0 ? 3.0 * u0
                                    : std::pow(1.0 - (3.0 * u0 - 1.0) / 2.0, -2.0);
  for (int i = 0; i < k; ++i) {
    while (switch_at <= i) {
      high = !high;
      switch_at += std::pow(1.0 - uniform01(rng), -2.0 / 3.0);
    }
    out[i] = high ? spec.adversarial_high : spec.adversarial_low;
  }
  return out;
}

std::vector<ComplexMatrix> draw_law(const FadingSpec& spec, FadingSpec::Law law,
                                    int k, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(k);
  switch (law) {
    case FadingSpec::Law::kStatic:
      blocks.assign(k, static_block(spec));
      break;
    case FadingSpec::Law::kRayleigh:
      for (int i = 0; i < k; ++i)
        blocks.push_back(rayleigh_block(spec.n_rx, spec.n_tx, rng));
      break;
    case FadingSpec::Law::kCustom:
      for (int i = 0; i < k; ++i)
        blocks.push_back(spec.sequence[i % spec.sequence.size()]);
      break;
    case FadingSpec::Law::kAdversarial:
      for (double g : adversarial_gains(spec, k, rng))
        blocks.push_back(ComplexMatrix::Identity(spec.n_rx, spec.n_tx) * g);
      break;
    case FadingSpec::Law::kBlock: {
      const int held = (k + spec.block_len - 1) / spec.block_len;
      const std::vector<ComplexMatrix> inner = draw_law(spec, spec.inner, held, rng);
      for (int i = 0; i < k; ++i) blocks.push_back(inner[i / spec.block_len]);
      break;
    }
  }
  return blocks;
}

void fix_phases(ComplexMatrix& r, ComplexMatrix& q) {
  for (int i = 0; i < r.rows(); ++i) {
    const double a = std::abs(r(i, i));
    if (a == 0) continue;
    const Complex ph = r(i, i) / a;
    r.row(i) *= std::conj(ph);
    q.col(i) *= ph;
  }
}

}  // namespace

void FadingSpec::validate() const {
  if (n_tx < 1 || n_rx < 1) throw InvalidSpec("antenna counts must be positive");
  if (n_rx < n_tx) throw InvalidSpec("receivers need at least n_tx antennas");
  if (!(noise_var > 0)) throw InvalidSpec("noise_var must be positive");
  if (!(snr > 0)) throw InvalidSpec("snr must be positive");
  if (law == Law::kBlock) {
    if (block_len < 1) throw InvalidSpec("block_len must be at least 1");
    if (inner == Law::kBlock || inner == Law::kCustom)
      throw InvalidSpec("block fading holds static, rayleigh or adversarial draws");
  }
  if (law == Law::kStatic && static_value.size() != 0 &&
      (static_value.rows() != n_rx || static_value.cols() != n_tx))
    throw InvalidSpec("static value has the wrong shape");
  if (law == Law::kCustom) {
    if (sequence.empty()) throw InvalidSpec("custom sequence is empty");
    for (const ComplexMatrix& h : sequence)
      if (h.rows() != n_rx || h.cols() != n_tx)
        throw InvalidSpec("custom sequence entry has the wrong shape");
  }
}

FadingSpec::Law parse_fading_law(const std::string& s) {
  if (s == "static") return FadingSpec::Law::kStatic;
  if (s == "rayleigh") return FadingSpec::Law::kRayleigh;
  if (s == "block") return FadingSpec::Law::kBlock;
  if (s == "custom") return FadingSpec::Law::kCustom;
  if (s == "adversarial") return FadingSpec::Law::kAdversarial;
  throw InvalidSpec("unknown fading law: " + s);
}

std::string fading_law_name(FadingSpec::Law law) {
  switch (law) {
    case FadingSpec::Law::kStatic: return "static";
    case FadingSpec::Law::kRayleigh: return "rayleigh";
    case FadingSpec::Law::kBlock: return "block";
    case FadingSpec::Law::kCustom: return "custom";
    case FadingSpec::Law::kAdversarial: return "adversarial";
  }
  return "unknown";
}

double log_det_gain(const ComplexMatrix& h, double rho) {
  const int n = static_cast<int>(h.cols());
  const ComplexMatrix g = ComplexMatrix::Identity(n, n) + rho * h.adjoint() * h;
  return std::log(g.ldlt().vectorD().real().prod());
}

ChannelRealization draw_channel(const FadingSpec& spec, int k, Rng& rng) {
  if (k < 1) throw InvalidSpec("k must be at least 1");
  spec.validate();
  ChannelRealization out;
  out.blocks = draw_law(spec, spec.law, k, rng);
  double acc = 0.0;
  for (const ComplexMatrix& h : out.blocks) acc += log_det_gain(h, spec.snr);
  out.statistic = acc / k;
  return out;
}

double ergodic_capacity(const FadingSpec& spec) {
  spec.validate();
  FadingSpec::Law law = spec.law == FadingSpec::Law::kBlock ? spec.inner : spec.law;
  switch (law) {
    case FadingSpec::Law::kStatic:
      return log_det_gain(static_block(spec), spec.snr);
    case FadingSpec::Law::kCustom: {
      double acc = 0.0;
      for (const ComplexMatrix& h : spec.sequence) acc += log_det_gain(h, spec.snr);
      return acc / spec.sequence.size();
    }
    case FadingSpec::Law::kAdversarial: {
      const ComplexMatrix id = ComplexMatrix::Identity(spec.n_rx, spec.n_tx);
      return 0.5 * (log_det_gain(id * spec.adversarial_low, spec.snr) +
                    log_det_gain(id * spec.adversarial_high, spec.snr));
    }
    case FadingSpec::Law::kRayleigh: {
      if (spec.n_tx == 1 && spec.n_rx == 1) return rayleigh_capacity(spec.snr);
      constexpr uint64_t kDraws = 1 << 18;
      const uint64_t chunks = kDraws / kChunk;
      std::vector<double> partial(chunks, 0.0);
      parallel_for(chunks, 0, [&](std::size_t c) {
        Rng rng = make_rng(0x5eed, kErgodicStream, c);
        double acc = 0.0;
        for (uint64_t t = 0; t < kChunk; ++t)
          acc += log_det_gain(rayleigh_block(spec.n_rx, spec.n_tx, rng), spec.snr);
        partial[c] = acc;
      });
      double acc = 0.0;
      for (double p : partial) acc += p;
      return acc / kDraws;
    }
    case FadingSpec::Law::kBlock:
      break;
  }
  throw InvalidSpec("unsupported law");
}

std::vector<LlnRow> lln_diagnostic(const FadingSpec& spec,
                                   const std::vector<int>& k_list, double delta,
                                   uint64_t trials, uint64_t seed, int threads) {
  if (trials < 1000) throw InvalidSpec("lln_diagnostic needs at least 1000 trials");
  if (!(delta > 0)) throw InvalidSpec("delta must be positive");
  const double cap = ergodic_capacity(spec);
  std::vector<LlnRow> rows;
  for (int k : k_list) {
    const uint64_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<uint64_t> hits(chunks, 0);
    parallel_for(chunks, threads, [&](std::size_t c) {
      const uint64_t lo = c * kChunk, hi = std::min<uint64_t>(trials, lo + kChunk);
      uint64_t h = 0;
      for (uint64_t t = lo; t < hi; ++t) {
        Rng rng = make_rng(seed, kLlnStream + static_cast<uint64_t>(k), t);
        if (std::abs(draw_channel(spec, k, rng).statistic - cap) > delta) ++h;
      }
      hits[c] = h;
    });
    uint64_t total = 0;
    for (uint64_t h : hits) total += h;
    const double p = static_cast<double>(total) / trials;
    rows.push_back({k, p, k * p});
  }
  return rows;
}

bool strictly_decreasing_trend(const std::vector<LlnRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].k_p_hat < rows[i - 1].k_p_hat)) return false;
  return rows.size() >= 2;
}

bool nondecreasing_trend(const std::vector<LlnRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].k_p_hat < rows[i - 1].k_p_hat) return false;
  return rows.size() >= 2;
}

MmseGdfe mmse_gdfe(const ComplexMatrix& h, double rho) {
  if (!(rho > 0)) throw InvalidSpec("rho must be positive");
  const int m = static_cast<int>(h.rows()), n = static_cast<int>(h.cols());
  ComplexMatrix aug(m + n, n);
  aug.topRows(m) = h;
  aug.bottomRows(n) = ComplexMatrix::Identity(n, n) / std::sqrt(rho);
  Eigen::HouseholderQR<ComplexMatrix> qr(aug);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m + n, n);
  ComplexMatrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  fix_phases(r, q);
  return {r, q.topRows(m)};
}

TallReduction tall_reduction(const ComplexMatrix& h) {
  const int m = static_cast<int>(h.rows()), n = static_cast<int>(h.cols());
  if (m < n) throw InvalidSpec("tall_reduction needs rows >= cols");
  Eigen::HouseholderQR<ComplexMatrix> qr(h);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  ComplexMatrix qn = q.leftCols(n);
  fix_phases(r, qn);
  q.leftCols(n) = qn;
  return {r, q};
}

}  // namespace latsec
