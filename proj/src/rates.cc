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

#include "latsec/rates.h"

#include <cmath>

#include <boost/math/special_functions/expint.hpp>

#include "latsec/errors.h"

namespace latsec {

double division_algebra_beta() { return std::pow(23.0, 0.1); }

RateConstants rate_constants(double rd, int n) {
  if (!(rd > 0) || n < 1) throw InvalidSpec("rate constants need rd > 0, n >= 1");
  RateConstants c{};
  c.beta = division_algebra_beta();
  c.kappa_siso = 2.0 * std::log(rd / M_PI);
  c.kappa_mimo = 2.0 * n *
                 std::log(n * rd * std::pow(c.beta, (n - 1.0) / n) / M_PI);
  return c;
}

double conway_thompson_gap() { return std::log(4.0 * M_E / M_PI); }

double ideal_lattice_constant(double rd) { return 2.0 / rd; }

double algebra_lattice_constant(double rd, int n) {
  return std::pow(2.0 / rd, n) / std::pow(division_algebra_beta(), n - 1);
}

double nats_to_bits(double nats) { return nats / std::log(2.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }
double awgn_capacity(double rho) { return std::log1p(rho); }

double rayleigh_capacity(double rho) {
  if (!(rho > 0)) return 0.0;
  const double x = 1.0 / rho;
  if (x > 600.0) {
    // e^x E_1(x) ~ 1/x - 1/x^2 + 2/x^3 for large x.
    const double y = 1.0 / x;
    return y * (1.0 - y * (1.0 - y * (2.0 - 6.0 * y)));
  }
  return std::exp(x) * boost::math::expint(1, x);
}

RateMode parse_rate_mode(const std::string& s) {
  if (s == "siso-fading") return RateMode::kSisoFading;
  if (s == "gaussian") return RateMode::kGaussian;
  if (s == "mimo") return RateMode::kMimo;
  if (s == "compound") return RateMode::kCompound;
  throw InvalidSpec("unknown rate mode: " + s);
}

std::string rate_mode_name(RateMode m) {
  switch (m) {
    case RateMode::kSisoFading: return "siso-fading";
    case RateMode::kGaussian: return "gaussian";
    case RateMode::kMimo: return "mimo";
    case RateMode::kCompound: return "compound";
  }
  return "?";
}

AchievableRates achievable_rates(const RateBudget& b, RateMode mode) {
  if (!(b.g_b > 0) || !(b.g_e > 0)) throw InvalidSpec("rate constants must be positive");
  if (b.n < 1) throw InvalidSpec("n must be at least 1");
  AchievableRates r{};
  switch (mode) {
    case RateMode::kSisoFading:
    case RateMode::kGaussian:
      if (b.n != 1) throw InvalidSpec("scalar rate modes need n = 1");
      r.r_prime_min = b.c_e + std::log(M_E / M_PI) - std::log(b.g_e);
      r.r_sum_max = b.c_b - std::log(4.0 / (M_PI * M_E)) + std::log(b.g_b);
      break;
    case RateMode::kMimo:
    case RateMode::kCompound: {
      const double n = b.n;
      r.r_prime_min = b.c_e + n * std::log(n * M_E / M_PI) - std::log(b.g_e);
      r.r_sum_max =
          b.c_b - n * std::log(4.0 * n / (M_PI * M_E)) + std::log(b.g_b);
      break;
    }
  }
  r.r_max = r.r_sum_max - r.r_prime_min;
  return r;
}

}  // namespace latsec
