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

#ifndef LATSEC_RATES_H_
#define LATSEC_RATES_H_

#include <string>

namespace latsec {

// Root discriminant of the Martinet tower.
inline constexpr double kMartinetRootDiscriminant = 92.368;

struct RateConstants {
  double kappa_siso;  // 2 ln(rd / pi)
  double kappa_mimo;  // 2n ln(n rd beta^{(n-1)/n} / pi)
  double beta;        // 23^{1/10}
};

RateConstants rate_constants(double rd, int n);
double division_algebra_beta();
// ln(4e/pi): gap of the self-dual lattices with Hermite invariant ~ 2k/(2 pi e).
double conway_thompson_gap();
// t = 2/rd for ideal lattices of root discriminant rd.
double ideal_lattice_constant(double rd);
// d = (2/rd)^n / beta^{n-1}, the per-antenna analog used for algebra lattices.
double algebra_lattice_constant(double rd, int n);

double nats_to_bits(double nats);
double db_to_linear(double db);
double linear_to_db(double x);
double awgn_capacity(double rho);
// E[ln(1 + rho |h|^2)] for h ~ CN(0, 1): e^{1/rho} E_1(1/rho).
double rayleigh_capacity(double rho);

enum class RateMode { kSisoFading, kGaussian, kMimo, kCompound };
RateMode parse_rate_mode(const std::string& s);
std::string rate_mode_name(RateMode m);

// Capacities in nats. g_b, g_e are t_b, t_e (siso-fading), h_b, h_e
// (gaussian) or d_b, d_e (mimo, compound).
struct RateBudget {
  double c_b = 0.0;
  double c_e = 0.0;
  double g_b = 1.0;
  double g_e = 1.0;
  int n = 1;
};

struct AchievableRates {
  double r_max;        // r_sum_max - r_prime_min
  double r_prime_min;  // R' must exceed this
  double r_sum_max;    // R + R' must stay below this
};

// Throws InvalidSpec for nonpositive constants or n != 1 in a scalar mode.
AchievableRates achievable_rates(const RateBudget& budget, RateMode mode);

}  // namespace latsec

#endif  // LATSEC_RATES_H_
