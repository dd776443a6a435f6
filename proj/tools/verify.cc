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

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "commands.h"
#include "latsec/catalog.h"
#include "latsec/channel.h"
#include "latsec/decoder.h"
#include "latsec/enumeration.h"
#include "latsec/errors.h"
#include "latsec/gaussian.h"
#include "latsec/lemma_checks.h"
#include "latsec/parallel.h"
#include "latsec/rates.h"
#include "latsec/wiretap.h"

namespace latsec::cli {
namespace {

struct Report {
  std::ostream& out;
  uint64_t seed;
  std::string hash;
  int failures = 0;

  void row(const std::string& suite, const std::string& check, bool ok,
           double value, double threshold) {
    if (!ok) ++failures;
    out << seed << ',' << hash << ',' << suite << ',' << check << ','
        << (ok ? "PASS" : "FAIL") << ',' << fmt(value) << ',' << fmt(threshold)
        << '\n';
  }
  // Runs a check body; exceptions count as failures.
  void guarded(const std::string& suite, const std::string& check,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++failures;
      out << seed << ',' << hash << ',' << suite << ',' << check << ",FAIL,nan,nan\n";
    }
  }
};

ComplexMatrix random_complex(int rows, int cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = complex_normal(rng);
  return m;
}

void lattice_suite(Report& r) {
  const std::string s = "lattice";
  r.guarded(s, "closest_point_vs_box_search", [&] {
    Rng rng = make_rng(r.seed, 0x1a7, 0);
    RealMatrix b = RealMatrix::Identity(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) b(i, j) += 0.3 * standard_normal(rng);
    const Enumerator en(b);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      RealVector y(4);
      for (int i = 0; i < 4; ++i) y(i) = 1.5 * standard_normal(rng);
      const double d = en.closest(y).second;
      double best = 1e300;
      IntVector u(4);
      for (int a = -8; a <= 8; ++a)
        for (int bb = -8; bb <= 8; ++bb)
          for (int c = -8; c <= 8; ++c)
            for (int e = -8; e <= 8; ++e) {
              u << a, bb, c, e;
              best = std::min(best, (b * u.cast<double>() - y).squaredNorm());
            }
      worst = std::max(worst, std::abs(d - best));
    }
    r.row(s, "closest_point_vs_box_search", worst <= 1e-9, worst, 1e-9);
  });
  for (const std::string& name : field_names()) {
    for (const std::string& ref : {name, name + "/dual", name + "/ideal"}) {
      r.guarded(s, "dual_involution:" + ref, [&] {
        const Lattice lat = resolve_lattice(ref).lattice;
        r.row(s, "dual_involution:" + ref, same_lattice(dual(dual(lat)), lat), 0, 0);
      });
    }
  }
  r.guarded(s, "integer_lattice_invariants", [&] {
    const Lattice z = Lattice::integer(1);
    const double np = product_distance(z).np;
    const double h = hermite_invariant(z);
    r.row(s, "product_distance:Z^2", std::abs(np - 1.0) <= 1e-12, np, 1.0);
    r.row(s, "hermite:Z^2", std::abs(h - 1.0) <= 1e-12, h, 1.0);
  });
}

void algebra_suite(Report& r) {
  const std::string s = "algebra";
  for (const std::string& name : field_names()) {
    const NumberFieldCtx& f = catalog_field(name);
    const int k = f.k();
    const double d = std::abs(to_double(f.discriminant()));
    r.guarded(s, "ideal_volume:" + name, [&] {
      const FractionalIdealBasis ideal = principal_ideal(f, catalog_ideal_generator(name));
      const double v = ideal_lattice(f, ideal).volume();
      const double want = std::pow(2.0, -k) * std::sqrt(d) * to_double(ideal.norm);
      const double rel = std::abs(v / want - 1.0);
      r.row(s, "ideal_volume:" + name, rel <= 1e-9, rel, 1e-9);
    });
    for (const std::string& ref : {name, name + "/dual", name + "/ideal"}) {
      r.guarded(s, "product_distance_bound:" + ref, [&] {
        const Lattice lat = resolve_lattice(ref).lattice;
        const double np = product_distance(lat).np;
        const double bound = std::pow(2.0, 0.5 * k) / std::pow(d, 0.25);
        r.row(s, "product_distance_bound:" + ref, np >= bound * (1 - 1e-9), np, bound);
        const double h = hermite_invariant(lat);
        const double hb = 2.0 * k / std::pow(d, 1.0 / (2.0 * k));
        r.row(s, "hermite_bound:" + ref, h >= hb * (1 - 1e-9), h, hb);
      });
    }
  }
  const CyclicAlgebraCtx& g = golden_algebra();
  r.guarded(s, "golden_codifferent_pairing", [&] {
    const MatrixLattice order = multiblock_embed(g);
    const MatrixLattice codiff = algebra_codifferent(g);
    const RealMatrix p = codiff.lattice().basis().transpose() * order.lattice().basis();
    double dev = 0.0;
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j)
        dev = std::max(dev, std::abs(p(i, j) - std::round(p(i, j))));
    const double det = std::abs(p.determinant());
    r.row(s, "golden_codifferent_pairing", dev <= 1e-9 && std::abs(det - 1) <= 1e-9, dev,
          1e-9);
  });
  r.guarded(s, "golden_min_pdet", [&] {
    const PdetMin pm = pdet_min(multiblock_embed(g));
    r.row(s, "golden_min_pdet", std::abs(pm.pdet - 1.0) <= 1e-9, pm.pdet, 1.0);
  });
  r.guarded(s, "golden_volume", [&] {
    const MatrixLattice order = multiblock_embed(g);
    const int n = g.n(), k = g.k();
    const double want = std::pow(2.0, -k * n * n) *
                        std::sqrt(std::abs(to_double(g.discriminant())));
    const double gram_det = order.lattice().gram().determinant();
    const double rel = std::abs(std::sqrt(gram_det) / want - 1.0);
    r.row(s, "golden_volume", rel <= 1e-6, rel, 1e-6);
  });
  r.guarded(s, "golden_reduced_norm", [&] {
    Rng rng = make_rng(r.seed, 0xa19, 0);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      RationalVector a(g.dim());
      for (auto& c : a) c = Rational(static_cast<int>(rng() % 11) - 5);
      const ComplexVector nrd = g.center().embed(g.reduced_norm(a));
      for (int l = 0; l < g.k(); ++l) {
        const Complex det = g.left_regular_embedded(a, l).determinant();
        worst = std::max(worst, std::abs(det - nrd(l)) / (1.0 + std::abs(det)));
      }
    }
    r.row(s, "golden_reduced_norm", worst <= 1e-8, worst, 1e-8);
  });
}

void gauss_suite(Report& r) {
  const std::string s = "gauss";
  const std::vector<std::string> refs = {"Z^2", "Z^4", "qzeta5"};
  for (const std::string& ref : refs) {
    r.guarded(s, "banaszczyk:" + ref, [&] {
      const Lattice lat = resolve_lattice(ref).lattice;
      const double l1 = min_distance(lat).lambda1;
      const int n = lat.dim_real();
      bool ok = true;
      double worst = 0.0;
      for (double c : {0.8, 1.0, 1.5})
        for (double m : {1.01, 1.3, 2.0}) {
          const double tau = m * std::sqrt(double(n)) * c / l1;
          const BanaszczykTail t = banaszczyk_tail(lat, tau, c);
          ok = ok && t.applicable && t.holds;
          worst = std::max(worst, (t.lhs + t.lhs_tail_bound) / t.rhs);
        }
      r.row(s, "banaszczyk:" + ref, ok, worst, 1.0);
    });
  }
  r.guarded(s, "correlated_absorption", [&] {
    const Lattice lat = resolve_lattice("qzeta5").lattice;
    Rng rng = make_rng(r.seed, 0x9a55, 0);
    const ComplexMatrix a = random_complex(2, 2, rng);
    const ComplexMatrix cov = a * a.adjoint() + 0.5 * ComplexMatrix::Identity(2, 2);
    const double e1 = flatness_factor(lat, GaussianSpec::correlated(cov));
    const double e2 = flatness_factor(lat.transformed(ComplexMatrix(hermitian_inv_sqrt(cov))),
                                      GaussianSpec::isotropic(1.0));
    const double rel = std::abs(e1 - e2) / std::max(e1, 1e-300);
    r.row(s, "correlated_absorption", rel <= 1e-10, rel, 1e-10);
  });
  r.guarded(s, "regev_mixture", [&] {
    const Lattice lat = Lattice::integer(1);
    const ComplexMatrix s4 = 4.0 * ComplexMatrix::Identity(1, 1);
    const MixtureCheck m =
        regev_mixture_check(lat, ComplexVector::Zero(1), s4, s4, 200'000, r.seed);
    r.row(s, "regev_mixture", m.l1.corrected <= m.bound + 3.0 * m.l1.std_error,
          m.l1.corrected, m.bound + 3.0 * m.l1.std_error);
  });
  r.guarded(s, "linear_transform", [&] {
    Rng rng = make_rng(r.seed, 0x13a, 0);
    double worst = 1.0;
    for (int t = 0; t < 3; ++t) {
      const ComplexMatrix a = random_complex(1, 1, rng);
      const ChiSquare c = linear_transform_check(
          Lattice::integer(1), ComplexVector::Zero(1),
          ComplexMatrix::Identity(1, 1) * 1.5, a, 20'000, derive_seed(r.seed, 0x13a, t));
      worst = std::min(worst, c.p_value);
    }
    r.row(s, "linear_transform", worst > 0.001, worst, 0.001);
  });
  r.guarded(s, "subgaussian_mgf", [&] {
    std::vector<ComplexVector> ts;
    for (int i = 0; i < 8; ++i) {
      ComplexVector t(2);
      t << std::polar(0.7 * (1 + i % 3), 0.8 * i), std::polar(0.5, 1.3 * i);
      ts.push_back(t);
    }
    const Lattice lat = resolve_lattice("qzeta5").lattice;
    const MgfCheck m = subgaussian_mgf_check(lat, ComplexVector::Zero(2), 1.2,
                                             ComplexMatrix::Identity(2, 2), ts);
    r.row(s, "subgaussian_mgf", m.worst_ratio <= 1.0, m.worst_ratio, 1.0);
  });
}

void wiretap_suite(Report& r) {
  const std::string s = "wiretap";
  for (const std::string& ref : {std::string("qi"), std::string("qzeta5")}) {
    r.guarded(s, "coset_bijection:" + ref, [&] {
      CodeParams p;
      p.R = 2.0 * std::log(2.0);
      p.R_prime = 3.0;
      const WiretapCode code = build_code(resolve_lattice(ref).lattice, p);
      const WiretapEncoder enc(code);
      std::set<std::size_t> seen;
      bool ok = true;
      for (std::size_t m = 0; m < code.messages(); ++m) {
        seen.insert(coset_index(code, code.leader_points[m]));
        for (int t = 0; t < 20; ++t) {
          Rng rng = make_rng(r.seed, 0xc05e7, m * 64 + t);
          ok = ok && coset_index(code, enc.encode(m, rng)) == m;
        }
      }
      ok = ok && seen.size() == code.messages();
      r.row(s, "coset_bijection:" + ref, ok, static_cast<double>(code.messages()), 0);
    });
  }
  r.guarded(s, "rate_identity", [&] {
    double worst = 0.0;
    for (double rd = 5.0; rd <= 200.0; rd += 5.0) {
      RateBudget b;
      b.c_b = 9.0;
      b.c_e = 1.5;
      b.g_b = b.g_e = ideal_lattice_constant(rd);
      const double got = achievable_rates(b, RateMode::kSisoFading).r_max;
      worst = std::max(worst, std::abs(got - (9.0 - 1.5 - 2.0 * std::log(rd / M_PI))));
    }
    r.row(s, "rate_identity", worst <= 1e-12, worst, 1e-12);
  });
  r.guarded(s, "rate_monotonicity", [&] {
    bool ok = true;
    for (double ce = 0.0; ce <= 3.0; ce += 0.5)
      for (double cb = 0.0; cb <= 8.0; cb += 0.5)
        for (double t = 0.01; t <= 1.0; t *= 2.0) {
          RateBudget b{cb, ce, t, t, 1};
          const double base = achievable_rates(b, RateMode::kSisoFading).r_max;
          RateBudget up_e = b, up_b = b, up_t = b;
          up_e.c_e += 0.1;
          up_b.c_b += 0.1;
          up_t.g_b *= 1.5;
          ok = ok && achievable_rates(up_e, RateMode::kSisoFading).r_max <= base &&
               achievable_rates(up_b, RateMode::kSisoFading).r_max >= base &&
               achievable_rates(up_t, RateMode::kSisoFading).r_max >= base;
        }
    r.row(s, "rate_monotonicity", ok, 0, 0);
  });
}

void channel_suite(Report& r) {
  const std::string s = "channel";
  r.guarded(s, "mmse_identities", [&] {
    Rng rng = make_rng(r.seed, 0x3353, 0);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const int m = 2 + t % 3;
      const ComplexMatrix h = random_complex(m, 2, rng);
      const double rho = std::pow(10.0, (t % 7) - 2.0);
      const MmseGdfe g = mmse_gdfe(h, rho);
      const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
      const ComplexMatrix rinv = g.r.inverse();
      worst = std::max(worst, (g.r.adjoint() * g.r - h.adjoint() * h - id / rho).norm());
      worst = std::max(worst, (g.q1.adjoint() * g.q1 + rinv.adjoint() * rinv / rho - id).norm());
    }
    r.row(s, "mmse_identities", worst <= 1e-10, worst, 1e-10);
  });
  r.guarded(s, "tall_reduction_logdet", [&] {
    Rng rng = make_rng(r.seed, 0x7a11, 0);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const ComplexMatrix h = random_complex(3, 2, rng);
      const TallReduction red = tall_reduction(h);
      worst = std::max(worst, std::abs(log_det_gain(h, 2.0) - log_det_gain(red.r, 2.0)));
    }
    r.row(s, "tall_reduction_logdet", worst <= 1e-9, worst, 1e-9);
  });
  r.guarded(s, "static_lln", [&] {
    FadingSpec spec;
    spec.snr = 3.0;
    const auto rows = lln_diagnostic(spec, {10, 100}, 0.01, 1000, r.seed);
    r.row(s, "static_lln", rows[0].p_hat == 0 && rows[1].p_hat == 0, rows[1].p_hat, 0);
  });
  r.guarded(s, "noiseless_decoding", [&] {
    CodeParams p;
    p.R = 2.0 * std::log(2.0);
    p.R_prime = 3.0;
    const WiretapCode code = build_code(resolve_lattice("qzeta5").lattice, p);
    const WiretapEncoder enc(code);
    Rng rng = make_rng(r.seed, 0xdec, 0);
    const ComplexMatrix h = random_complex(2, 2, rng);
    const MapDecoder dec(code, h, 1e12);
    bool ok = true;
    for (std::size_t m = 0; m < code.messages(); ++m)
      ok = ok && dec.decode(h * enc.encode(m, rng)).message == m;
    r.row(s, "noiseless_decoding", ok, 0, 0);
  });
}

}  // namespace

int verify(const FlatConfig& cfg, std::ostream& out) {
  cfg.require_known({"command", "master_seed", "output_path", "suite"});
  const std::string suite = cfg.get_string("suite", "all");
  static const std::set<std::string> kSuites = {"lattice", "gauss", "algebra",
                                                "wiretap", "channel", "all"};
  if (!kSuites.count(suite)) throw ConfigError("unknown suite '" + suite + "'");
  Report r{out, cfg.get_u64("master_seed", 0), cfg.hash()};
  out << "seed,config_hash,suite,check,status,value,threshold\n";
  const bool all = suite == "all";
  if (all || suite == "lattice") lattice_suite(r);
  if (all || suite == "gauss") gauss_suite(r);
  if (all || suite == "algebra") algebra_suite(r);
  if (all || suite == "wiretap") wiretap_suite(r);
  if (all || suite == "channel") channel_suite(r);
  return r.failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace latsec::cli
