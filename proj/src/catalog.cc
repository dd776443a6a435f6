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

#include "latsec/catalog.h"

#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "latsec/errors.h"

namespace latsec {
namespace {

struct FieldEntry {
  const char* name;
  std::vector<int64_t> poly;
  int64_t discriminant;
  std::vector<int64_t> ideal_generator;
  int64_t ideal_norm;
};

const std::vector<FieldEntry>& entries() {
  static const std::vector<FieldEntry> e = {
      {"qi", {1, 0, 1}, -4, {1, 1}, 2},
      {"qzeta5", {1, 1, 1, 1, 1}, 125, {1, -1, 0, 0}, 5},
      {"qzeta7", {1, 1, 1, 1, 1, 1, 1}, -16807, {1, -1, 0, 0, 0, 0}, 7},
      {"qzeta8", {1, 0, 0, 0, 1}, 256, {1, -1, 0, 0}, 2},
      {"qzeta12", {1, 0, -1, 0, 1}, 144, {1, 0, 0, -1}, 4},
      {"qzeta15", {1, -1, 0, 1, -1, 1, 0, -1, 1}, 1265625,
       {1, 0, 0, 0, 0, -1, 0, 0}, 81},
  };
  return e;
}

const FieldEntry& entry(const std::string& name) {
  for (const auto& e : entries())
    if (name == e.name) return e;
  throw UnknownReference("unknown field: " + name);
}

RationalVector to_rational(const std::vector<int64_t>& v) {
  return RationalVector(v.begin(), v.end());
}

}  // namespace

std::vector<std::string> field_names() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.emplace_back(e.name);
  return names;
}

const NumberFieldCtx& catalog_field(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, NumberFieldCtx> cache;
  const FieldEntry& e = entry(name);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, NumberFieldCtx(e.name, e.poly, e.discriminant)).first;
    // Cross-check the volume identity once at load time.
    ideal_lattice(it->second, ring_of_integers(it->second));
  }
  return it->second;
}

RationalVector catalog_ideal_generator(const std::string& field) {
  return to_rational(entry(field).ideal_generator);
}

std::string field_for_dimension(int k) {
  switch (k) {
    case 1: return "qi";
    case 2: return "qzeta5";
    case 3: return "qzeta7";
    case 4: return "qzeta15";
    default: throw UnknownReference("no catalog field of complex dimension " +
                                    std::to_string(k));
  }
}

const CyclicAlgebraCtx& golden_algebra() {
  static const CyclicAlgebraCtx algebra = [] {
    const NumberFieldCtx& f = catalog_field("qi");
    const RationalVector one = {1, 0}, minus_one = {-1, 0}, i = {0, 1};
    return CyclicAlgebraCtx("golden", f, {minus_one, minus_one, one},
                            ExtElement{one, minus_one}, i);
  }();
  return algebra;
}

CatalogLattice resolve_lattice(const std::string& ref) {
  if (ref.rfind("Z^", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(ref.substr(2));
    } catch (const std::exception&) {
      throw UnknownReference("bad integer lattice reference: " + ref);
    }
    if (n < 2 || n % 2 != 0 || n > 24)
      throw UnknownReference("integer lattice needs even dimension 2..24");
    // Z^2 is psi(Z[i]), the ring of integers of Q(i).
    std::optional<double> disc;
    if (n == 2) disc = 4.0;
    return {ref, Lattice::integer(n / 2), std::nullopt, disc, 1.0, false};
  }
  if (ref == "golden" || ref == "golden/dual") {
    const CyclicAlgebraCtx& a = golden_algebra();
    const bool is_dual = ref == "golden/dual";
    MatrixLattice m = is_dual ? algebra_codifferent(a) : multiblock_embed(a);
    Lattice lat = m.lattice();
    return {ref, std::move(lat), std::move(m),
            std::abs(to_double(a.discriminant())), 1.0, is_dual};
  }
  const auto slash = ref.find('/');
  const std::string name = ref.substr(0, slash);
  const std::string kind = slash == std::string::npos ? "" : ref.substr(slash + 1);
  bool known = false;
  for (const auto& e : entries()) known = known || name == e.name;
  if (known) {
    const NumberFieldCtx& f = catalog_field(name);
    const double d = std::abs(to_double(f.discriminant()));
    if (kind.empty())
      return {ref, ideal_lattice(f, ring_of_integers(f)), std::nullopt, d, 1.0,
              false};
    if (kind == "dual")
      return {ref, codifferent_lattice(f), std::nullopt, d, 1.0, true};
    if (kind == "ideal") {
      const FractionalIdealBasis ideal =
          principal_ideal(f, catalog_ideal_generator(name));
      return {ref, ideal_lattice(f, ideal), std::nullopt, d,
              to_double(ideal.norm), false};
    }
    throw UnknownReference("unknown lattice kind: " + ref);
  }
  std::ifstream in(ref);
  if (!in) throw UnknownReference("unknown lattice reference: " + ref);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return {ref, lattice_from_json(ss.str()), std::nullopt, std::nullopt, 1.0,
            false};
  } catch (const nlohmann::json::exception& e) {
    throw UnknownReference("unreadable lattice file " + ref + ": " + e.what());
  }
}

std::string catalog_manifest_json() {
  nlohmann::ordered_json fields = nlohmann::ordered_json::array();
  for (const auto& e : entries()) {
    const NumberFieldCtx& f = catalog_field(e.name);
    fields.push_back({{"name", e.name},
                      {"polynomial", e.poly},
                      {"degree", f.degree()},
                      {"discriminant", e.discriminant},
                      {"integral_basis", "power"},
                      {"principal_ideal_generator", e.ideal_generator},
                      {"principal_ideal_norm", e.ideal_norm}});
  }
  const CyclicAlgebraCtx& g = golden_algebra();
  nlohmann::ordered_json algebras = nlohmann::ordered_json::array();
  algebras.push_back({{"name", g.name()},
                      {"center", g.center().name()},
                      {"degree", g.n()},
                      {"extension_polynomial", "x^2 - x - 1"},
                      {"sigma", "theta -> 1 - theta"},
                      {"gamma", "i"},
                      {"order", "natural"},
                      {"discriminant", g.discriminant().str()}});
  nlohmann::ordered_json out = {{"fields", fields}, {"algebras", algebras}};
  return out.dump(2) + "\n";
}

}  // namespace latsec
