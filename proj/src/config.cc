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

#include "latsec/config.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "latsec/errors.h"

namespace latsec {
namespace {

using nlohmann::json;

bool is_scalar(const json& v) {
  return v.is_number() || v.is_string() || v.is_boolean();
}

}  // namespace

FlatConfig FlatConfig::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  FlatConfig cfg;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const json& v = it.value();
    bool ok = is_scalar(v);
    if (v.is_array()) {
      ok = true;
      for (const json& e : v) ok = ok && is_scalar(e);
    }
    if (!ok) throw ConfigError("config key '" + it.key() + "' is not flat");
    cfg.values_[it.key()] = v.dump();
  }
  return cfg;
}

FlatConfig FlatConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void FlatConfig::require_known(const std::set<std::string>& allowed) const {
  for (const auto& [key, value] : values_)
    if (!allowed.count(key)) throw ConfigError("unknown config key '" + key + "'");
}

void FlatConfig::set(const std::string& key, const std::string& json_value) {
  values_[key] = json::parse(json_value).dump();
}

double FlatConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

int64_t FlatConfig::get_int(const std::string& key, int64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (!v.is_number_integer())
    throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<int64_t>();
}

uint64_t FlatConfig::get_u64(const std::string& key, uint64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (v.is_number_unsigned()) return v.get<uint64_t>();
  if (v.is_number_integer() && v.get<int64_t>() >= 0)
    return static_cast<uint64_t>(v.get<int64_t>());
  throw ConfigError("config key '" + key + "' must be a nonnegative integer");
}

bool FlatConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (!v.is_boolean()) throw ConfigError("config key '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string FlatConfig::get_string(const std::string& key,
                                   const std::string& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> FlatConfig::get_int_list(const std::string& key,
                                          const std::vector<int>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  std::vector<int> out;
  if (v.is_number_integer()) return {v.get<int>()};
  if (!v.is_array()) throw ConfigError("config key '" + key + "' must be a list");
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ConfigError("config key '" + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<double> FlatConfig::get_double_list(
    const std::string& key, const std::vector<double>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ConfigError("config key '" + key + "' must be a list");
  std::vector<double> out;
  for (const json& e : v) {
    if (!e.is_number()) throw ConfigError("config key '" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::string> FlatConfig::get_string_list(
    const std::string& key, const std::vector<std::string>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const json v = json::parse(it->second);
  if (v.is_string()) return {v.get<std::string>()};
  if (!v.is_array()) throw ConfigError("config key '" + key + "' must be a list");
  std::vector<std::string> out;
  for (const json& e : v) {
    if (!e.is_string()) throw ConfigError("config key '" + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string FlatConfig::canonical() const {
  json doc = json::object();
  for (const auto& [key, value] : values_) doc[key] = json::parse(value);
  return doc.dump();
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string FlatConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical())));
  return buf;
}

}  // namespace latsec
