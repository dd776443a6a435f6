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

#ifndef LATSEC_ERRORS_H_
#define LATSEC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace latsec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLattice : public Error {
 public:
  using Error::Error;
};

class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

class TailToleranceError : public Error {
 public:
  using Error::Error;
};

class NotSmoothEnough : public Error {
 public:
  NotSmoothEnough(const std::string& what, double eps)
      : Error(what), epsilon(eps) {}
  double epsilon;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class SamplerError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class UnknownReference : public Error {
 public:
  using Error::Error;
};

class NestingError : public Error {
 public:
  NestingError(const std::string& what, double nearest)
      : Error(what), nearest_feasible_rate(nearest) {}
  double nearest_feasible_rate;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace latsec

#endif  // LATSEC_ERRORS_H_
