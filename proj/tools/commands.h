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

#ifndef LATSEC_TOOLS_COMMANDS_H_
#define LATSEC_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>

#include "latsec/config.h"

namespace latsec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfigError = 2;

// Each command validates its keys, writes CSV to `out` and returns an exit
// code. `seed` and `threads` come from the command line.
int lattice_audit(const FlatConfig& cfg, std::ostream& out);
int rates(const FlatConfig& cfg, std::ostream& out);
int simulate(const FlatConfig& cfg, std::ostream& out);
int verify(const FlatConfig& cfg, std::ostream& out);

// Fixed-format number for CSV output ("nan", "inf", "-inf" for non-finite).
std::string fmt(double x);

}  // namespace latsec::cli

#endif  // LATSEC_TOOLS_COMMANDS_H_
