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

#ifndef LATSEC_PARALLEL_H_
#define LATSEC_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "latsec/types.h"

namespace latsec {

using Rng = std::mt19937_64;

uint64_t splitmix64(uint64_t x);

// Seed for the counter-th unit of work in a stream. Units never share state,
// so results do not depend on how units are scheduled.
uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t counter);
Rng make_rng(uint64_t master, uint64_t stream, uint64_t counter);

// Runs body(i) for every i in [0, count) on `threads` workers (<= 0 means
// the process default). Bodies must only write to per-index slots.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

void set_default_threads(int threads);
int default_threads();

double uniform01(Rng& rng);
double standard_normal(Rng& rng);
// Circularly symmetric complex normal with E|z|^2 = variance.
Complex complex_normal(Rng& rng, double variance = 1.0);

}  // namespace latsec

#endif  // LATSEC_PARALLEL_H_
