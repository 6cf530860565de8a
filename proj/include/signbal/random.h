// Copyright 2026 The Signbal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGNBAL_RANDOM_H_
#define SIGNBAL_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace signbal {

std::uint64_t SplitMix64(std::uint64_t x);

// Seed for an independent stream, a hash of (seed, index). Every parallel
// task draws from its own stream so results do not depend on scheduling.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

// Thin wrapper over mt19937_64 with distribution code written out here, so
// draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound must be positive.
  std::size_t Below(std::size_t bound);

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace signbal

#endif  // SIGNBAL_RANDOM_H_
