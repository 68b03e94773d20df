// Copyright 2026 The ums Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ums/rng.hpp"

#include <cmath>

namespace ums {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;  // golden-ratio Weyl increment

// SplitMix64 finalizer (Stafford mix13).
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RngSeed RngSeed::substream(std::uint64_t index) const {
  // Hash-combine so chained substreams stay decorrelated.
  return RngSeed{seed, mix64(stream + kGamma) ^ mix64(index * kGamma + 0x632BE59BD9B4E019ull)};
}

Rng::Rng(RngSeed key) : key_(key), state_(mix64(key.seed) ^ mix64(key.stream + kGamma)) {}

std::uint64_t Rng::next_u64() {
  state_ += kGamma;
  return mix64(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; u1 in (0,1] so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925286766559 * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_normal_ = true;
  return r * std::cos(a);
}

std::complex<double> Rng::complex_normal() {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  double re = normal();
  double im = normal();
  return {re * inv_sqrt2, im * inv_sqrt2};
}

}  // namespace ums
