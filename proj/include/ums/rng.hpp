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

#pragma once

#include <complex>
#include <cstdint>

namespace ums {

/// Identifies a reproducible random stream. Equal (seed, stream) pairs
/// reproduce identical draws bit-exactly on every platform.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  /// Derives an independent sub-stream (e.g. one per restart or per
  /// experiment target). Chaining substreams is allowed.
  [[nodiscard]] RngSeed substream(std::uint64_t index) const;

  friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Counter-based generator (SplitMix64 core): the state is a Weyl counter
/// and each output is a finalizing hash of it, so streams never share
/// state and jumping ahead is trivial.
class Rng {
 public:
  explicit Rng(RngSeed key);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller (pairs cached).
  double normal();
  /// Complex standard normal: both parts N(0, 1/2), so E|z|^2 = 1.
  std::complex<double> complex_normal();

  RngSeed key() const { return key_; }

 private:
  RngSeed key_;
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace ums
