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

#include <string>
#include <vector>

#include "ums/factor_chain.hpp"
#include "ums/linalg.hpp"
#include "ums/rng.hpp"

namespace ums {

/// Symmetric DFT matrix, U_mn = exp[i·2π(m−1)(n−1)/N]/√N.
UnitaryMatrix dft_matrix(int n);

/// Which channels of one diagonal phase layer carry a tunable phase.
struct PhaseLayerMask {
  int n = 0;
  std::vector<bool> tunable;

  int count() const;

  /// n−1 tunable phases, channel n fixed at zero.
  static PhaseLayerMask all_but_last(int n);
  /// Single tunable phase at the given channel.
  static PhaseLayerMask single(int n, int channel);
  /// Tunable phases on the first k channels.
  static PhaseLayerMask first_k(int n, int k);
};

/// Reduce each phase into [0, 2π).
Eigen::VectorXd canonical_phases(const Eigen::VectorXd& phases);

/// Alternating stack of tunable diagonal phase layers and fixed mixing
/// unitaries, U = Φ^(K+1)·V^(K)·Φ^(K)·…·V^(1)·Φ^(1) with Φ^(1) acting
/// first on the input. The parameter vector concatenates the tunable
/// phases layer by layer (Φ^(1) first, channels ascending).
class LayeredArchitecture {
 public:
  /// masks.size() must equal mixing.size() + 1; all blocks n×n.
  LayeredArchitecture(std::vector<UnitaryMatrix> mixing, std::vector<PhaseLayerMask> masks);

  int dim() const { return n_; }
  int mixing_count() const { return static_cast<int>(mixing_.size()); }
  int phase_layer_count() const { return static_cast<int>(masks_.size()); }
  int phase_count() const { return chain_.param_count(); }

  const std::vector<UnitaryMatrix>& mixing() const { return mixing_; }
  const std::vector<PhaseLayerMask>& masks() const { return masks_; }
  const FactorChain& chain() const { return chain_; }

 private:
  FactorChain build_chain_checked();

  int n_;
  std::vector<UnitaryMatrix> mixing_;
  std::vector<PhaseLayerMask> masks_;
  FactorChain chain_;
};

UnitaryMatrix layered_transfer(const LayeredArchitecture& arch, const Eigen::VectorXd& phases);

/// d(1−F)/dφ_j for every tunable phase, against a target unitary.
Eigen::VectorXd layered_gradient(const LayeredArchitecture& arch, const Eigen::VectorXd& phases,
                                 const UnitaryMatrix& target);

/// Where the fixed mixing blocks come from.
class MixingSpec {
 public:
  static MixingSpec dft();
  static MixingSpec haar(RngSeed seed);
  static MixingSpec explicit_list(std::vector<UnitaryMatrix> blocks);

  /// Materializes K blocks of size n (substream per layer for haar).
  std::vector<UnitaryMatrix> materialize(int n, int k) const;

  std::string describe() const;

 private:
  enum class Kind { kDft, kHaar, kExplicit };
  Kind kind_ = Kind::kDft;
  RngSeed seed_;
  std::vector<UnitaryMatrix> list_;
};

enum class LayerVariant { kA, kB, kC };

/// The three phase-placement varieties:
///   a) K = N mixing layers, N−1 phases per layer (channel N fixed), total N²−1;
///   b) K = N²−2, a single phase per layer (round-robin channel placement);
///   c) per-layer counts given by c_layout (each in [2, N−2], summing ≥ N²−1).
LayeredArchitecture make_variant(int n, LayerVariant variant, const MixingSpec& mixing,
                                 const std::vector<int>& c_layout = {});

/// Variant-a-style stack with an arbitrary number of phase layers
/// (phase_layers − 1 mixing layers, N−1 phases per layer). Used for
/// under-parameterized convergence studies; phase_layers = n+1 recovers
/// variant a up to the trailing mixer.
LayeredArchitecture make_layered(int n, int phase_layers, const MixingSpec& mixing);

}  // namespace ums
