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

#include <utility>
#include <vector>

#include "ums/factor_chain.hpp"
#include "ums/linalg.hpp"
#include "ums/rng.hpp"

namespace ums {

/// Symmetric coupler [[cos η, i·sin η], [i·sin η, cos η]]; balanced at η = π/4.
UnitaryMatrix beam_splitter(double eta);

/// Two-channel MZI, BS(π/4+bias2)·P(θ)·BS(π/4+bias1)·P(φ) with
/// P(x) = diag(e^{ix}, 1). Zero-bias splitting ratio |M₀₀|² = sin²(θ/2).
UnitaryMatrix mzi_matrix(double theta, double phi, double bias1, double bias2);

/// Rectangular mesh of MZIs on alternating channel pairs, with a
/// per-beam-splitter bias angle (deviation from the balanced π/4) and a
/// final diagonal output phase layer.
///
/// MZIs are ordered column by column from the input, top to bottom within
/// a column; MZI k carries bias_rad[2k] (first splitter) and bias_rad[2k+1]
/// (second). The phase vector is [θ_0, φ_0, θ_1, φ_1, …, ψ_1 … ψ_n] with
/// the n output phases ψ last, n² parameters in total.
struct MZIMesh {
  int n = 0;
  std::vector<double> bias_rad;  // length n(n−1)

  int mzi_count() const { return n * (n - 1) / 2; }
  int phase_count() const { return n * n; }

  static MZIMesh zero_bias(int n);
};

/// Channel pairs (a, a+1) of each MZI in mesh order.
std::vector<std::pair<int, int>> clements_pairs(int n);

enum class BiasModel { kI, kII, kIII };

/// Fig-1c style bias draws, all angles stored in radians:
///   I   one angle uniform in [0, range], shared by every splitter;
///   II  independent angles uniform in [−range, range];
///   III independent angles uniform in [0, range].
MZIMesh apply_bias_model(int n, BiasModel model, double range_deg, RngSeed seed);

FactorChain clements_chain(const MZIMesh& mesh);

UnitaryMatrix clements_transfer(const MZIMesh& mesh, const Eigen::VectorXd& phases);

Eigen::VectorXd clements_gradient(const MZIMesh& mesh, const Eigen::VectorXd& phases,
                                  const UnitaryMatrix& target);

}  // namespace ums
