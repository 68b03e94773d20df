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

#include "ums/layered.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace ums {

UnitaryMatrix dft_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dft_matrix: dimension must be >= 1");
  ComplexMatrix m(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double arg = 2.0 * std::numbers::pi * static_cast<double>(r) *
                         static_cast<double>(c) / static_cast<double>(n);
      m(r, c) = scale * Complex(std::cos(arg), std::sin(arg));
    }
  }
  return UnitaryMatrix(std::move(m));
}

int PhaseLayerMask::count() const {
  int k = 0;
  for (bool b : tunable) k += b ? 1 : 0;
  return k;
}

PhaseLayerMask PhaseLayerMask::all_but_last(int n) {
  PhaseLayerMask m{n, std::vector<bool>(static_cast<std::size_t>(n), true)};
  m.tunable[static_cast<std::size_t>(n) - 1] = false;
  return m;
}

PhaseLayerMask PhaseLayerMask::single(int n, int channel) {
  PhaseLayerMask m{n, std::vector<bool>(static_cast<std::size_t>(n), false)};
  m.tunable[static_cast<std::size_t>(channel)] = true;
  return m;
}

PhaseLayerMask PhaseLayerMask::first_k(int n, int k) {
  PhaseLayerMask m{n, std::vector<bool>(static_cast<std::size_t>(n), false)};
  for (int i = 0; i < k; ++i) m.tunable[static_cast<std::size_t>(i)] = true;
  return m;
}

Eigen::VectorXd canonical_phases(const Eigen::VectorXd& phases) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Eigen::VectorXd out(phases.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    double v = std::fmod(phases[i], two_pi);
    if (v < 0.0) v += two_pi;
    out[i] = v;
  }
  return out;
}

namespace {

FactorChain build_chain(int n, const std::vector<UnitaryMatrix>& mixing,
                        const std::vector<PhaseLayerMask>& masks) {
  std::vector<ChainFactor> factors;
  factors.reserve(mixing.size() + masks.size());
  int param = 0;
  for (std::size_t layer = 0; layer < masks.size(); ++layer) {
    std::vector<ChainFactor::Slot> slots;
    for (int c = 0; c < n; ++c) {
      if (masks[layer].tunable[static_cast<std::size_t>(c)]) slots.push_back({c, param++});
    }
    factors.push_back(ChainFactor::phase_layer(std::move(slots)));
    if (layer < mixing.size()) factors.push_back(ChainFactor::fixed_block(mixing[layer].matrix()));
  }
  return FactorChain(n, std::move(factors), param);
}

}  // namespace

LayeredArchitecture::LayeredArchitecture(std::vector<UnitaryMatrix> mixing,
                                         std::vector<PhaseLayerMask> masks)
    : n_(masks.empty() ? 0 : masks.front().n),
      mixing_(std::move(mixing)),
      masks_(std::move(masks)),
      chain_(build_chain_checked()) {}

FactorChain LayeredArchitecture::build_chain_checked() {
  if (masks_.size() != mixing_.size() + 1) {
    throw std::invalid_argument("LayeredArchitecture: need one more phase layer than mixing layers");
  }
  for (const auto& m : masks_) {
    if (m.n != n_ || static_cast<int>(m.tunable.size()) != n_) {
      throw std::invalid_argument("LayeredArchitecture: inconsistent mask dimension");
    }
  }
  for (const auto& v : mixing_) {
    if (v.dim() != n_) throw std::invalid_argument("LayeredArchitecture: mixing block dimension mismatch");
  }
  return build_chain(n_, mixing_, masks_);
}

UnitaryMatrix layered_transfer(const LayeredArchitecture& arch, const Eigen::VectorXd& phases) {
  return UnitaryMatrix(arch.chain().transfer(phases));
}

Eigen::VectorXd layered_gradient(const LayeredArchitecture& arch, const Eigen::VectorXd& phases,
                                 const UnitaryMatrix& target) {
  if (target.dim() != arch.dim()) {
    throw std::invalid_argument("layered_gradient: target dimension mismatch");
  }
  Eigen::VectorXd grad;
  arch.chain().infidelity_grad(phases, target.matrix(), grad);
  return grad;
}

MixingSpec MixingSpec::dft() { return MixingSpec{}; }

MixingSpec MixingSpec::haar(RngSeed seed) {
  MixingSpec s;
  s.kind_ = Kind::kHaar;
  s.seed_ = seed;
  return s;
}

MixingSpec MixingSpec::explicit_list(std::vector<UnitaryMatrix> blocks) {
  MixingSpec s;
  s.kind_ = Kind::kExplicit;
  s.list_ = std::move(blocks);
  return s;
}

std::vector<UnitaryMatrix> MixingSpec::materialize(int n, int k) const {
  std::vector<UnitaryMatrix> out;
  out.reserve(static_cast<std::size_t>(k));
  switch (kind_) {
    case Kind::kDft: {
      UnitaryMatrix d = dft_matrix(n);
      for (int i = 0; i < k; ++i) out.push_back(d);
      break;
    }
    case Kind::kHaar: {
      for (int i = 0; i < k; ++i) {
        out.push_back(haar_random_unitary(n, seed_.substream(static_cast<std::uint64_t>(i))));
      }
      break;
    }
    case Kind::kExplicit: {
      if (static_cast<int>(list_.size()) != k) {
        throw std::invalid_argument("MixingSpec: explicit list has " + std::to_string(list_.size()) +
                                    " blocks, architecture needs " + std::to_string(k));
      }
      out = list_;
      break;
    }
  }
  return out;
}

std::string MixingSpec::describe() const {
  switch (kind_) {
    case Kind::kDft:
      return "dft";
    case Kind::kHaar:
      return "haar";
    case Kind::kExplicit:
      return "explicit";
  }
  return "?";
}

LayeredArchitecture make_variant(int n, LayerVariant variant, const MixingSpec& mixing,
                                 const std::vector<int>& c_layout) {
  if (n < 2) throw std::invalid_argument("make_variant: need at least 2 channels");
  std::vector<PhaseLayerMask> masks;
  switch (variant) {
    case LayerVariant::kA: {
      for (int i = 0; i < n + 1; ++i) masks.push_back(PhaseLayerMask::all_but_last(n));
      break;
    }
    case LayerVariant::kB: {
      const int layers = n * n - 1;  // K = N²−2 mixers
      for (int i = 0; i < layers; ++i) masks.push_back(PhaseLayerMask::single(n, i % n));
      break;
    }
    case LayerVariant::kC: {
      if (c_layout.empty()) {
        throw std::invalid_argument("make_variant: variant c requires a per-layer phase count layout");
      }
      int total = 0;
      for (int k : c_layout) {
        if (k < 2 || k > n - 2) {
          throw std::invalid_argument("make_variant: variant c layer counts must lie in [2, n-2]");
        }
        total += k;
        masks.push_back(PhaseLayerMask::first_k(n, k));
      }
      if (total < n * n - 1) {
        throw std::invalid_argument("make_variant: variant c layout must provide at least n^2-1 phases");
      }
      break;
    }
  }
  const int k = static_cast<int>(masks.size()) - 1;
  return LayeredArchitecture(mixing.materialize(n, k), std::move(masks));
}

LayeredArchitecture make_layered(int n, int phase_layers, const MixingSpec& mixing) {
  if (n < 2 || phase_layers < 1) {
    throw std::invalid_argument("make_layered: need n >= 2 and at least one phase layer");
  }
  std::vector<PhaseLayerMask> masks;
  for (int i = 0; i < phase_layers; ++i) masks.push_back(PhaseLayerMask::all_but_last(n));
  return LayeredArchitecture(mixing.materialize(n, phase_layers - 1), std::move(masks));
}

}  // namespace ums
