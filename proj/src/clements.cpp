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

#include "ums/clements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ums {

namespace {

ComplexMatrix splitter_block(int n, int a, int b, double eta) {
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  const double c = std::cos(eta);
  const Complex is(0.0, std::sin(eta));
  m(a, a) = c;
  m(b, b) = c;
  m(a, b) = is;
  m(b, a) = is;
  return m;
}

}  // namespace

UnitaryMatrix beam_splitter(double eta) { return UnitaryMatrix(splitter_block(2, 0, 1, eta)); }

UnitaryMatrix mzi_matrix(double theta, double phi, double bias1, double bias2) {
  constexpr double balanced = std::numbers::pi / 4.0;
  ComplexMatrix u = splitter_block(2, 0, 1, balanced + bias1);
  u.col(0) *= Complex(std::cos(phi), std::sin(phi));   // P(φ) at the input
  u.row(0) *= Complex(std::cos(theta), std::sin(theta));  // P(θ) between the splitters
  return UnitaryMatrix(splitter_block(2, 0, 1, balanced + bias2) * u);
}

MZIMesh MZIMesh::zero_bias(int n) {
  if (n < 2) throw std::invalid_argument("MZIMesh: need at least 2 channels");
  return MZIMesh{n, std::vector<double>(static_cast<std::size_t>(n * (n - 1)), 0.0)};
}

std::vector<std::pair<int, int>> clements_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int col = 0; col < n; ++col) {
    for (int a = col % 2; a + 1 < n; a += 2) pairs.emplace_back(a, a + 1);
  }
  return pairs;
}

MZIMesh apply_bias_model(int n, BiasModel model, double range_deg, RngSeed seed) {
  if (range_deg < 0.0) throw std::invalid_argument("apply_bias_model: range must be >= 0");
  MZIMesh mesh = MZIMesh::zero_bias(n);
  const double range = range_deg * std::numbers::pi / 180.0;
  Rng rng(seed);
  switch (model) {
    case BiasModel::kI: {
      const double alpha = rng.uniform(0.0, range);
      for (double& b : mesh.bias_rad) b = alpha;
      break;
    }
    case BiasModel::kII:
      for (double& b : mesh.bias_rad) b = rng.uniform(-range, range);
      break;
    case BiasModel::kIII:
      for (double& b : mesh.bias_rad) b = rng.uniform(0.0, range);
      break;
  }
  return mesh;
}

FactorChain clements_chain(const MZIMesh& mesh) {
  const int n = mesh.n;
  if (n < 2) throw std::invalid_argument("clements_chain: need at least 2 channels");
  if (static_cast<int>(mesh.bias_rad.size()) != n * (n - 1)) {
    throw std::invalid_argument("clements_chain: expected " + std::to_string(n * (n - 1)) +
                                " bias angles, got " + std::to_string(mesh.bias_rad.size()));
  }
  constexpr double balanced = std::numbers::pi / 4.0;
  const auto pairs = clements_pairs(n);
  std::vector<ChainFactor> factors;
  factors.reserve(4 * pairs.size() + 1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    const int theta = static_cast<int>(2 * k);
    const int phi = static_cast<int>(2 * k + 1);
    factors.push_back(ChainFactor::phase_layer({{a, phi}}));
    factors.push_back(ChainFactor::fixed_block(splitter_block(n, a, b, balanced + mesh.bias_rad[2 * k])));
    factors.push_back(ChainFactor::phase_layer({{a, theta}}));
    factors.push_back(ChainFactor::fixed_block(splitter_block(n, a, b, balanced + mesh.bias_rad[2 * k + 1])));
  }
  std::vector<ChainFactor::Slot> output;
  const int base = n * (n - 1);
  for (int c = 0; c < n; ++c) output.push_back({c, base + c});
  factors.push_back(ChainFactor::phase_layer(std::move(output)));
  return FactorChain(n, std::move(factors), mesh.phase_count());
}

UnitaryMatrix clements_transfer(const MZIMesh& mesh, const Eigen::VectorXd& phases) {
  return UnitaryMatrix(clements_chain(mesh).transfer(phases));
}

Eigen::VectorXd clements_gradient(const MZIMesh& mesh, const Eigen::VectorXd& phases,
                                  const UnitaryMatrix& target) {
  Eigen::VectorXd grad;
  clements_chain(mesh).infidelity_grad(phases, target.matrix(), grad);
  return grad;
}

}  // namespace ums
