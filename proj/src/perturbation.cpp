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

#include "ums/perturbation.hpp"

#include <stdexcept>

namespace ums {

UnitaryMatrix perturb_mixing(const UnitaryMatrix& v0, const UnitaryMatrix& r, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("perturb_mixing: alpha must lie in [0, 1]");
  }
  if (v0.dim() != r.dim()) throw std::invalid_argument("perturb_mixing: dimension mismatch");
  if (alpha == 0.0) return v0;
  if (alpha == 1.0) return r;
  ComplexMatrix blend = (1.0 - alpha) * v0.matrix() + alpha * r.matrix();
  return nearest_unitary(blend);
}

double similarity(const std::vector<UnitaryMatrix>& v0s, const std::vector<UnitaryMatrix>& vas) {
  if (v0s.size() != vas.size() || v0s.empty()) {
    throw std::invalid_argument("similarity: need equal-length non-empty block sequences");
  }
  double sum = 0.0;
  for (std::size_t m = 0; m < v0s.size(); ++m) sum += fidelity(v0s[m], vas[m]);
  return sum / static_cast<double>(v0s.size());
}

}  // namespace ums
