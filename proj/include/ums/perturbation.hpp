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

#include <vector>

#include "ums/linalg.hpp"

namespace ums {

/// Unitary part of the blend (1−α)·v0 + α·r, via SVD: the polar factor
/// W_L·W_R. Interpolates between v0 (α=0) and r (α=1).
/// Throws std::domain_error when the blend is rank-deficient.
UnitaryMatrix perturb_mixing(const UnitaryMatrix& v0, const UnitaryMatrix& r, double alpha);

/// Mean block fidelity S = Σ_m F(v0s[m], vas[m]) / M, in [0, 1].
double similarity(const std::vector<UnitaryMatrix>& v0s, const std::vector<UnitaryMatrix>& vas);

}  // namespace ums
