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

#include "ums/linalg.hpp"

namespace ums {

/// Array of n waveguides with equal all-to-all evanescent coupling.
/// beta: propagation constant, c: coupling coefficient (both rad/length),
/// z: interaction length.
struct WaveguideArray {
  int n = 0;
  double beta = 0.0;
  double c = 0.0;
  double z = 0.0;
};

/// Transfer matrix of the coupled array, U = exp(i·z·(β·I + c·A)) with A
/// the all-ones-off-diagonal matrix.
///
/// Sign convention: phases accumulate as e^{+iλz}; with this choice the
/// balanced three-port coupler at c·z = 2π/9 equals the DFT matrix up to
/// diagonal phase layers at the ports (the opposite sign yields its
/// conjugate, which is a row-permuted DFT and not phase-equivalent).
UnitaryMatrix coupled_mode_transfer(const WaveguideArray& w);

/// Closed-form three-channel solution:
/// U = (e^{iβz}/3)·[[d,b,b],[b,d,b],[b,b,d]] with d = e^{2ikz} + 2e^{−ikz}
/// and b = e^{2ikz} − e^{−ikz}; identical to coupled_mode_transfer at n=3
/// with k ≡ c. Balanced (all moduli 1/√3) at kz = 2π/9.
UnitaryMatrix tritter_closed_form(double beta, double k, double z);

/// Max residual ‖D₁·a·D₂ − b‖_max minimized over unit-modulus diagonal
/// matrices D₁, D₂ (phase shifts at the output/input ports). Requires the
/// first row and column of both matrices to be nonzero; returns +inf when
/// the alignment is ill-posed on that account.
double phase_align_residual(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ums
