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

#include "ums/layered.hpp"
#include "ums/linalg.hpp"

namespace ums {

/// 6-channel transfer matrix of the dual-rail linear-optical CNOT gate
/// (entries ±1/√3 and √(2/3); exactly unitary).
const UnitaryMatrix& cnot_unitary();

/// Reference 6×6 mixing block for the CNOT case study. The published
/// decimal values are unitary only to ~7e-9, so the stored block is their
/// polar projection onto the unitary group.
const UnitaryMatrix& cnot_mixing_block();

/// The 35 reference phases (7 layers × 5 tunable channels, radians) in
/// layer-major order matching the variant-a parameter layout.
const Eigen::VectorXd& cnot_reference_phases();

/// Variant-a n=6 architecture with every mixing block equal to
/// cnot_mixing_block(); applying cnot_reference_phases() reproduces
/// cnot_unitary() to 1−F ≈ 3.3e-8.
LayeredArchitecture cnot_reference_architecture();

}  // namespace ums
