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

#include <array>
#include <utility>

#include "ums/linalg.hpp"
#include "ums/optimizer.hpp"

namespace ums::su3 {

using Matrix3 = Eigen::Matrix3cd;
using Metric = Eigen::Matrix<double, 8, 8>;

/// Parameters φ₁…φ₈ of the four-phase-layer tritter circuit.
using Point = Eigen::Matrix<double, 8, 1>;

/// Anti-Hermitian traceless basis λ₁…λ₈ of su(3); λ₇ = diag(−2i, i, i) and
/// λ₈ = diag(0, i, −i) are the diagonal pair in this convention.
const std::array<Matrix3, 8>& gellmann();

/// T = (−i/√3)·[[1,1,1],[1,w,w²],[1,w²,w]], w = e^{i2π/3}; T⁴ = I, det T = 1.
const Matrix3& tritter();

/// exp[(√3π/12)(λ₇ − 2λ₁ − 2λ₂ + λ₃)]; equals tritter() to round-off.
Matrix3 tritter_from_generator();

/// Max residuals of the tritter conjugation identities
///   −T†·λ₇·T = λ₁ + λ₂ + λ₃  and  −√3·T†·λ₈·T = λ₄ − λ₅ + λ₆.
std::pair<double, double> conjugation_identities();

/// SU(3)-normalized phase gate diag(e^{iφ_j}, e^{iφ_k}, e^{−i(φ_j+φ_k)}).
Matrix3 phi_gate(double phi_j, double phi_k);

/// U(p) = Φ₁₂·T·Φ₃₄·T·Φ₅₆·T·Φ₇₈ (det = 1); T·U(p) with leading_tritter.
Matrix3 circuit(const Point& p, bool leading_tritter = false);

/// Conjugated tritter generator
/// A(a,b) = (√3π/12)(λ₇ − 2cos(a)λ₁ + 2sin(a)λ₄ − 2cos(b)λ₂ + 2sin(b)λ₅
///                    + cos(a−b)λ₃ + sin(a−b)λ₆),
/// satisfying exp(A(φ_j−φ_k, 2φ_j+φ_k)) = Φ_jk·T·Φ_jk†.
Matrix3 conjugated_generator(double a, double b);

/// Commuted product form e^{A₁}·e^{A₂}·e^{A₃}·Φ(s₇, s₈) with cumulative
/// phase sums; equals circuit(p) identically (cross-check only).
Matrix3 product_form(const Point& p);

/// Tangent vectors X_α = U⁻¹·∂U/∂φ_α, each anti-Hermitian traceless.
std::array<Matrix3, 8> tangent_vectors(const Point& p);

/// Real coefficients of an anti-Hermitian traceless X in the λ basis
/// (the basis is trace-orthogonal: Tr(λ_i†λ_j) = 0 for i ≠ j).
Eigen::Matrix<double, 8, 1> gellmann_coefficients(const Matrix3& x);

/// Numerical rank of span{X_α}: singular values of the 8×8 coefficient
/// matrix above tol·σ_max.
int tangent_rank(const Point& p, double tol);

/// g_{μν} = Tr(X_μ·X_ν); real symmetric, negative semidefinite.
Metric killing_metric(const Point& p);

/// For each basis direction λ_i, searches for p with
/// ‖U(p) − u0·(I + ε·λ_i)‖_max ≤ 10·ε² via basin-hopping on the squared
/// Frobenius distance. Returns per-direction success flags; optional
/// out-params receive the residuals achieved.
std::array<bool, 8> local_solvability(const Matrix3& u0, double eps, const OptimizerConfig& cfg,
                                      std::array<double, 8>* residuals = nullptr);

}  // namespace ums::su3
