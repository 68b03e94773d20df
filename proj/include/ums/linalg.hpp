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

#include <Eigen/Dense>
#include <complex>

#include "ums/rng.hpp"

namespace ums {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Max-norm of m†m − I; zero for an exactly unitary matrix.
double unitarity_defect(const ComplexMatrix& m);

/// True iff m is square and ‖m†m − I‖_max ≤ tol.
bool is_unitary(const ComplexMatrix& m, double tol);

/// Dense complex matrix certified unitary at construction.
///
/// The wrapped matrix is immutable; all downstream code may assume
/// ‖U†U − I‖_max ≤ tolerance without re-checking.
class UnitaryMatrix {
 public:
  static constexpr double kConstructionTol = 1e-10;

  /// Throws std::invalid_argument if m is not square, has non-finite
  /// entries, or fails the unitarity check.
  explicit UnitaryMatrix(ComplexMatrix m, double tol = kConstructionTol);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  UnitaryMatrix adjoint() const;

 private:
  ComplexMatrix m_;
};

/// Haar-distributed n×n unitary: QR of a complex Ginibre matrix with the
/// R-diagonal phase correction Q → Q·diag(r_jj/|r_jj|). Advances rng.
UnitaryMatrix haar_random_unitary(int n, Rng& rng);
UnitaryMatrix haar_random_unitary(int n, RngSeed seed);

/// F(u, u_s) = |Tr(u†·u_s)|²/n², in [0, 1]; 1 iff equal up to global phase.
double fidelity(const UnitaryMatrix& u, const UnitaryMatrix& u_s);

/// Untyped fast path used in optimizer inner loops; both arguments must be
/// unitary for the result to be a fidelity.
double fidelity_raw(const ComplexMatrix& u, const ComplexMatrix& u_s);

/// Unitary polar factor W_L·W_R of the SVD t = W_L·D·W_R†.
/// Throws std::domain_error if t is rank-deficient (σ_min ≤ 1e-12).
UnitaryMatrix nearest_unitary(const ComplexMatrix& t);

/// Matrix exponential of a square complex matrix (Padé scaling-and-squaring).
ComplexMatrix expm(const ComplexMatrix& a);

}  // namespace ums
