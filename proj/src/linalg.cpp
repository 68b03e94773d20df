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

#include "ums/linalg.hpp"

#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace ums {

double unitarity_defect(const ComplexMatrix& m) {
  ComplexMatrix d = m.adjoint() * m;
  d.diagonal().array() -= 1.0;
  return d.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  return unitarity_defect(m) <= tol;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("UnitaryMatrix: matrix must be square and non-empty");
  }
  if (!m_.allFinite()) {
    throw std::invalid_argument("UnitaryMatrix: non-finite entries");
  }
  double defect = unitarity_defect(m_);
  if (defect > tol) {
    throw std::invalid_argument("UnitaryMatrix: unitarity defect " + std::to_string(defect) +
                                " exceeds tolerance " + std::to_string(tol));
  }
}

UnitaryMatrix UnitaryMatrix::adjoint() const { return UnitaryMatrix(m_.adjoint()); }

UnitaryMatrix haar_random_unitary(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_random_unitary: dimension must be >= 1");
  ComplexMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Mezzadri correction: fold the phases of R's diagonal into Q so the
  // effective R has positive real diagonal, making Q Haar-uniform.
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    Complex phase = (a > 0.0) ? d / a : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

UnitaryMatrix haar_random_unitary(int n, RngSeed seed) {
  Rng rng(seed);
  return haar_random_unitary(n, rng);
}

double fidelity(const UnitaryMatrix& u, const UnitaryMatrix& u_s) {
  if (u.dim() != u_s.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return fidelity_raw(u.matrix(), u_s.matrix());
}

double fidelity_raw(const ComplexMatrix& u, const ComplexMatrix& u_s) {
  const auto n = static_cast<double>(u.rows());
  Complex tr(0.0, 0.0);
  for (Eigen::Index c = 0; c < u.cols(); ++c) tr += u.col(c).dot(u_s.col(c));
  return std::norm(tr) / (n * n);
}

UnitaryMatrix nearest_unitary(const ComplexMatrix& t) {
  if (t.rows() != t.cols() || t.rows() == 0) {
    throw std::invalid_argument("nearest_unitary: matrix must be square and non-empty");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() <= 1e-12) {
    throw std::domain_error("nearest_unitary: rank-deficient input, polar factor undefined");
  }
  return UnitaryMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  return a.exp();
}

}  // namespace ums
