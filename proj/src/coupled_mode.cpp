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

#include "ums/coupled_mode.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ums {

namespace {

Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

}  // namespace

UnitaryMatrix coupled_mode_transfer(const WaveguideArray& w) {
  if (w.n < 2) throw std::invalid_argument("coupled_mode_transfer: need at least 2 waveguides");
  if (w.z < 0.0) throw std::invalid_argument("coupled_mode_transfer: negative interaction length");
  const int n = w.n;
  // exp(i·z·c·A) in closed form: A = J − I has the uniform vector with
  // eigenvalue n−1 and its complement with eigenvalue −1.
  const Complex on_uniform = cis(w.z * (w.beta + w.c * static_cast<double>(n - 1)));
  const Complex on_rest = cis(w.z * (w.beta - w.c));
  ComplexMatrix u = ComplexMatrix::Constant(n, n, (on_uniform - on_rest) / static_cast<double>(n));
  u.diagonal().array() += on_rest;
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix tritter_closed_form(double beta, double k, double z) {
  const Complex d = cis(2.0 * k * z) + 2.0 * cis(-k * z);
  const Complex b = cis(2.0 * k * z) - cis(-k * z);
  const Complex scale = cis(beta * z) / 3.0;
  ComplexMatrix u(3, 3);
  u << d, b, b, b, d, b, b, b, d;
  return UnitaryMatrix(scale * u);
}

double phase_align_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("phase_align_residual: shape mismatch");
  }
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(a(0, i)) < 1e-15 || std::abs(a(i, 0)) < 1e-15 || std::abs(b(0, i)) < 1e-15 ||
        std::abs(b(i, 0)) < 1e-15) {
      return std::numeric_limits<double>::infinity();
    }
  }
  // With d1(0) = 1 (one global phase is free) the first row fixes D2 and
  // the first column fixes D1; any residual on the remaining entries means
  // the matrices are not phase-equivalent.
  Eigen::VectorXcd d2(n), d1(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    d2(j) = b(0, j) / a(0, j);
    d2(j) /= std::abs(d2(j));
  }
  d1(0) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    d1(i) = b(i, 0) / (a(i, 0) * d2(0));
    d1(i) /= std::abs(d1(i));
  }
  return (d1.asDiagonal() * a * d2.asDiagonal() - b).cwiseAbs().maxCoeff();
}

}  // namespace ums
