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

#include "ums/su3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ums::su3 {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix3 phase_diag(Complex a, Complex b, Complex c) {
  Matrix3 m = Matrix3::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

const std::array<Matrix3, 8>& gellmann() {
  static const std::array<Matrix3, 8> basis = [] {
    std::array<Matrix3, 8> l;
    for (auto& m : l) m.setZero();
    l[0](0, 1) = kI;
    l[0](1, 0) = kI;
    l[1](0, 2) = kI;
    l[1](2, 0) = kI;
    l[2](1, 2) = kI;
    l[2](2, 1) = kI;
    l[3](0, 1) = 1.0;
    l[3](1, 0) = -1.0;
    l[4](0, 2) = 1.0;
    l[4](2, 0) = -1.0;
    l[5](1, 2) = 1.0;
    l[5](2, 1) = -1.0;
    l[6] = phase_diag(-2.0 * kI, kI, kI);
    l[7] = phase_diag(0.0, kI, -kI);
    return l;
  }();
  return basis;
}

const Matrix3& tritter() {
  static const Matrix3 t = [] {
    const Complex w = std::exp(kI * (2.0 * std::numbers::pi / 3.0));
    const Complex w2 = w * w;
    Matrix3 m;
    m << 1, 1, 1, 1, w, w2, 1, w2, w;
    return Matrix3((-kI / std::sqrt(3.0)) * m);
  }();
  return t;
}

Matrix3 tritter_from_generator() {
  const auto& l = gellmann();
  const double s = std::sqrt(3.0) * std::numbers::pi / 12.0;
  ComplexMatrix gen = s * (l[6] - 2.0 * l[0] - 2.0 * l[1] + l[2]);
  ComplexMatrix e = expm(gen);
  Matrix3 out = e;
  return out;
}

std::pair<double, double> conjugation_identities() {
  const auto& l = gellmann();
  const Matrix3& t = tritter();
  const Matrix3 ti = t.adjoint();  // T⁻¹ = T† on the unitary group
  const Matrix3 lhs7 = -(ti * l[6] * t);
  const Matrix3 lhs8 = -std::sqrt(3.0) * (ti * l[7] * t);
  const double r7 = (lhs7 - (l[0] + l[1] + l[2])).cwiseAbs().maxCoeff();
  const double r8 = (lhs8 - (l[3] - l[4] + l[5])).cwiseAbs().maxCoeff();
  return {r7, r8};
}

Matrix3 phi_gate(double phi_j, double phi_k) {
  return phase_diag(std::exp(kI * phi_j), std::exp(kI * phi_k), std::exp(-kI * (phi_j + phi_k)));
}

Matrix3 circuit(const Point& p, bool leading_tritter) {
  const Matrix3& t = tritter();
  Matrix3 u = phi_gate(p[0], p[1]) * t * phi_gate(p[2], p[3]) * t * phi_gate(p[4], p[5]) * t *
              phi_gate(p[6], p[7]);
  if (leading_tritter) u = t * u;
  return u;
}

Matrix3 conjugated_generator(double a, double b) {
  const auto& l = gellmann();
  const double s = std::sqrt(3.0) * std::numbers::pi / 12.0;
  ComplexMatrix gen = s * (l[6] - 2.0 * std::cos(a) * l[0] + 2.0 * std::sin(a) * l[3] -
                           2.0 * std::cos(b) * l[1] + 2.0 * std::sin(b) * l[4] +
                           std::cos(a - b) * l[2] + std::sin(a - b) * l[5]);
  return Matrix3(gen);
}

Matrix3 product_form(const Point& p) {
  const double c1 = p[0], c2 = p[1];
  const double d1 = c1 + p[2], d2 = c2 + p[3];
  const double e1 = d1 + p[4], e2 = d2 + p[5];
  const double s7 = e1 + p[6], s8 = e2 + p[7];
  const Matrix3 a1 = Matrix3(expm(conjugated_generator(c1 - c2, 2.0 * c1 + c2)));
  const Matrix3 a2 = Matrix3(expm(conjugated_generator(d1 - d2, 2.0 * d1 + d2)));
  const Matrix3 a3 = Matrix3(expm(conjugated_generator(e1 - e2, 2.0 * e1 + e2)));
  return a1 * a2 * a3 * phi_gate(s7, s8);
}

std::array<Matrix3, 8> tangent_vectors(const Point& p) {
  const Matrix3& t = tritter();
  // Generators of the two free phases of Φ_jk: ∂Φ/∂φ_j = i·diag(1,0,−1)·Φ,
  // ∂Φ/∂φ_k = i·diag(0,1,−1)·Φ; both commute with Φ, so with
  // U = L·Φ·R one gets X = U†·∂U = R†·G·R.
  const Matrix3 gj = phase_diag(kI, 0.0, -kI);
  const Matrix3 gk = phase_diag(0.0, kI, -kI);

  const Matrix3 r78 = Matrix3::Identity();
  const Matrix3 r56 = t * phi_gate(p[6], p[7]);
  const Matrix3 r34 = t * phi_gate(p[4], p[5]) * r56;
  const Matrix3 r12 = t * phi_gate(p[2], p[3]) * r34;

  std::array<Matrix3, 8> xs;
  const std::array<const Matrix3*, 4> suffixes{&r12, &r34, &r56, &r78};
  for (int layer = 0; layer < 4; ++layer) {
    const Matrix3& r = *suffixes[static_cast<std::size_t>(layer)];
    xs[static_cast<std::size_t>(2 * layer)] = r.adjoint() * gj * r;
    xs[static_cast<std::size_t>(2 * layer + 1)] = r.adjoint() * gk * r;
  }
  return xs;
}

Eigen::Matrix<double, 8, 1> gellmann_coefficients(const Matrix3& x) {
  const auto& l = gellmann();
  Eigen::Matrix<double, 8, 1> c;
  for (int i = 0; i < 8; ++i) {
    const double norm2 = (l[static_cast<std::size_t>(i)].adjoint() * l[static_cast<std::size_t>(i)])
                             .trace()
                             .real();
    c[i] = (l[static_cast<std::size_t>(i)].adjoint() * x).trace().real() / norm2;
  }
  return c;
}

int tangent_rank(const Point& p, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tangent_rank: tolerance must be > 0");
  const auto xs = tangent_vectors(p);
  Eigen::Matrix<double, 8, 8> coeffs;
  for (int a = 0; a < 8; ++a) {
    coeffs.row(a) = gellmann_coefficients(xs[static_cast<std::size_t>(a)]).transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 8>> svd(coeffs);
  const auto& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) rank += sv(i) > cutoff ? 1 : 0;
  return rank;
}

Metric killing_metric(const Point& p) {
  const auto xs = tangent_vectors(p);
  Metric g;
  for (int a = 0; a < 8; ++a) {
    for (int b = a; b < 8; ++b) {
      const double v =
          (xs[static_cast<std::size_t>(a)] * xs[static_cast<std::size_t>(b)]).trace().real();
      g(a, b) = v;
      g(b, a) = v;
    }
  }
  return g;
}

std::array<bool, 8> local_solvability(const Matrix3& u0, double eps, const OptimizerConfig& cfg,
                                      std::array<double, 8>* residuals) {
  if (!(eps >= 0.0) || eps > 1e-2) {
    throw std::invalid_argument("local_solvability: eps must lie in [0, 1e-2]");
  }
  const auto& l = gellmann();
  std::array<bool, 8> ok{};
  // ε = 0 degenerates to reaching u0 itself; keep a finite gate for it.
  const double accept = eps > 0.0 ? 10.0 * eps * eps : 1e-10;

  for (int i = 0; i < 8; ++i) {
    const Matrix3 target = u0 * (Matrix3::Identity() + eps * l[static_cast<std::size_t>(i)]);
    // Squared Frobenius distance; gradient via the tangent vectors,
    // ∂‖U−M‖²/∂φ_α = −2·Re Tr(M†·U·X_α) since Tr X_α = 0.
    Objective obj(8, [&target](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
      Point p = x;
      const Matrix3 u = circuit(p);
      const Matrix3 diff = u - target;
      const double f = diff.squaredNorm();
      if (grad != nullptr) {
        grad->resize(8);
        const Matrix3 mu = target.adjoint() * u;
        const auto xs = tangent_vectors(p);
        for (int a = 0; a < 8; ++a) {
          (*grad)[a] = -2.0 * (mu * xs[static_cast<std::size_t>(a)]).trace().real();
        }
      }
      return f;
    });

    OptimizerConfig local = cfg;
    // Stop once the max-norm gate is guaranteed: ‖·‖_max ≤ ‖·‖_F, so a
    // squared-Frobenius value of (accept/2)² leaves margin.
    local.target_infidelity = 0.25 * accept * accept;
    local.rng = cfg.rng.substream(static_cast<std::uint64_t>(i));
    const SynthesisResult res = basin_hopping(obj, local);

    Point p = res.phases;
    const double max_resid = (circuit(p) - target).cwiseAbs().maxCoeff();
    ok[static_cast<std::size_t>(i)] = max_resid <= accept;
    if (residuals != nullptr) (*residuals)[static_cast<std::size_t>(i)] = max_resid;
  }
  return ok;
}

}  // namespace ums::su3
