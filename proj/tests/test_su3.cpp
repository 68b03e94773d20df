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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "ums/layered.hpp"
#include "ums/su3.hpp"

using namespace ums;
using su3::Matrix3;
using su3::Point;

namespace {

constexpr double kPi = std::numbers::pi;

Point random_point(Rng& rng) {
  Point p;
  for (int i = 0; i < 8; ++i) p[i] = rng.uniform(0.0, 2.0 * kPi);
  return p;
}

}  // namespace

TEST_CASE("gellmann basis matches the printed matrices") {
  const auto& l = su3::gellmann();
  REQUIRE(l[0](0, 1) == Complex(0, 1));
  REQUIRE(l[6](0, 0) == Complex(0, -2));
  REQUIRE(l[6](1, 1) == Complex(0, 1));
  REQUIRE(l[7](1, 1) == Complex(0, 1));
  REQUIRE(l[7](2, 2) == Complex(0, -1));
  for (const auto& m : l) {
    REQUIRE((m.adjoint() + m).cwiseAbs().maxCoeff() < 1e-15);  // anti-Hermitian
    REQUIRE(std::abs(m.trace()) < 1e-15);                      // traceless
  }
}

TEST_CASE("gellmann commutators close over the real span") {
  const auto& l = su3::gellmann();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Matrix3 comm = l[i] * l[j] - l[j] * l[i];
      const auto c = su3::gellmann_coefficients(comm);
      Matrix3 rebuilt = Matrix3::Zero();
      for (int k = 0; k < 8; ++k) rebuilt += c[k] * l[k];
      REQUIRE((comm - rebuilt).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("tritter generator exponentiates to the closed form") {
  const Matrix3 t = su3::tritter_from_generator();
  REQUIRE((t - su3::tritter()).cwiseAbs().maxCoeff() < 1e-12);

  const Matrix3 t4 = su3::tritter() * su3::tritter() * su3::tritter() * su3::tritter();
  REQUIRE((t4 - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  REQUIRE(std::abs(su3::tritter().determinant() - Complex(1, 0)) < 1e-12);
}

TEST_CASE("conjugation identities hold, and break for T^2") {
  const auto [r7, r8] = su3::conjugation_identities();
  REQUIRE(r7 < 1e-12);
  REQUIRE(r8 < 1e-12);

  // negative control: T → T² breaks both
  const auto& l = su3::gellmann();
  const Matrix3 t2 = su3::tritter() * su3::tritter();
  const Matrix3 lhs7 = -(t2.adjoint() * l[6] * t2);
  const Matrix3 lhs8 = -std::sqrt(3.0) * (t2.adjoint() * l[7] * t2);
  REQUIRE((lhs7 - (l[0] + l[1] + l[2])).cwiseAbs().maxCoeff() > 0.1);
  REQUIRE((lhs8 - (l[3] - l[4] + l[5])).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("phase gate identities") {
  // periodicity
  REQUIRE((su3::phi_gate(2.0 * kPi, 0.0) - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  // Φ_jk as an exponential of the diagonal basis pair
  Rng rng(RngSeed{41, 0});
  const auto& l = su3::gellmann();
  for (int trial = 0; trial < 5; ++trial) {
    const double pj = rng.uniform(0.0, 2 * kPi), pk = rng.uniform(0.0, 2 * kPi);
    const ComplexMatrix gen = -(pj / 2.0) * l[6] + (pk + pj / 2.0) * l[7];
    REQUIRE((expm(gen) - su3::phi_gate(pj, pk)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("circuit determinant and special points") {
  Rng rng(RngSeed{42, 0});
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix3 u = su3::circuit(random_point(rng));
    REQUIRE(std::abs(u.determinant() - Complex(1, 0)) < 1e-12);
  }

  const Matrix3 t = su3::tritter();
  const Matrix3 u0 = su3::circuit(Point::Zero());
  REQUIRE((u0 - Matrix3(t * t * t)).cwiseAbs().maxCoeff() < 1e-13);
  const Matrix3 u0bar = su3::circuit(Point::Zero(), true);
  REQUIRE((u0bar - Matrix3::Identity()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("circuit agrees with the layered model up to global phase") {
  // the SU(3)-normalized gate Φ_jk equals a plain two-phase layer times a
  // global phase, so the fidelity against the layered model is exactly 1
  Rng rng(RngSeed{43, 0});
  const Point p = random_point(rng);

  std::vector<UnitaryMatrix> mixing(3, UnitaryMatrix(ComplexMatrix(su3::tritter())));
  std::vector<PhaseLayerMask> masks(4, PhaseLayerMask::first_k(3, 2));
  const LayeredArchitecture arch(std::move(mixing), std::move(masks));

  Eigen::VectorXd phases(8);
  for (int layer = 0; layer < 4; ++layer) {
    const double pj = p[2 * (3 - layer)];      // layer 0 applies Φ₇₈ first
    const double pk = p[2 * (3 - layer) + 1];
    phases[2 * layer] = 2.0 * pj + pk;
    phases[2 * layer + 1] = pj + 2.0 * pk;
  }
  const UnitaryMatrix from_layers = layered_transfer(arch, phases);
  const UnitaryMatrix from_circuit(ComplexMatrix(su3::circuit(p)));
  REQUIRE(1.0 - fidelity(from_layers, from_circuit) < 1e-12);
}

TEST_CASE("product form reproduces the circuit") {
  Rng rng(RngSeed{44, 0});
  for (int trial = 0; trial < 20; ++trial) {
    const Point p = random_point(rng);
    REQUIRE((su3::product_form(p) - su3::circuit(p)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("tangent vectors are anti-Hermitian, traceless and match finite differences") {
  Rng rng(RngSeed{45, 0});
  const Point p = random_point(rng);
  const auto xs = su3::tangent_vectors(p);
  const Matrix3 u = su3::circuit(p);
  const Matrix3 uinv = u.adjoint();

  for (int a = 0; a < 8; ++a) {
    REQUIRE((xs[a].adjoint() + xs[a]).cwiseAbs().maxCoeff() < 1e-8);
    REQUIRE(std::abs(xs[a].trace()) < 1e-12);

    const double h = 1e-6;
    Point pp = p, pm = p;
    pp[a] += h;
    pm[a] -= h;
    const Matrix3 fd = uinv * ((su3::circuit(pp) - su3::circuit(pm)) / (2.0 * h));
    const double scale = xs[a].cwiseAbs().maxCoeff();
    REQUIRE((fd - xs[a]).cwiseAbs().maxCoeff() / scale < 1e-5);
  }
}

TEST_CASE("tangent rank: generic points are 8-dimensional, the origin is singular") {
  Rng rng(RngSeed{46, 0});
  for (int trial = 0; trial < 100; ++trial) {
    REQUIRE(su3::tangent_rank(random_point(rng), 1e-8) == 8);
  }
  REQUIRE(su3::tangent_rank(Point::Zero(), 1e-8) < 8);

  // only the diagonal phases away from zero: still rank deficient
  Point diag_only = Point::Zero();
  diag_only[6] = 0.9;
  diag_only[7] = 1.7;
  REQUIRE(su3::tangent_rank(diag_only, 1e-8) < 8);
}

TEST_CASE("killing metric properties") {
  Rng rng(RngSeed{47, 0});
  const Point p = random_point(rng);
  const su3::Metric g = su3::killing_metric(p);

  REQUIRE((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);

  // negative semidefinite: no positive eigenvalues
  Eigen::SelfAdjointEigenSolver<su3::Metric> es(g);
  REQUIRE(es.eigenvalues().maxCoeff() < 1e-12);

  REQUIRE(std::abs(g.determinant()) > 1e-6);  // nondegenerate at a generic point

  const su3::Metric g0 = su3::killing_metric(Point::Zero());
  const double scale = std::pow(g0.cwiseAbs().maxCoeff(), 8);
  REQUIRE(std::abs(g0.determinant()) < 1e-8 * scale);
}

TEST_CASE("killing determinant decays along rays into the origin") {
  Rng rng(RngSeed{48, 0});
  for (int trial = 0; trial < 5; ++trial) {
    Point dir;
    for (int i = 0; i < 8; ++i) dir[i] = rng.uniform(-1.0, 1.0);
    double prev = 0.0;
    for (double t : {0.01, 0.02, 0.04, 0.07, 0.1}) {  // increasing within the last decade
      const double det = std::abs(su3::killing_metric(Point(t * dir)).determinant());
      REQUIRE(det >= prev);
      prev = det;
    }
  }
}

TEST_CASE("local solvability near a regular point and the trivial case") {
  OptimizerConfig cfg;
  cfg.hops = 20;
  cfg.restarts = 3;
  cfg.rng = RngSeed{49, 0};

  // ε = 0: the target is u0 itself
  Rng rng(RngSeed{50, 0});
  const Matrix3 u0 = su3::circuit(random_point(rng));
  std::array<double, 8> residuals{};
  const auto trivial = su3::local_solvability(u0, 0.0, cfg, &residuals);
  for (int i = 0; i < 8; ++i) {
    REQUIRE(trivial[i]);
    REQUIRE(residuals[i] <= 1e-10);
  }

  // ε = 1e-3 around a Haar-like generic point
  const auto ok = su3::local_solvability(u0, 1e-3, cfg, &residuals);
  for (int i = 0; i < 8; ++i) {
    INFO("direction " << i << " residual " << residuals[i]);
    REQUIRE(ok[i]);
  }

  REQUIRE_THROWS_AS(su3::local_solvability(u0, 0.5, cfg), std::invalid_argument);
}
