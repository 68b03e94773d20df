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
#include "ums/linalg.hpp"
#include "ums/rng.hpp"
#include "ums/su3.hpp"

using namespace ums;

TEST_CASE("rng determinism and substreams") {
  Rng a(RngSeed{42, 7});
  Rng b(RngSeed{42, 7});
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());

  Rng c(RngSeed{42, 8});
  bool any_diff = false;
  Rng a2(RngSeed{42, 7});
  for (int i = 0; i < 10; ++i) any_diff |= (a2.next_u64() != c.next_u64());
  REQUIRE(any_diff);

  const RngSeed base{3, 5};
  REQUIRE(base.substream(0) == base.substream(0));
  REQUIRE(!(base.substream(0) == base.substream(1)));
  // chained substreams stay distinct
  REQUIRE(!(base.substream(0).substream(1) == base.substream(1).substream(0)));
}

TEST_CASE("rng uniform and normal ranges") {
  Rng rng(RngSeed{1, 0});
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double g = rng.normal();
    sum += g;
    sum2 += g * g;
  }
  REQUIRE(std::abs(sum / 20000.0) < 0.03);
  REQUIRE(std::abs(sum2 / 20000.0 - 1.0) < 0.05);
}

TEST_CASE("haar sampler produces certified unitaries") {
  Rng rng(RngSeed{11, 0});
  for (int n : {1, 2, 3, 5, 8, 13, 32, 64}) {
    const UnitaryMatrix u = haar_random_unitary(n, rng);
    REQUIRE(u.dim() == n);
    REQUIRE(is_unitary(u.matrix(), 1e-12));
  }
  const UnitaryMatrix one = haar_random_unitary(1, RngSeed{5, 1});
  REQUIRE(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-14);

  REQUIRE_THROWS_AS(haar_random_unitary(0, RngSeed{0, 0}), std::invalid_argument);
}

TEST_CASE("haar moment E|Tr U|^2 = 1") {
  // Monte-Carlo check of the first Haar trace moment at n=6.
  Rng rng(RngSeed{2024, 0});
  double acc = 0.0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    const UnitaryMatrix u = haar_random_unitary(6, rng);
    acc += std::norm(u.matrix().trace());
  }
  REQUIRE(acc / draws == Catch::Approx(1.0).margin(0.1));
}

TEST_CASE("haar sampling is deterministic per seed") {
  const UnitaryMatrix a = haar_random_unitary(5, RngSeed{9, 3});
  const UnitaryMatrix b = haar_random_unitary(5, RngSeed{9, 3});
  REQUIRE((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fidelity examples") {
  const UnitaryMatrix u = haar_random_unitary(4, RngSeed{1, 2});
  REQUIRE(fidelity(u, u) == Catch::Approx(1.0).margin(1e-14));

  const Complex phase = std::polar(1.0, 0.83);
  const UnitaryMatrix up(ComplexMatrix(phase * u.matrix()));
  REQUIRE(fidelity(u, up) == Catch::Approx(1.0).margin(1e-14));

  // Tr(DFT3) = i, so F(I, DFT3) = 1/9.
  const UnitaryMatrix eye(ComplexMatrix::Identity(3, 3));
  REQUIRE(fidelity(eye, dft_matrix(3)) == Catch::Approx(1.0 / 9.0).margin(1e-14));

  const UnitaryMatrix small(ComplexMatrix::Identity(2, 2));
  REQUIRE_THROWS_AS(fidelity(u, small), std::invalid_argument);
}

TEST_CASE("fidelity symmetry and bi-invariance") {
  Rng rng(RngSeed{8, 1});
  for (int trial = 0; trial < 20; ++trial) {
    const UnitaryMatrix u = haar_random_unitary(5, rng);
    const UnitaryMatrix v = haar_random_unitary(5, rng);
    const UnitaryMatrix w = haar_random_unitary(5, rng);
    const double f = fidelity(u, v);
    REQUIRE(fidelity(v, u) == Catch::Approx(f).margin(1e-14));
    const UnitaryMatrix wu(ComplexMatrix(w.matrix() * u.matrix()));
    const UnitaryMatrix wv(ComplexMatrix(w.matrix() * v.matrix()));
    REQUIRE(fidelity(wu, wv) == Catch::Approx(f).margin(1e-12));
  }
}

TEST_CASE("nearest_unitary examples and properties") {
  const ComplexMatrix eye = ComplexMatrix::Identity(4, 4);
  REQUIRE((nearest_unitary(eye).matrix() - eye).cwiseAbs().maxCoeff() < 1e-14);

  const UnitaryMatrix u = haar_random_unitary(5, RngSeed{3, 3});
  REQUIRE((nearest_unitary(2.0 * u.matrix()).matrix() - u.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  REQUIRE((nearest_unitary(u.matrix()).matrix() - u.matrix()).cwiseAbs().maxCoeff() < 1e-12);

  // idempotence
  Rng rng(RngSeed{4, 4});
  ComplexMatrix t(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) t(r, c) = rng.complex_normal();
  }
  const ComplexMatrix once = nearest_unitary(t).matrix();
  REQUIRE((nearest_unitary(once).matrix() - once).cwiseAbs().maxCoeff() < 1e-12);

  REQUIRE_THROWS_AS(nearest_unitary(ComplexMatrix::Zero(3, 3)), std::domain_error);
  ComplexMatrix rank1 = ComplexMatrix::Zero(3, 3);
  rank1(0, 0) = 1.0;
  REQUIRE_THROWS_AS(nearest_unitary(rank1), std::domain_error);
  REQUIRE_THROWS_AS(nearest_unitary(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("expm examples") {
  REQUIRE((expm(ComplexMatrix::Zero(3, 3)) - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() <
          1e-14);

  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = Complex(0.0, std::numbers::pi);
  a(1, 1) = Complex(0.0, -std::numbers::pi);
  ComplexMatrix e = expm(a);
  REQUIRE(std::abs(e(0, 0) - Complex(-1.0, 0.0)) < 1e-13);
  REQUIRE(std::abs(e(1, 1) - Complex(-1.0, 0.0)) < 1e-13);
  REQUIRE(std::abs(e(0, 1)) < 1e-14);

  // generator of the balanced three-port coupler
  const auto& l = su3::gellmann();
  const double s = std::sqrt(3.0) * std::numbers::pi / 12.0;
  const ComplexMatrix gen = s * (l[6] - 2.0 * l[0] - 2.0 * l[1] + l[2]);
  REQUIRE((expm(gen) - su3::tritter()).cwiseAbs().maxCoeff() < 1e-13);

  REQUIRE_THROWS_AS(expm(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("expm inverse property for skew-Hermitian arguments") {
  Rng rng(RngSeed{6, 6});
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 4;
    ComplexMatrix g(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) g(r, c) = rng.complex_normal();
    }
    ComplexMatrix a = g - g.adjoint();  // skew-Hermitian
    a *= 10.0 / std::max(1.0, a.norm());
    const ComplexMatrix prod = expm(a) * expm(ComplexMatrix(-a));
    REQUIRE((prod - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("is_unitary and construction gate") {
  REQUIRE(is_unitary(ComplexMatrix::Identity(4, 4), 1e-12));
  REQUIRE_FALSE(is_unitary(2.0 * ComplexMatrix::Identity(4, 4), 1e-12));
  REQUIRE(is_unitary(dft_matrix(6).matrix(), 1e-12));

  ComplexMatrix off = ComplexMatrix::Identity(3, 3);
  off(0, 0) = 1.0 + 1e-6;
  REQUIRE_THROWS_AS(UnitaryMatrix(off), std::invalid_argument);
  REQUIRE_THROWS_AS(UnitaryMatrix(ComplexMatrix::Zero(3, 2)), std::invalid_argument);
}
