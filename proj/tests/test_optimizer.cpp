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
#include <limits>
#include <numbers>

#include "ums/cnot.hpp"
#include "ums/optimizer.hpp"

using namespace ums;

namespace {

constexpr double kPi = std::numbers::pi;

// Quadratic bowl with a known minimizer.
Objective bowl_objective(const Eigen::VectorXd& center) {
  const auto c = std::make_shared<Eigen::VectorXd>(center);
  return Objective(static_cast<int>(center.size()),
                   [c](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
                     const Eigen::VectorXd d = x - *c;
                     if (grad != nullptr) *grad = 2.0 * d;
                     return d.squaredNorm();
                   });
}

OptimizerConfig quick_cfg(RngSeed seed, int hops = 10, int restarts = 2) {
  OptimizerConfig cfg;
  cfg.hops = hops;
  cfg.restarts = restarts;
  cfg.rng = seed;
  return cfg;
}

}  // namespace

TEST_CASE("objective handle tracks evaluations and validates dimensions") {
  const LayeredArchitecture arch = make_variant(4, LayerVariant::kA, MixingSpec::haar(RngSeed{1, 0}));
  Rng rng(RngSeed{2, 0});
  Eigen::VectorXd p(arch.phase_count());
  for (int i = 0; i < p.size(); ++i) p[i] = rng.uniform(0.0, 2 * kPi);
  const UnitaryMatrix self = layered_transfer(arch, p);

  const Objective obj = make_objective(arch, self);
  REQUIRE(obj.dim() == arch.phase_count());
  REQUIRE(obj.value(p) <= 1e-12);

  Eigen::VectorXd g;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd x(obj.dim());
    for (int i = 0; i < x.size(); ++i) x[i] = rng.uniform(0.0, 2 * kPi);
    const double f = obj.value_grad(x, g);
    REQUIRE(f >= 0.0);
    REQUIRE(f <= 1.0);
  }
  REQUIRE(obj.evaluations() == 11);

  REQUIRE_THROWS_AS(obj.value(Eigen::VectorXd::Zero(3)), std::invalid_argument);
  const UnitaryMatrix wrong = haar_random_unitary(3, RngSeed{4, 0});
  REQUIRE_THROWS_AS(make_objective(arch, wrong), std::invalid_argument);
}

TEST_CASE("gradient_check behavior") {
  const LayeredArchitecture arch = make_variant(4, LayerVariant::kA, MixingSpec::haar(RngSeed{5, 0}));
  const UnitaryMatrix target = haar_random_unitary(4, RngSeed{6, 0});
  const Objective obj = make_objective(arch, target);

  Rng rng(RngSeed{7, 0});
  Eigen::VectorXd x(obj.dim());
  for (int i = 0; i < x.size(); ++i) x[i] = rng.uniform(0.0, 2 * kPi);

  REQUIRE(gradient_check(obj, x, 1e-6) < 1e-6);

  // truncation error grows with h
  double prev = 0.0;
  for (double h : {1e-6, 1e-4, 1e-2, 1e-1}) {
    const double err = gradient_check(obj, x, h);
    REQUIRE(err >= prev);
    prev = err;
  }

  // stationary point: absolute deviation, both gradients ~0
  Eigen::VectorXd p(arch.phase_count());
  for (int i = 0; i < p.size(); ++i) p[i] = rng.uniform(0.0, 2 * kPi);
  const Objective self = make_objective(arch, layered_transfer(arch, p));
  REQUIRE(gradient_check(self, p, 1e-6) < 1e-8);
}

TEST_CASE("local_minimize basics") {
  OptimizerConfig cfg;

  // known optimum: no move
  Eigen::VectorXd center = Eigen::VectorXd::Constant(6, 1.5);
  const Objective bowl = bowl_objective(center);
  auto [x_opt, f_opt] = local_minimize(bowl, center, cfg);
  REQUIRE((x_opt - center).cwiseAbs().maxCoeff() == 0.0);
  REQUIRE(f_opt == 0.0);

  // quadratic bowl from a distance, < 100 iterations
  OptimizerConfig tight = cfg;
  tight.local_max_iter = 100;
  auto [x2, f2] = local_minimize(bowl, Eigen::VectorXd::Zero(6), tight);
  REQUIRE(f2 < 1e-10);
  REQUIRE((x2 - center).cwiseAbs().maxCoeff() < 1e-5);

  // non-finite start
  const Objective bad(2, [](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
    if (grad != nullptr) grad->setZero(2);
    return std::numeric_limits<double>::quiet_NaN() * x.sum();
  });
  REQUIRE_THROWS_AS(local_minimize(bad, Eigen::VectorXd::Ones(2), cfg), std::domain_error);
}

TEST_CASE("local_minimize re-converges from a perturbed reference point") {
  const LayeredArchitecture arch = cnot_reference_architecture();
  const Objective obj = make_objective(arch, cnot_unitary());
  Rng rng(RngSeed{8, 0});
  Eigen::VectorXd x = cnot_reference_phases();
  for (int i = 0; i < x.size(); ++i) x[i] += rng.uniform(-1e-3, 1e-3);

  OptimizerConfig cfg;
  auto [x_min, f_min] = local_minimize(obj, x, cfg);
  REQUIRE(f_min < 1e-7);
}

TEST_CASE("basin hopping on a synthetic objective") {
  Eigen::VectorXd center = Eigen::VectorXd::Constant(4, 2.0);
  OptimizerConfig cfg = quick_cfg(RngSeed{9, 0}, 5, 1);
  cfg.target_infidelity = 1e-9;
  const SynthesisResult res = basin_hopping(bowl_objective(center), cfg);
  REQUIRE(res.converged);
  REQUIRE(res.infidelity < 1e-9);

  // hops = 0, restarts = 1 reduces to a single local minimize
  OptimizerConfig degenerate = quick_cfg(RngSeed{10, 0}, 0, 1);
  const SynthesisResult single = basin_hopping(bowl_objective(center), degenerate);
  REQUIRE(single.fidelity_trace.size() == 1);
  REQUIRE(single.infidelity < 1e-9);
}

TEST_CASE("basin hopping determinism and trace monotonicity") {
  const LayeredArchitecture arch = make_variant(4, LayerVariant::kA, MixingSpec::haar(RngSeed{11, 0}));
  const UnitaryMatrix target = haar_random_unitary(4, RngSeed{12, 0});

  OptimizerConfig cfg = quick_cfg(RngSeed{13, 0}, 5, 2);
  cfg.target_infidelity = 1e-300;  // never early-stop

  const SynthesisResult a = basin_hopping(make_objective(arch, target), cfg);
  const SynthesisResult b = basin_hopping(make_objective(arch, target), cfg);
  REQUIRE(a.infidelity == b.infidelity);
  REQUIRE(a.phases.size() == b.phases.size());
  for (int i = 0; i < a.phases.size(); ++i) REQUIRE(a.phases[i] == b.phases[i]);
  REQUIRE(a.fidelity_trace == b.fidelity_trace);
  REQUIRE(a.evaluations == b.evaluations);

  double prev = 1.0;
  for (const auto& [hop, f] : a.fidelity_trace) {
    REQUIRE(f <= prev);
    prev = f;
  }
}

TEST_CASE("restart independence") {
  const LayeredArchitecture arch = make_variant(3, LayerVariant::kA, MixingSpec::haar(RngSeed{14, 0}));
  const UnitaryMatrix target = haar_random_unitary(3, RngSeed{15, 0});
  const Objective obj = make_objective(arch, target);

  OptimizerConfig cfg = quick_cfg(RngSeed{16, 0}, 3, 3);
  cfg.target_infidelity = 1e-300;

  const SynthesisResult multi = basin_hopping(obj, cfg);
  double best = 2.0;
  for (int r = 0; r < cfg.restarts; ++r) {
    const SynthesisResult one =
        basin_hopping_restart(obj, cfg, cfg.rng.substream(static_cast<std::uint64_t>(r)));
    best = std::min(best, one.infidelity);
  }
  REQUIRE(multi.infidelity == best);
}

TEST_CASE("synthesize on a realizable target") {
  const LayeredArchitecture arch = make_variant(4, LayerVariant::kA, MixingSpec::haar(RngSeed{17, 0}));
  Rng rng(RngSeed{18, 0});
  Eigen::VectorXd p(arch.phase_count());
  for (int i = 0; i < p.size(); ++i) p[i] = rng.uniform(0.0, 2 * kPi);
  const UnitaryMatrix target = layered_transfer(arch, p);

  OptimizerConfig cfg;
  cfg.rng = RngSeed{19, 0};
  const SynthesisResult res = synthesize(arch, target, cfg);
  REQUIRE(res.converged);
  REQUIRE(res.infidelity < 1e-9);

  // phases are canonical and the reported infidelity recomputes exactly
  for (int i = 0; i < res.phases.size(); ++i) {
    REQUIRE(res.phases[i] >= 0.0);
    REQUIRE(res.phases[i] < 2 * kPi);
  }
  const double recomputed = 1.0 - fidelity(layered_transfer(arch, res.phases), target);
  REQUIRE(std::abs(recomputed - res.infidelity) < 1e-12);
}

TEST_CASE("config validation") {
  OptimizerConfig cfg;
  cfg.step_size = 0.0;
  REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OptimizerConfig{};
  cfg.restarts = 0;
  REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = OptimizerConfig{};
  cfg.temperature = -1.0;
  REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
}
