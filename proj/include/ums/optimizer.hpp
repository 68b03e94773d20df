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

#include <atomic>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "ums/clements.hpp"
#include "ums/layered.hpp"
#include "ums/linalg.hpp"
#include "ums/rng.hpp"

namespace ums {

struct OptimizerConfig {
  int hops = 100;                  // Monte-Carlo hop iterations per restart
  double step_size = 0.5;          // hop perturbation scale, radians
  double temperature = 1.0;        // Metropolis acceptance scale
  int restarts = 10;               // independent random initializations
  double local_tol = 1e-12;        // objective-decrease tolerance of the local stage
  int local_max_iter = 10000;
  double target_infidelity = 1e-10;  // early-stop threshold
  RngSeed rng{};

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Callable objective handle: value and optional gradient, with a shared
/// evaluation counter. Copies share the counter; a run is sequential, so
/// parallel callers should each build their own handle.
class Objective {
 public:
  /// fn(x, grad): returns the value; fills *grad when grad != nullptr.
  using Fn = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>;

  Objective(int dim, Fn fn);

  int dim() const { return dim_; }
  double value(const Eigen::VectorXd& x) const;
  double value_grad(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const;
  long evaluations() const { return evals_->load(); }

 private:
  int dim_;
  Fn fn_;
  std::shared_ptr<std::atomic<long>> evals_;
};

/// Infidelity objective 1 − F(transfer(arch, x), target).
Objective make_objective(const LayeredArchitecture& arch, const UnitaryMatrix& target);
Objective make_objective(const MZIMesh& mesh, const UnitaryMatrix& target);
Objective make_objective(FactorChain chain, ComplexMatrix target);

struct SynthesisResult {
  Eigen::VectorXd phases;
  double infidelity = 1.0;
  std::vector<std::pair<int, double>> fidelity_trace;  // (hop index, best-so-far infidelity)
  long evaluations = 0;
  double wall_time_s = 0.0;
  bool converged = false;
  RngSeed rng_used{};
};

/// Quasi-Newton (L-BFGS, strong-Wolfe line search) descent from x0.
/// Stops when the per-iteration decrease falls below cfg.local_tol or
/// cfg.local_max_iter is reached. Returns (point, value) with value ≤ f(x0).
/// Throws std::domain_error if the objective is not finite at x0.
std::pair<Eigen::VectorXd, double> local_minimize(const Objective& obj, const Eigen::VectorXd& x0,
                                                  const OptimizerConfig& cfg);

/// One basin-hopping chain driven by the given stream: random start,
/// local minimization, then hops of per-coordinate uniform perturbations
/// with Metropolis acceptance at cfg.temperature.
SynthesisResult basin_hopping_restart(const Objective& obj, const OptimizerConfig& cfg,
                                      RngSeed restart_seed);

/// Full search: cfg.restarts independent chains on sub-streams
/// cfg.rng.substream(r), keeping the global best and stopping early once
/// it reaches cfg.target_infidelity. Deterministic for a fixed cfg.
SynthesisResult basin_hopping(const Objective& obj, const OptimizerConfig& cfg);

/// Convenience composition: objective + basin_hopping, phases canonicalized
/// into [0, 2π) and the infidelity recomputed at the returned point.
SynthesisResult synthesize(const LayeredArchitecture& arch, const UnitaryMatrix& target,
                           const OptimizerConfig& cfg);
SynthesisResult synthesize(const MZIMesh& mesh, const UnitaryMatrix& target,
                           const OptimizerConfig& cfg);

/// Max relative deviation between the analytic gradient and central
/// differences with step h; switches to the absolute deviation when both
/// gradients vanish (‖·‖_∞ < 1e−8).
double gradient_check(const Objective& obj, const Eigen::VectorXd& x, double h);

}  // namespace ums
