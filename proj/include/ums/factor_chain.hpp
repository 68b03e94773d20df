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

#include <vector>

#include "ums/linalg.hpp"

namespace ums {

/// One factor of an interferometer transfer product: either a fixed unitary
/// block or a diagonal phase layer whose tunable channels map to entries of
/// a global parameter vector (non-tunable channels sit at phase 0).
struct ChainFactor {
  struct Slot {
    int channel;
    int param;
  };

  ComplexMatrix fixed;       // non-empty => fixed factor
  std::vector<Slot> slots;   // used when fixed is empty

  bool is_phase() const { return fixed.size() == 0; }

  static ChainFactor fixed_block(ComplexMatrix u);
  static ChainFactor phase_layer(std::vector<Slot> slots);
};

/// Ordered product of factors, first factor nearest the input:
/// U(x) = F_{M-1} · … · F_1 · F_0.
///
/// Provides the transfer matrix and the analytic gradient of the
/// infidelity 1 − |Tr(target†·U)|²/n² with respect to every phase
/// parameter, computed with one suffix-product sweep. For a phase at
/// channel c in factor j with running suffix S_j (product through factor
/// j), the trace derivative is i·[S_j·C·S_j†]_cc with C = target†·U, so
/// each parameter costs one row-vector sandwich r·C·r†.
class FactorChain {
 public:
  FactorChain(int n, std::vector<ChainFactor> factors, int param_count);

  int dim() const { return n_; }
  int param_count() const { return params_; }
  const std::vector<ChainFactor>& factors() const { return factors_; }

  ComplexMatrix transfer(const Eigen::VectorXd& x) const;

  /// 1 − F against target.
  double infidelity(const Eigen::VectorXd& x, const ComplexMatrix& target) const;

  /// Value and d(1−F)/dx_p for every parameter.
  double infidelity_grad(const Eigen::VectorXd& x, const ComplexMatrix& target,
                         Eigen::VectorXd& grad) const;

 private:
  void check_args(const Eigen::VectorXd& x, const ComplexMatrix* target) const;

  int n_ = 0;
  int params_ = 0;
  std::vector<ChainFactor> factors_;
};

}  // namespace ums
