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

#include "ums/factor_chain.hpp"

#include <cmath>
#include <stdexcept>

namespace ums {

ChainFactor ChainFactor::fixed_block(ComplexMatrix u) {
  ChainFactor f;
  f.fixed = std::move(u);
  return f;
}

ChainFactor ChainFactor::phase_layer(std::vector<Slot> slots) {
  ChainFactor f;
  f.slots = std::move(slots);
  return f;
}

FactorChain::FactorChain(int n, std::vector<ChainFactor> factors, int param_count)
    : n_(n), params_(param_count), factors_(std::move(factors)) {
  if (n < 1) throw std::invalid_argument("FactorChain: dimension must be >= 1");
  for (const auto& f : factors_) {
    if (!f.is_phase()) {
      if (f.fixed.rows() != n || f.fixed.cols() != n) {
        throw std::invalid_argument("FactorChain: fixed factor has wrong dimension");
      }
    } else {
      for (const auto& s : f.slots) {
        if (s.channel < 0 || s.channel >= n || s.param < 0 || s.param >= param_count) {
          throw std::invalid_argument("FactorChain: phase slot out of range");
        }
      }
    }
  }
}

void FactorChain::check_args(const Eigen::VectorXd& x, const ComplexMatrix* target) const {
  if (x.size() != params_) {
    throw std::invalid_argument("FactorChain: expected " + std::to_string(params_) +
                                " parameters, got " + std::to_string(x.size()));
  }
  if (target != nullptr && (target->rows() != n_ || target->cols() != n_)) {
    throw std::invalid_argument("FactorChain: target dimension mismatch");
  }
}

ComplexMatrix FactorChain::transfer(const Eigen::VectorXd& x) const {
  check_args(x, nullptr);
  ComplexMatrix u = ComplexMatrix::Identity(n_, n_);
  for (const auto& f : factors_) {
    if (f.is_phase()) {
      for (const auto& s : f.slots) {
        u.row(s.channel) *= Complex(std::cos(x[s.param]), std::sin(x[s.param]));
      }
    } else {
      u = f.fixed * u;
    }
  }
  return u;
}

double FactorChain::infidelity(const Eigen::VectorXd& x, const ComplexMatrix& target) const {
  check_args(x, &target);
  return 1.0 - fidelity_raw(target, transfer(x));
}

double FactorChain::infidelity_grad(const Eigen::VectorXd& x, const ComplexMatrix& target,
                                    Eigen::VectorXd& grad) const {
  check_args(x, &target);
  grad.setZero(params_);

  // Suffix sweep with a snapshot after each phase factor.
  ComplexMatrix u = ComplexMatrix::Identity(n_, n_);
  std::vector<ComplexMatrix> snapshots;
  snapshots.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.is_phase()) {
      for (const auto& s : f.slots) {
        u.row(s.channel) *= Complex(std::cos(x[s.param]), std::sin(x[s.param]));
      }
      snapshots.push_back(u);
    } else {
      u = f.fixed * u;
    }
  }

  const ComplexMatrix c = target.adjoint() * u;
  const Complex z = c.trace();
  const double inv_n2 = 1.0 / (static_cast<double>(n_) * static_cast<double>(n_));

  std::size_t snap = 0;
  for (const auto& f : factors_) {
    if (!f.is_phase()) continue;
    const ComplexMatrix& s_j = snapshots[snap++];
    for (const auto& s : f.slots) {
      const auto row = s_j.row(s.channel);
      const Complex d = (row * c * row.adjoint()).value();
      grad[s.param] += 2.0 * inv_n2 * (std::conj(z) * d).imag();
    }
  }
  return 1.0 - std::norm(z) * inv_n2;
}

}  // namespace ums
