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

#include "ums/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <numbers>
#include <stdexcept>

namespace ums {

void OptimizerConfig::validate() const {
  if (hops < 0) throw std::invalid_argument("OptimizerConfig: hops must be >= 0");
  if (restarts < 1) throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
  if (local_max_iter < 1) throw std::invalid_argument("OptimizerConfig: local_max_iter must be >= 1");
  if (!(step_size > 0.0)) throw std::invalid_argument("OptimizerConfig: step_size must be > 0");
  if (!(temperature > 0.0)) throw std::invalid_argument("OptimizerConfig: temperature must be > 0");
  if (!(local_tol > 0.0)) throw std::invalid_argument("OptimizerConfig: local_tol must be > 0");
  if (!(target_infidelity > 0.0)) {
    throw std::invalid_argument("OptimizerConfig: target_infidelity must be > 0");
  }
}

Objective::Objective(int dim, Fn fn)
    : dim_(dim), fn_(std::move(fn)), evals_(std::make_shared<std::atomic<long>>(0)) {
  if (dim_ < 1) throw std::invalid_argument("Objective: dimension must be >= 1");
}

double Objective::value(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("Objective: point has wrong dimension");
  evals_->fetch_add(1, std::memory_order_relaxed);
  return fn_(x, nullptr);
}

double Objective::value_grad(const Eigen::VectorXd& x, Eigen::VectorXd& grad) const {
  if (x.size() != dim_) throw std::invalid_argument("Objective: point has wrong dimension");
  evals_->fetch_add(1, std::memory_order_relaxed);
  return fn_(x, &grad);
}

Objective make_objective(FactorChain chain, ComplexMatrix target) {
  if (target.rows() != chain.dim() || target.cols() != chain.dim()) {
    throw std::invalid_argument("make_objective: target dimension mismatch");
  }
  const int dim = chain.param_count();
  auto shared = std::make_shared<const FactorChain>(std::move(chain));
  auto tgt = std::make_shared<const ComplexMatrix>(std::move(target));
  return Objective(dim, [shared, tgt](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
    if (grad == nullptr) return shared->infidelity(x, *tgt);
    return shared->infidelity_grad(x, *tgt, *grad);
  });
}

Objective make_objective(const LayeredArchitecture& arch, const UnitaryMatrix& target) {
  return make_objective(arch.chain(), target.matrix());
}

Objective make_objective(const MZIMesh& mesh, const UnitaryMatrix& target) {
  return make_objective(clements_chain(mesh), target.matrix());
}

namespace {

struct LinePoint {
  double a = 0.0;
  double f = 0.0;
  double df = 0.0;  // directional derivative at a
};

// Minimizer of the cubic through (p0.a, p0.f, p0.df) and (p1.a, p1.f, p1.df);
// falls back to bisection when the interpolation is ill-conditioned.
double cubic_step(const LinePoint& p0, const LinePoint& p1) {
  const double h = p1.a - p0.a;
  if (h == 0.0) return p0.a;
  const double d1 = p0.df + p1.df - 3.0 * (p1.f - p0.f) / h;
  const double disc = d1 * d1 - p0.df * p1.df;
  if (disc < 0.0) return 0.5 * (p0.a + p1.a);
  const double d2 = std::copysign(std::sqrt(disc), h);
  const double denom = p1.df - p0.df + 2.0 * d2;
  if (denom == 0.0) return 0.5 * (p0.a + p1.a);
  double a = p1.a - h * (p1.df + d2 - d1) / denom;
  const double lo = std::min(p0.a, p1.a);
  const double hi = std::max(p0.a, p1.a);
  const double guard = 0.05 * (hi - lo);
  if (!std::isfinite(a) || a < lo + guard || a > hi - guard) a = 0.5 * (lo + hi);
  return a;
}

struct WolfeResult {
  bool ok = false;
  double f = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd g;
};

// Strong Wolfe line search (bracket + zoom) along direction d from x0.
WolfeResult wolfe_search(const Objective& obj, const Eigen::VectorXd& x0, const Eigen::VectorXd& d,
                         double f0, double df0) {
  constexpr double c1 = 1e-4;
  constexpr double c2 = 0.9;
  constexpr int max_bracket = 20;
  constexpr int max_zoom = 40;

  WolfeResult out;
  Eigen::VectorXd g(x0.size());
  auto eval = [&](double a) {
    const Eigen::VectorXd x = x0 + a * d;
    const double f = obj.value_grad(x, g);
    return LinePoint{a, f, g.dot(d)};
  };

  // Track the best strict-decrease point seen so the caller can still make
  // progress when the Wolfe conditions are unattainable in floating point.
  auto remember_best = [&](const LinePoint& p) {
    if (p.f < f0 && (!out.ok || p.f < out.f)) {
      out.ok = true;
      out.f = p.f;
      out.x = x0 + p.a * d;
      out.g = g;
    }
  };
  auto accept = [&](const LinePoint& p) {
    out.ok = true;
    out.f = p.f;
    out.x = x0 + p.a * d;
    out.g = g;
  };

  LinePoint lo{0.0, f0, df0};
  LinePoint cur;
  double a = 1.0;
  bool bracketed = false;
  LinePoint hi;

  for (int i = 0; i < max_bracket; ++i) {
    cur = eval(a);
    if (!std::isfinite(cur.f)) {
      a *= 0.5;
      continue;
    }
    if (cur.f > f0 + c1 * cur.a * df0 || (i > 0 && cur.f >= lo.f)) {
      hi = cur;
      bracketed = true;
      break;
    }
    remember_best(cur);
    if (std::abs(cur.df) <= -c2 * df0) {
      accept(cur);
      return out;
    }
    if (cur.df >= 0.0) {
      hi = lo;
      lo = cur;
      bracketed = true;
      break;
    }
    lo = cur;
    a *= 2.0;
  }
  if (!bracketed) return out;

  for (int j = 0; j < max_zoom; ++j) {
    const double aj = cubic_step(lo, hi);
    if (!std::isfinite(aj) || std::abs(hi.a - lo.a) < 1e-18) break;
    cur = eval(aj);
    if (!std::isfinite(cur.f)) break;
    if (cur.f > f0 + c1 * cur.a * df0 || cur.f >= lo.f) {
      hi = cur;
    } else {
      remember_best(cur);
      if (std::abs(cur.df) <= -c2 * df0) {
        accept(cur);
        return out;
      }
      if (cur.df * (hi.a - lo.a) >= 0.0) hi = lo;
      lo = cur;
    }
  }
  return out;  // best strict-decrease point, or failure
}

}  // namespace

std::pair<Eigen::VectorXd, double> local_minimize(const Objective& obj, const Eigen::VectorXd& x0,
                                                  const OptimizerConfig& cfg) {
  if (x0.size() != obj.dim()) throw std::invalid_argument("local_minimize: start has wrong dimension");
  constexpr int kMemory = 10;

  Eigen::VectorXd x = x0;
  Eigen::VectorXd g(x.size());
  double f = obj.value_grad(x, g);
  if (!std::isfinite(f)) throw std::domain_error("local_minimize: objective not finite at start");

  std::deque<Eigen::VectorXd> ss, ys;
  std::deque<double> rhos;

  for (int it = 0; it < cfg.local_max_iter; ++it) {
    if (g.cwiseAbs().maxCoeff() < 1e-14) break;

    // Two-loop recursion for d = -H·g.
    Eigen::VectorXd q = g;
    std::vector<double> alpha(ss.size());
    for (int i = static_cast<int>(ss.size()) - 1; i >= 0; --i) {
      alpha[static_cast<std::size_t>(i)] =
          rhos[static_cast<std::size_t>(i)] * ss[static_cast<std::size_t>(i)].dot(q);
      q -= alpha[static_cast<std::size_t>(i)] * ys[static_cast<std::size_t>(i)];
    }
    if (!ss.empty()) {
      const double gamma = ss.back().dot(ys.back()) / ys.back().squaredNorm();
      q *= gamma;
    }
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const double beta = rhos[i] * ys[i].dot(q);
      q += (alpha[i] - beta) * ss[i];
    }
    Eigen::VectorXd d = -q;

    double df0 = d.dot(g);
    if (!(df0 < 0.0)) {  // not a descent direction; fall back to steepest descent
      d = -g;
      df0 = -g.squaredNorm();
      if (!(df0 < 0.0)) break;
    }

    const WolfeResult ls = wolfe_search(obj, x, d, f, df0);
    if (!ls.ok) break;  // numerical floor reached

    const double decrease = f - ls.f;
    Eigen::VectorXd s = ls.x - x;
    Eigen::VectorXd yv = ls.g - g;
    const double sy = s.dot(yv);
    if (sy > 1e-13 * s.norm() * yv.norm()) {
      ss.push_back(std::move(s));
      ys.push_back(std::move(yv));
      rhos.push_back(1.0 / sy);
      if (static_cast<int>(ss.size()) > kMemory) {
        ss.pop_front();
        ys.pop_front();
        rhos.pop_front();
      }
    }
    x = ls.x;
    f = ls.f;
    g = ls.g;
    if (decrease < cfg.local_tol) break;
  }
  return {std::move(x), f};
}

SynthesisResult basin_hopping_restart(const Objective& obj, const OptimizerConfig& cfg,
                                      RngSeed restart_seed) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Rng rng(restart_seed);
  const int dim = obj.dim();

  Eigen::VectorXd x0(dim);
  for (int i = 0; i < dim; ++i) x0[i] = rng.uniform(0.0, two_pi);

  SynthesisResult res;
  res.rng_used = restart_seed;
  const long evals0 = obj.evaluations();

  auto [x_cur, f_cur] = local_minimize(obj, x0, cfg);
  res.phases = x_cur;
  res.infidelity = f_cur;
  res.fidelity_trace.emplace_back(0, f_cur);

  for (int hop = 1; hop <= cfg.hops && res.infidelity > cfg.target_infidelity; ++hop) {
    Eigen::VectorXd trial = x_cur;
    for (int i = 0; i < dim; ++i) trial[i] += rng.uniform(-cfg.step_size, cfg.step_size);
    auto [x_new, f_new] = local_minimize(obj, trial, cfg);
    if (f_new < res.infidelity) {
      res.infidelity = f_new;
      res.phases = x_new;
    }
    res.fidelity_trace.emplace_back(hop, res.infidelity);
    const double df = f_new - f_cur;
    const double u = rng.uniform();
    if (df <= 0.0 || u < std::exp(-df / cfg.temperature)) {
      x_cur = std::move(x_new);
      f_cur = f_new;
    }
  }

  res.evaluations = obj.evaluations() - evals0;
  res.converged = res.infidelity <= cfg.target_infidelity;
  res.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SynthesisResult basin_hopping(const Objective& obj, const OptimizerConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  SynthesisResult best;
  best.rng_used = cfg.rng;
  long evals = 0;
  int hop_offset = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    SynthesisResult run = basin_hopping_restart(obj, cfg, cfg.rng.substream(static_cast<std::uint64_t>(r)));
    evals += run.evaluations;
    const bool better = run.infidelity < best.infidelity || best.phases.size() == 0;
    for (const auto& [hop, f] : run.fidelity_trace) {
      const double merged = best.phases.size() == 0 ? f : std::min(f, best.infidelity);
      best.fidelity_trace.emplace_back(hop_offset + hop, merged);
    }
    hop_offset += static_cast<int>(run.fidelity_trace.size());
    if (better) {
      best.phases = std::move(run.phases);
      best.infidelity = run.infidelity;
    }
    if (best.infidelity <= cfg.target_infidelity) break;
  }
  best.rng_used = cfg.rng;
  best.evaluations = evals;
  best.converged = best.infidelity <= cfg.target_infidelity;
  best.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return best;
}

namespace {

SynthesisResult finish_synthesis(SynthesisResult res, const FactorChain& chain,
                                 const ComplexMatrix& target) {
  res.phases = canonical_phases(res.phases);
  res.infidelity = chain.infidelity(res.phases, target);
  return res;
}

}  // namespace

SynthesisResult synthesize(const LayeredArchitecture& arch, const UnitaryMatrix& target,
                           const OptimizerConfig& cfg) {
  Objective obj = make_objective(arch, target);
  return finish_synthesis(basin_hopping(obj, cfg), arch.chain(), target.matrix());
}

SynthesisResult synthesize(const MZIMesh& mesh, const UnitaryMatrix& target,
                           const OptimizerConfig& cfg) {
  Objective obj = make_objective(mesh, target);
  return finish_synthesis(basin_hopping(obj, cfg), clements_chain(mesh), target.matrix());
}

double gradient_check(const Objective& obj, const Eigen::VectorXd& x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("gradient_check: step must be > 0");
  Eigen::VectorXd g;
  obj.value_grad(x, g);
  Eigen::VectorXd fd(x.size());
  Eigen::VectorXd xp = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    xp[i] = x[i] + h;
    const double fp = obj.value(xp);
    xp[i] = x[i] - h;
    const double fm = obj.value(xp);
    xp[i] = x[i];
    fd[i] = (fp - fm) / (2.0 * h);
  }
  const double scale = std::max(g.cwiseAbs().maxCoeff(), fd.cwiseAbs().maxCoeff());
  const double err = (g - fd).cwiseAbs().maxCoeff();
  if (scale < 1e-8) return err;  // stationary point: absolute deviation
  return err / scale;
}

}  // namespace ums
