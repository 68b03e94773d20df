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

#include "ums/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ums/cnot.hpp"
#include "ums/perturbation.hpp"

namespace ums {

namespace {

template <typename Fn>
void parallel_for(int jobs, int count, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Mean of the k smallest / largest values (k capped at the sample count).
std::pair<double, double> tail_means(std::vector<double> v, int k) {
  std::sort(v.begin(), v.end());
  k = std::min<int>(k, static_cast<int>(v.size()));
  double best = 0.0, worst = 0.0;
  for (int i = 0; i < k; ++i) {
    best += v[static_cast<std::size_t>(i)];
    worst += v[v.size() - 1 - static_cast<std::size_t>(i)];
  }
  return {best / k, worst / k};
}

}  // namespace

std::vector<HistogramRecord> fidelity_histogram(const HistogramConfig& hist,
                                                const OptimizerConfig& cfg, int jobs) {
  if (hist.n_targets < 1) throw std::invalid_argument("fidelity_histogram: need at least one target");
  std::vector<int> layer_counts = hist.layer_counts;
  if (layer_counts.empty()) layer_counts.push_back(hist.n + 1);

  const int cells = hist.n_targets * static_cast<int>(layer_counts.size());
  std::vector<HistogramRecord> records(static_cast<std::size_t>(cells));
  parallel_for(jobs, cells, [&](int cell) {
    const int t = cell / static_cast<int>(layer_counts.size());
    const int li = cell % static_cast<int>(layer_counts.size());
    const int layers = layer_counts[static_cast<std::size_t>(li)];
    const RngSeed item = cfg.rng.substream(static_cast<std::uint64_t>(t))
                             .substream(static_cast<std::uint64_t>(li));

    const UnitaryMatrix target = haar_random_unitary(hist.n, item.substream(0));
    const MixingSpec mix = hist.mixing == MixingKind::kDft ? MixingSpec::dft()
                                                           : MixingSpec::haar(item.substream(1));
    const LayeredArchitecture arch = make_layered(hist.n, layers, mix);

    OptimizerConfig run = cfg;
    run.rng = item.substream(2);
    const SynthesisResult res = synthesize(arch, target, run);

    records[static_cast<std::size_t>(cell)] =
        HistogramRecord{t,      res.infidelity,
                        res.converged,
                        hist.mixing == MixingKind::kDft ? "layered-dft" : "layered-haar",
                        hist.n, layers};
  });
  return records;
}

std::vector<SweepRecord> robustness_sweep(int n, const std::vector<double>& alphas, int n_targets,
                                          RPerturbation r_choice, const OptimizerConfig& cfg,
                                          int jobs,
                                          std::vector<std::vector<double>>* raw_infidelities) {
  for (double a : alphas) {
    if (a < 0.0 || a > 1.0) throw std::invalid_argument("robustness_sweep: alpha outside [0, 1]");
  }
  if (n_targets < 1) throw std::invalid_argument("robustness_sweep: need at least one target");

  const int na = static_cast<int>(alphas.size());
  std::vector<std::vector<double>> infids(static_cast<std::size_t>(na),
                                          std::vector<double>(static_cast<std::size_t>(n_targets)));
  std::vector<std::vector<double>> dissim = infids;

  parallel_for(jobs, na * n_targets, [&](int cell) {
    const int ai = cell / n_targets;
    const int t = cell % n_targets;
    const double alpha = alphas[static_cast<std::size_t>(ai)];
    const RngSeed item = cfg.rng.substream(static_cast<std::uint64_t>(ai))
                             .substream(static_cast<std::uint64_t>(t));

    std::vector<UnitaryMatrix> v0s, vas;
    v0s.reserve(static_cast<std::size_t>(n));
    vas.reserve(static_cast<std::size_t>(n));
    const UnitaryMatrix identity(ComplexMatrix::Identity(n, n));
    for (int m = 0; m < n; ++m) {
      v0s.push_back(haar_random_unitary(n, item.substream(static_cast<std::uint64_t>(m))));
      const UnitaryMatrix r = r_choice == RPerturbation::kIdentity
                                  ? identity
                                  : haar_random_unitary(
                                        n, item.substream(1000 + static_cast<std::uint64_t>(m)));
      vas.push_back(perturb_mixing(v0s.back(), r, alpha));
    }
    const LayeredArchitecture arch =
        make_variant(n, LayerVariant::kA, MixingSpec::explicit_list(vas));
    const UnitaryMatrix target = haar_random_unitary(n, item.substream(5000));

    OptimizerConfig run = cfg;
    run.rng = item.substream(6000);
    const SynthesisResult res = synthesize(arch, target, run);

    infids[static_cast<std::size_t>(ai)][static_cast<std::size_t>(t)] = res.infidelity;
    dissim[static_cast<std::size_t>(ai)][static_cast<std::size_t>(t)] = 1.0 - similarity(v0s, vas);
  });

  std::vector<SweepRecord> rows;
  rows.reserve(static_cast<std::size_t>(na));
  for (int ai = 0; ai < na; ++ai) {
    const auto& v = infids[static_cast<std::size_t>(ai)];
    const auto [best, worst] = tail_means(v, 10);
    rows.push_back(SweepRecord{alphas[static_cast<std::size_t>(ai)], mean_of(v), best, worst,
                               mean_of(dissim[static_cast<std::size_t>(ai)]), n_targets});
  }
  if (raw_infidelities != nullptr) *raw_infidelities = std::move(infids);
  return rows;
}

std::vector<PrecisionRecord> precision_sweep(const FactorChain& chain, const std::vector<int>& bits,
                                             int n_samples, RngSeed seed) {
  if (bits.empty()) throw std::invalid_argument("precision_sweep: need at least one bit count");
  if (n_samples < 1) throw std::invalid_argument("precision_sweep: need at least one sample");
  constexpr double two_pi = 2.0 * std::numbers::pi;

  const int p = chain.param_count();
  Rng ref_rng(seed.substream(0));
  Eigen::VectorXd phi0(p);
  for (int i = 0; i < p; ++i) phi0[i] = ref_rng.uniform(0.0, two_pi);
  const ComplexMatrix u0 = chain.transfer(phi0);

  std::vector<PrecisionRecord> rows;
  rows.reserve(bits.size());
  for (std::size_t bi = 0; bi < bits.size(); ++bi) {
    const int b = bits[bi];
    if (b < 1) throw std::invalid_argument("precision_sweep: bit counts must be >= 1");
    const double range = two_pi / std::pow(2.0, b + 1);
    double sum = 0.0;
    double lo = 1.0;
    double hi = 0.0;
    for (int s = 0; s < n_samples; ++s) {
      Rng rng(seed.substream(1 + bi).substream(static_cast<std::uint64_t>(s)));
      Eigen::VectorXd phi = phi0;
      for (int i = 0; i < p; ++i) phi[i] += rng.uniform(-range, range);
      const double f = 1.0 - chain.infidelity(phi, u0);
      sum += f;
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    rows.push_back(PrecisionRecord{b, sum / n_samples, lo, hi, n_samples});
  }
  return rows;
}

std::vector<PrecisionRecord> precision_sweep(const LayeredArchitecture& arch,
                                             const std::vector<int>& bits, int n_samples,
                                             RngSeed seed) {
  return precision_sweep(arch.chain(), bits, n_samples, seed);
}

std::vector<PrecisionRecord> precision_sweep(const MZIMesh& mesh, const std::vector<int>& bits,
                                             int n_samples, RngSeed seed) {
  return precision_sweep(clements_chain(mesh), bits, n_samples, seed);
}

std::vector<BenchRecord> runtime_bench(const std::vector<int>& ns, bool layered, bool clements,
                                       double threshold, int n_targets, const OptimizerConfig& cfg,
                                       int jobs) {
  if (!(threshold > 0.0)) throw std::invalid_argument("runtime_bench: threshold must be > 0");
  if (n_targets < 1) throw std::invalid_argument("runtime_bench: need at least one target");
  std::vector<std::string> archs;
  if (layered) archs.emplace_back("layered");
  if (clements) archs.emplace_back("clements");
  if (archs.empty()) throw std::invalid_argument("runtime_bench: no architecture selected");

  struct Task {
    int n;
    std::string arch;
    int t;
  };
  std::vector<Task> tasks;
  for (int n : ns) {
    for (const auto& a : archs) {
      for (int t = 0; t < n_targets; ++t) tasks.push_back({n, a, t});
    }
  }
  std::vector<BenchRecord> records(tasks.size());
  parallel_for(jobs, static_cast<int>(tasks.size()), [&](int idx) {
    const Task& task = tasks[static_cast<std::size_t>(idx)];
    const RngSeed item = cfg.rng.substream(static_cast<std::uint64_t>(task.n))
                             .substream(task.arch == "layered" ? 0 : 1)
                             .substream(static_cast<std::uint64_t>(task.t));
    const UnitaryMatrix target = haar_random_unitary(task.n, item.substream(0));
    OptimizerConfig run = cfg;
    run.rng = item.substream(2);
    run.target_infidelity = threshold;

    SynthesisResult res;
    if (task.arch == "layered") {
      const LayeredArchitecture arch =
          make_variant(task.n, LayerVariant::kA, MixingSpec::haar(item.substream(1)));
      res = synthesize(arch, target, run);
    } else {
      res = synthesize(MZIMesh::zero_bias(task.n), target, run);
    }
    records[static_cast<std::size_t>(idx)] =
        BenchRecord{task.n, task.arch, task.t, res.wall_time_s, res.converged};
  });
  return records;
}

const char* to_string(CnotMode mode) {
  switch (mode) {
    case CnotMode::kVerifyTables:
      return "verify_tables";
    case CnotMode::kResynthesize:
      return "resynthesize";
    case CnotMode::kPerturbedBlocks:
      return "perturbed_blocks";
  }
  return "?";
}

CnotReport cnot_case_study(CnotMode mode, const OptimizerConfig& cfg) {
  CnotReport report;
  report.mode = to_string(mode);
  report.seed = cfg.rng;

  switch (mode) {
    case CnotMode::kVerifyTables: {
      const LayeredArchitecture arch = cnot_reference_architecture();
      const UnitaryMatrix u = layered_transfer(arch, cnot_reference_phases());
      report.infidelity = 1.0 - fidelity(u, cnot_unitary());
      report.converged = report.infidelity <= 1e-6;
      report.evaluations = 1;
      break;
    }
    case CnotMode::kResynthesize: {
      const LayeredArchitecture arch =
          make_variant(6, LayerVariant::kA, MixingSpec::haar(cfg.rng.substream(1)));
      OptimizerConfig run = cfg;
      run.rng = cfg.rng.substream(2);
      const SynthesisResult res = synthesize(arch, cnot_unitary(), run);
      report.infidelity = res.infidelity;
      report.converged = res.converged;
      report.evaluations = res.evaluations;
      break;
    }
    case CnotMode::kPerturbedBlocks: {
      std::vector<UnitaryMatrix> blocks;
      blocks.push_back(cnot_mixing_block());
      for (int m = 1; m < 6; ++m) {
        const UnitaryMatrix r =
            haar_random_unitary(6, cfg.rng.substream(10 + static_cast<std::uint64_t>(m)));
        blocks.push_back(perturb_mixing(cnot_mixing_block(), r, 0.1));
      }
      const LayeredArchitecture arch =
          make_variant(6, LayerVariant::kA, MixingSpec::explicit_list(std::move(blocks)));
      OptimizerConfig run = cfg;
      run.rng = cfg.rng.substream(20);
      const SynthesisResult res = synthesize(arch, cnot_unitary(), run);
      report.infidelity = res.infidelity;
      report.converged = res.converged;
      report.evaluations = res.evaluations;
      break;
    }
  }
  return report;
}

}  // namespace ums
