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

#include <optional>
#include <string>
#include <vector>

#include "ums/clements.hpp"
#include "ums/layered.hpp"
#include "ums/optimizer.hpp"

namespace ums {

struct HistogramRecord {
  int target_index = 0;
  double infidelity = 0.0;
  bool converged = false;
  std::string arch_descriptor;
  int n = 0;
  int phase_layers_used = 0;
};

struct SweepRecord {
  double sweep_parameter = 0.0;
  double mean_infidelity = 0.0;
  double best10_mean = 0.0;   // mean of the 10 best (smallest) infidelities
  double worst10_mean = 0.0;  // mean of the 10 worst
  double mean_block_dissimilarity = 0.0;  // 1 − S, 0 where not applicable
  int samples = 0;
};

struct PrecisionRecord {
  int bits = 0;
  double mean_fid = 0.0;
  double min_fid = 0.0;
  double max_fid = 0.0;
  int samples = 0;
};

struct BenchRecord {
  int n = 0;
  std::string architecture;  // "layered" | "clements"
  int target_index = 0;
  double runtime_s = 0.0;
  bool threshold_met = false;
};

enum class MixingKind { kDft, kHaar };
enum class RPerturbation { kIdentity, kHaar };

struct HistogramConfig {
  int n = 5;
  int n_targets = 20;
  std::vector<int> layer_counts;  // phase-layer counts; defaults to {n+1}
  MixingKind mixing = MixingKind::kHaar;
};

/// Synthesizes Haar targets over freshly drawn architectures for each
/// (target, layer count) cell; one record per cell, n_targets×|layer_counts|
/// in total. Deterministic in cfg.rng; parallel over cells.
std::vector<HistogramRecord> fidelity_histogram(const HistogramConfig& hist,
                                                const OptimizerConfig& cfg, int jobs = 1);

/// Per α: Haar mixing blocks are blended toward R (identity worst-case or
/// fresh Haar draws), a Haar target is synthesized, and the infidelity and
/// block dissimilarity 1−S are aggregated into one SweepRecord.
/// raw_infidelities (α-major, target-minor) is filled when non-null.
std::vector<SweepRecord> robustness_sweep(int n, const std::vector<double>& alphas, int n_targets,
                                          RPerturbation r_choice, const OptimizerConfig& cfg,
                                          int jobs = 1,
                                          std::vector<std::vector<double>>* raw_infidelities = nullptr);

/// Direct-evaluation precision model: a reference phase vector φ₀ defines
/// U₀; per bit count b, n_samples perturbations δφ uniform in
/// ±2π/2^{b+1} are applied and F(U(φ₀+δφ), U₀) is recorded. No
/// re-optimization is involved.
std::vector<PrecisionRecord> precision_sweep(const FactorChain& chain,
                                             const std::vector<int>& bits, int n_samples,
                                             RngSeed seed);
std::vector<PrecisionRecord> precision_sweep(const LayeredArchitecture& arch,
                                             const std::vector<int>& bits, int n_samples,
                                             RngSeed seed);
std::vector<PrecisionRecord> precision_sweep(const MZIMesh& mesh, const std::vector<int>& bits,
                                             int n_samples, RngSeed seed);

/// Appendix-E-style dataset: per size and architecture, synthesizes
/// n_targets Haar targets with early stop at the threshold infidelity and
/// records per-target wall time and success.
std::vector<BenchRecord> runtime_bench(const std::vector<int>& ns, bool layered, bool clements,
                                       double threshold, int n_targets, const OptimizerConfig& cfg,
                                       int jobs = 1);

enum class CnotMode { kVerifyTables, kResynthesize, kPerturbedBlocks };

struct CnotReport {
  std::string mode;
  double infidelity = 1.0;
  bool converged = false;
  long evaluations = 0;
  RngSeed seed{};
};

/// The 6-channel CNOT case study:
///  verify_tables    — forward model with the published block and phases;
///  resynthesize     — fresh Haar mixing layers, full synthesis;
///  perturbed_blocks — first block published, five α=0.1 perturbations.
CnotReport cnot_case_study(CnotMode mode, const OptimizerConfig& cfg);

const char* to_string(CnotMode mode);

}  // namespace ums
