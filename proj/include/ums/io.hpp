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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ums/experiments.hpp"
#include "ums/linalg.hpp"
#include "ums/optimizer.hpp"

namespace ums::io {

/// Scientific notation with 13 significant digits (CSV cells).
std::string format_sci(double v);
/// Shortest representation carrying 17 significant digits (JSON floats).
std::string format_g17(double v);

/// Matrix JSON schema: {"n": int, "entries": [[re, im], ...]} row-major.
std::string matrix_to_json(const ComplexMatrix& m);
void save_matrix(const ComplexMatrix& m, const std::string& path);

/// Parses the matrix JSON schema; errors carry a JSON pointer to the
/// offending field. No unitarity gate.
ComplexMatrix load_matrix_raw(const std::string& path);

/// load_matrix_raw plus the unitarity gate (tol 1e-8). With
/// allow_nonunitary, off-unitary content is polar-projected onto the
/// unitary group instead of rejected.
UnitaryMatrix load_matrix(const std::string& path, bool allow_nonunitary = false);

/// Header + pre-rendered rows; trailing newline, LF only.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);

std::string histogram_csv_header();
std::string to_csv_row(const HistogramRecord& r);
std::string robustness_csv_header();
std::string to_csv_row(const SweepRecord& r);
std::string precision_csv_header();
std::string to_csv_row(const PrecisionRecord& r);
std::string bench_csv_header();
std::string to_csv_row(const BenchRecord& r);

std::string synthesis_result_to_json(const SynthesisResult& res);

/// FNV-1a 64-bit content digest (hex) used in run manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string digest_hex(std::string_view data);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

}  // namespace ums::io
