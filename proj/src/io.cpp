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

#include "ums/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ums::io {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw std::runtime_error("matrix JSON schema violation at " + pointer + ": " + what);
}

}  // namespace

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "{\"n\": " << m.rows() << ", \"entries\": [";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != 0 || c != 0) out << ", ";
      out << '[' << format_g17(m(r, c).real()) << ", " << format_g17(m(r, c).imag()) << ']';
    }
  }
  out << "]}\n";
  return out.str();
}

void save_matrix(const ComplexMatrix& m, const std::string& path) {
  if (m.rows() != m.cols()) throw std::invalid_argument("save_matrix: matrix must be square");
  write_text(path, matrix_to_json(m));
}

ComplexMatrix load_matrix_raw(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("load_matrix: " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) schema_error("/", "expected an object");
  if (!doc.contains("n")) schema_error("/n", "missing");
  if (!doc["n"].is_number_integer()) schema_error("/n", "expected an integer");
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > 4096) schema_error("/n", "dimension out of range");
  if (!doc.contains("entries")) schema_error("/entries", "missing");
  const auto& entries = doc["entries"];
  if (!entries.is_array()) schema_error("/entries", "expected an array");
  if (static_cast<long long>(entries.size()) != n * n) {
    schema_error("/entries", "expected " + std::to_string(n * n) + " entries, got " +
                                 std::to_string(entries.size()));
  }
  ComplexMatrix m(n, n);
  for (long long i = 0; i < n * n; ++i) {
    const auto& e = entries[static_cast<std::size_t>(i)];
    const std::string ptr = "/entries/" + std::to_string(i);
    if (!e.is_array() || e.size() != 2) schema_error(ptr, "expected [re, im]");
    if (!e[0].is_number() || !e[1].is_number()) schema_error(ptr, "expected numeric re/im");
    m(i / n, i % n) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  if (!m.allFinite()) schema_error("/entries", "non-finite entry");
  return m;
}

UnitaryMatrix load_matrix(const std::string& path, bool allow_nonunitary) {
  ComplexMatrix m = load_matrix_raw(path);
  const double defect = unitarity_defect(m);
  if (defect > 1e-8) {
    if (!allow_nonunitary) {
      throw std::runtime_error("load_matrix: " + path + " is not unitary (defect " +
                               format_sci(defect) + "); pass --allow-nonunitary to accept");
    }
    // Accepted off-unitary content is polar-projected onto the group.
    return nearest_unitary(m);
  }
  return UnitaryMatrix(std::move(m), 1e-8);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::string out = header;
  out += '\n';
  for (const auto& r : rows) {
    out += r;
    out += '\n';
  }
  write_text(path, out);
}

std::string histogram_csv_header() { return "target_index,n,phase_layers,infidelity,converged"; }

std::string to_csv_row(const HistogramRecord& r) {
  std::ostringstream out;
  out << r.target_index << ',' << r.n << ',' << r.phase_layers_used << ','
      << format_sci(r.infidelity) << ',' << (r.converged ? 1 : 0);
  return out.str();
}

std::string robustness_csv_header() {
  return "alpha,mean_infid,best10,worst10,mean_block_dissim,samples";
}

std::string to_csv_row(const SweepRecord& r) {
  std::ostringstream out;
  out << format_sci(r.sweep_parameter) << ',' << format_sci(r.mean_infidelity) << ','
      << format_sci(r.best10_mean) << ',' << format_sci(r.worst10_mean) << ','
      << format_sci(r.mean_block_dissimilarity) << ',' << r.samples;
  return out.str();
}

std::string precision_csv_header() { return "bits,mean_fid,min_fid,max_fid,samples"; }

std::string to_csv_row(const PrecisionRecord& r) {
  std::ostringstream out;
  out << r.bits << ',' << format_sci(r.mean_fid) << ',' << format_sci(r.min_fid) << ','
      << format_sci(r.max_fid) << ',' << r.samples;
  return out.str();
}

std::string bench_csv_header() { return "n,arch,target_index,runtime_s,threshold_met"; }

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream out;
  out << r.n << ',' << r.architecture << ',' << r.target_index << ',' << format_sci(r.runtime_s)
      << ',' << (r.threshold_met ? 1 : 0);
  return out.str();
}

std::string synthesis_result_to_json(const SynthesisResult& res) {
  json trace = json::array();
  for (const auto& [hop, f] : res.fidelity_trace) trace.push_back({hop, f});
  json doc = {
      {"infidelity", res.infidelity},
      {"phases", std::vector<double>(res.phases.data(), res.phases.data() + res.phases.size())},
      {"evaluations", res.evaluations},
      {"wall_time_s", res.wall_time_s},
      {"converged", res.converged},
      {"seed", {res.rng_used.seed, res.rng_used.stream}},
      {"trace", trace},
  };
  return doc.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x00000100000001B3ull;
  }
  return h;
}

std::string digest_hex(std::string_view data) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return buf;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ums::io
