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

#include "ums/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "ums/cnot.hpp"
#include "ums/coupled_mode.hpp"
#include "ums/experiments.hpp"
#include "ums/io.hpp"
#include "ums/su3.hpp"
#include "ums/version.hpp"

namespace ums::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

const std::set<std::string> kGlobalKeys = {"command", "seed", "jobs", "out", "strict", "config"};
const std::set<std::string> kOptimizerKeys = {"hops",      "restarts",      "step_size",
                                              "temperature", "local_tol",   "local_max_iter",
                                              "target_infidelity"};

struct CommandSpec {
  std::set<std::string> keys;      // command-specific keys
  std::set<std::string> required;  // beyond global defaults
  bool optimizer = false;          // accepts optimizer keys
};

const std::map<std::string, CommandSpec>& command_table() {
  static const std::map<std::string, CommandSpec> table = {
      {"synthesize",
       {{"n", "arch", "variant", "mixing", "c_layout", "target", "allow_nonunitary"},
        {"target"},
        true}},
      {"histogram", {{"n", "targets", "layers", "mixing"}, {"n"}, true}},
      {"robustness", {{"n", "alphas", "targets", "r"}, {"n"}, true}},
      {"precision", {{"n", "bits", "samples", "arch"}, {"n"}, false}},
      {"bench", {{"ns", "archs", "threshold", "targets"}, {}, true}},
      {"cnot", {{"mode"}, {"mode"}, true}},
      {"su3-check", {{"eps", "rank_points"}, {}, true}},
      {"sample-haar", {{"n", "count"}, {"n"}, false}},
      {"coupled-mode", {{"n", "beta", "coupling", "length"}, {}, false}},
  };
  return table;
}

json default_config(const std::string& command) {
  json d = {{"command", command}, {"seed", 0}, {"jobs", 1}, {"out", ""}, {"strict", false}};
  if (command_table().at(command).optimizer) {
    d["hops"] = 100;
    d["restarts"] = 10;
    d["step_size"] = 0.5;
    d["temperature"] = 1.0;
    d["local_tol"] = 1e-12;
    d["local_max_iter"] = 10000;
    d["target_infidelity"] = 1e-10;
  }
  if (command == "synthesize") {
    d["arch"] = "layered";
    d["variant"] = "a";
    d["mixing"] = "haar";
    d["allow_nonunitary"] = false;
  } else if (command == "histogram") {
    d["targets"] = 20;
    d["mixing"] = "haar";
  } else if (command == "robustness") {
    d["alphas"] = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    d["targets"] = 20;
    d["r"] = "identity";
  } else if (command == "precision") {
    d["bits"] = {4, 6, 8, 10, 12};
    d["samples"] = 100;
    d["arch"] = "layered-dft";
  } else if (command == "bench") {
    d["ns"] = {3, 4, 5, 6, 7, 8};
    d["archs"] = {"layered", "clements"};
    d["threshold"] = 1e-5;
    d["targets"] = 10;
  } else if (command == "su3-check") {
    d["eps"] = 1e-3;
    d["rank_points"] = 100;
  } else if (command == "sample-haar") {
    d["count"] = 1;
  } else if (command == "coupled-mode") {
    d["n"] = 3;
    d["beta"] = 0.0;
    d["coupling"] = 1.0;
    d["length"] = 2.0 * std::numbers::pi / 9.0;
  }
  return d;
}

bool key_allowed(const CommandSpec& spec, const std::string& key) {
  return kGlobalKeys.count(key) != 0 || spec.keys.count(key) != 0 ||
         (spec.optimizer && kOptimizerKeys.count(key) != 0);
}

// Parses a flag token's value string into JSON, matching the type the key
// has in the default/merged config when known.
json parse_flag_value(const json& merged, const std::string& key, const std::string& raw) {
  const bool known = merged.contains(key);
  if (known && merged[key].is_string()) return raw;
  json parsed = json::parse(raw, nullptr, false);
  if (parsed.is_discarded()) {
    // bare words (paths, enum names) and comma lists of them
    if (raw.find(',') != std::string::npos) {
      json arr = json::array();
      std::size_t pos = 0;
      while (pos <= raw.size()) {
        const std::size_t next = raw.find(',', pos);
        const std::string item = raw.substr(pos, next == std::string::npos ? next : next - pos);
        json p = json::parse(item, nullptr, false);
        arr.push_back(p.is_discarded() ? json(item) : p);
        if (next == std::string::npos) break;
        pos = next + 1;
      }
      return arr;
    }
    return raw;
  }
  return parsed;
}

struct ResolvedConfig {
  std::string command;
  json values;
  std::vector<std::string> warnings;
  bool strict = false;
  int jobs = 1;
  std::string outdir;
  RngSeed seed{};
};

int get_int(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) fail(1, "missing required key '" + key + "'");
  if (!cfg[key].is_number()) fail(1, "key '" + key + "' must be a number");
  return cfg[key].get<int>();
}

double get_double(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_number()) fail(1, "key '" + key + "' must be a number");
  return cfg[key].get<double>();
}

std::string get_string(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_string()) fail(1, "key '" + key + "' must be a string");
  return cfg[key].get<std::string>();
}

std::vector<int> get_int_list(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_array()) fail(1, "key '" + key + "' must be a list");
  std::vector<int> out;
  for (const auto& v : cfg[key]) {
    if (!v.is_number()) fail(1, "key '" + key + "' must hold numbers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<double> get_double_list(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_array()) fail(1, "key '" + key + "' must be a list");
  std::vector<double> out;
  for (const auto& v : cfg[key]) {
    if (!v.is_number()) fail(1, "key '" + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::string> get_string_list(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_array()) fail(1, "key '" + key + "' must be a list");
  std::vector<std::string> out;
  for (const auto& v : cfg[key]) {
    if (!v.is_string()) fail(1, "key '" + key + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

OptimizerConfig optimizer_from(const ResolvedConfig& rc) {
  OptimizerConfig cfg;
  const json& v = rc.values;
  cfg.hops = get_int(v, "hops");
  cfg.restarts = get_int(v, "restarts");
  cfg.step_size = get_double(v, "step_size");
  cfg.temperature = get_double(v, "temperature");
  cfg.local_tol = get_double(v, "local_tol");
  cfg.local_max_iter = get_int(v, "local_max_iter");
  cfg.target_infidelity = get_double(v, "target_infidelity");
  cfg.rng = rc.seed;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail(1, e.what());
  }
  return cfg;
}

ResolvedConfig resolve(const std::string& command, const std::vector<std::string>& args) {
  if (command_table().count(command) == 0) {
    fail(1, "unknown command '" + command +
                "'; expected one of: synthesize histogram robustness precision bench cnot "
                "su3-check sample-haar coupled-mode");
  }
  const CommandSpec& spec = command_table().at(command);

  // flags → key/value strings
  std::vector<std::pair<std::string, std::string>> flags;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string a = args[i];
    if (a.rfind("--", 0) != 0) fail(1, "expected --key=value flag, got '" + a + "'");
    a = a.substr(2);
    std::string key, value;
    const auto eq = a.find('=');
    if (eq != std::string::npos) {
      key = a.substr(0, eq);
      value = a.substr(eq + 1);
    } else {
      key = a;
      if (key == "strict" || key == "allow_nonunitary") {
        value = "true";
      } else if (i + 1 < args.size()) {
        value = args[++i];
      } else {
        fail(1, "flag --" + key + " needs a value");
      }
    }
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "allow_nonunitary" || key == "strict") {
      // keep canonical spelling
    }
    if (!key_allowed(spec, key)) fail(1, "unknown key '" + key + "' for command " + command);
    flags.emplace_back(key, value);
  }

  ResolvedConfig rc;
  rc.command = command;
  rc.values = default_config(command);

  // config file layer
  std::string config_path;
  for (const auto& [k, v] : flags) {
    if (k == "config") config_path = v;
  }
  json file_values = json::object();
  if (!config_path.empty()) {
    json doc;
    try {
      doc = json::parse(io::read_text(config_path));
    } catch (const std::exception& e) {
      fail(1, std::string("cannot read config: ") + e.what());
    }
    if (!doc.is_object()) fail(1, "config file must hold a JSON object");
    for (const auto& [k, v] : doc.items()) {
      if (!key_allowed(spec, k)) fail(1, "unknown key '" + k + "' in config file");
      if (k == "command") {
        if (!v.is_string() || v.get<std::string>() != command) {
          fail(1, "config file command does not match '" + command + "'");
        }
        continue;
      }
      file_values[k] = v;
      rc.values[k] = v;
    }
  }

  // flag layer (wins over file, with a warning record)
  for (const auto& [k, v] : flags) {
    if (k == "config") continue;
    const json parsed = parse_flag_value(rc.values, k, v);
    if (file_values.contains(k) && file_values[k] != parsed) {
      rc.warnings.push_back("flag --" + k + " overrides config file value " +
                            file_values[k].dump() + " with " + parsed.dump());
    }
    rc.values[k] = parsed;
  }

  for (const auto& k : spec.required) {
    if (!rc.values.contains(k)) {
      std::string req;
      for (const auto& r : spec.required) req += r + " ";
      fail(1, "command " + command + " is missing required key '" + k + "' (requires: " + req + ")");
    }
  }

  rc.strict = rc.values["strict"].is_boolean() ? rc.values["strict"].get<bool>()
                                               : rc.values["strict"].get<int>() != 0;
  rc.jobs = std::max(1, get_int(rc.values, "jobs"));
  rc.seed = RngSeed{static_cast<std::uint64_t>(rc.values["seed"].get<long long>()), 0};

  std::string out = rc.values["out"].get<std::string>();
  if (out.empty()) {
    const char* env = std::getenv("UMS_OUT_DIR");
    out = (env != nullptr && *env != '\0') ? env : ".";
  }
  rc.outdir = out;
  rc.values["out"] = out;
  return rc;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Run {
 public:
  explicit Run(const ResolvedConfig& rc) : rc_(rc), started_(timestamp_utc()) {
    std::error_code ec;
    fs::create_directories(rc.outdir, ec);
    if (ec) fail(3, "cannot create output directory " + rc.outdir + ": " + ec.message());
  }

  std::string path(const std::string& name) const { return (fs::path(rc_.outdir) / name).string(); }

  void emit(const std::string& name, const std::string& content) {
    try {
      io::write_text(path(name), content);
    } catch (const std::exception& e) {
      fail(3, e.what());
    }
    outputs_.push_back({{"path", name}, {"digest", io::digest_hex(content)}});
  }

  void emit_csv(const std::string& name, const std::string& header,
                const std::vector<std::string>& rows) {
    std::string content = header + "\n";
    for (const auto& r : rows) content += r + "\n";
    emit(name, content);
  }

  // Written last, via rename, so a manifest implies a complete run.
  void finish() {
    json manifest = {{"tool", std::string("ums ") + kVersion},
                     {"command", rc_.command},
                     {"config", rc_.values},
                     {"warnings", rc_.warnings},
                     {"started", started_},
                     {"finished", timestamp_utc()},
                     {"outputs", outputs_}};
    const std::string final_path = path("manifest.json");
    const std::string tmp_path = final_path + ".tmp";
    try {
      io::write_text(tmp_path, manifest.dump(2) + "\n");
      fs::rename(tmp_path, final_path);
    } catch (const std::exception& e) {
      fail(3, e.what());
    }
  }

 private:
  const ResolvedConfig& rc_;
  std::string started_;
  json outputs_ = json::array();
};

int cmd_synthesize(const ResolvedConfig& rc) {
  const json& v = rc.values;
  const OptimizerConfig cfg = optimizer_from(rc);
  const std::string target_name = get_string(v, "target");

  UnitaryMatrix target = [&] {
    if (target_name == "cnot") return cnot_unitary();
    try {
      return io::load_matrix(target_name, v.contains("allow_nonunitary") &&
                                              v["allow_nonunitary"].get<bool>());
    } catch (const std::runtime_error& e) {
      fail(1, e.what());
    }
  }();
  const int n = v.contains("n") ? get_int(v, "n") : target.dim();
  if (n != target.dim()) fail(1, "target matrix is " + std::to_string(target.dim()) + "-channel");

  SynthesisResult res;
  const std::string arch_kind = get_string(v, "arch");
  if (arch_kind == "clements") {
    res = synthesize(MZIMesh::zero_bias(n), target, cfg);
  } else if (arch_kind == "layered") {
    const std::string mixing = get_string(v, "mixing");
    if (mixing != "dft" && mixing != "haar") fail(1, "mixing must be dft or haar");
    const MixingSpec mix =
        mixing == "dft" ? MixingSpec::dft() : MixingSpec::haar(rc.seed.substream(1));
    const std::string variant = get_string(v, "variant");
    LayerVariant lv = LayerVariant::kA;
    if (variant == "a") {
      lv = LayerVariant::kA;
    } else if (variant == "b") {
      lv = LayerVariant::kB;
    } else if (variant == "c") {
      lv = LayerVariant::kC;
    } else {
      fail(1, "variant must be a, b or c");
    }
    std::vector<int> layout;
    if (v.contains("c_layout")) layout = get_int_list(v, "c_layout");
    try {
      const LayeredArchitecture arch = make_variant(n, lv, mix, layout);
      res = synthesize(arch, target, cfg);
    } catch (const std::invalid_argument& e) {
      fail(1, e.what());
    }
  } else {
    fail(1, "arch must be layered or clements");
  }

  Run run(rc);
  run.emit("synthesis_result.json", io::synthesis_result_to_json(res));
  run.finish();
  std::cout << "infidelity " << io::format_sci(res.infidelity) << " converged "
            << (res.converged ? "yes" : "no") << "\n";
  return (!res.converged && rc.strict) ? 2 : 0;
}

int cmd_histogram(const ResolvedConfig& rc) {
  const json& v = rc.values;
  HistogramConfig hist;
  hist.n = get_int(v, "n");
  hist.n_targets = v.contains("targets") ? get_int(v, "targets") : 20;
  if (v.contains("layers")) hist.layer_counts = get_int_list(v, "layers");
  const std::string mixing = get_string(v, "mixing");
  if (mixing != "dft" && mixing != "haar") fail(1, "mixing must be dft or haar");
  hist.mixing = mixing == "dft" ? MixingKind::kDft : MixingKind::kHaar;

  const auto records = fidelity_histogram(hist, optimizer_from(rc), rc.jobs);
  std::vector<std::string> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(io::to_csv_row(r));

  Run run(rc);
  run.emit_csv("histogram.csv", io::histogram_csv_header(), rows);
  run.finish();
  return 0;
}

int cmd_robustness(const ResolvedConfig& rc) {
  const json& v = rc.values;
  const int n = get_int(v, "n");
  const std::vector<double> alphas = get_double_list(v, "alphas");
  const int targets = get_int(v, "targets");
  const std::string r = get_string(v, "r");
  if (r != "identity" && r != "haar") fail(1, "r must be identity or haar");

  const auto rows_data =
      robustness_sweep(n, alphas, targets,
                       r == "identity" ? RPerturbation::kIdentity : RPerturbation::kHaar,
                       optimizer_from(rc), rc.jobs);
  std::vector<std::string> rows;
  for (const auto& rec : rows_data) rows.push_back(io::to_csv_row(rec));

  Run run(rc);
  run.emit_csv("robustness.csv", io::robustness_csv_header(), rows);
  run.finish();
  return 0;
}

int cmd_precision(const ResolvedConfig& rc) {
  const json& v = rc.values;
  const int n = get_int(v, "n");
  const std::vector<int> bits = get_int_list(v, "bits");
  const int samples = get_int(v, "samples");
  const std::string arch = get_string(v, "arch");

  std::vector<PrecisionRecord> records;
  if (arch == "clements") {
    records = precision_sweep(MZIMesh::zero_bias(n), bits, samples, rc.seed);
  } else if (arch == "layered-dft") {
    records = precision_sweep(make_variant(n, LayerVariant::kA, MixingSpec::dft()), bits, samples,
                              rc.seed);
  } else if (arch == "layered-haar") {
    records = precision_sweep(
        make_variant(n, LayerVariant::kA, MixingSpec::haar(rc.seed.substream(1))), bits, samples,
        rc.seed);
  } else {
    fail(1, "arch must be layered-dft, layered-haar or clements");
  }

  std::vector<std::string> rows;
  for (const auto& rec : records) rows.push_back(io::to_csv_row(rec));
  Run run(rc);
  run.emit_csv("precision.csv", io::precision_csv_header(), rows);
  run.finish();
  return 0;
}

int cmd_bench(const ResolvedConfig& rc) {
  const json& v = rc.values;
  const std::vector<int> ns = get_int_list(v, "ns");
  const std::vector<std::string> archs = get_string_list(v, "archs");
  bool layered = false, clements = false;
  for (const auto& a : archs) {
    if (a == "layered") {
      layered = true;
    } else if (a == "clements") {
      clements = true;
    } else {
      fail(1, "archs entries must be layered or clements");
    }
  }
  const auto records = runtime_bench(ns, layered, clements, get_double(v, "threshold"),
                                     get_int(v, "targets"), optimizer_from(rc), rc.jobs);
  std::vector<std::string> rows;
  for (const auto& rec : records) rows.push_back(io::to_csv_row(rec));
  Run run(rc);
  run.emit_csv("bench.csv", io::bench_csv_header(), rows);
  run.finish();
  return 0;
}

int cmd_cnot(const ResolvedConfig& rc) {
  const std::string mode = get_string(rc.values, "mode");
  CnotMode m;
  if (mode == "verify_tables") {
    m = CnotMode::kVerifyTables;
  } else if (mode == "resynthesize") {
    m = CnotMode::kResynthesize;
  } else if (mode == "perturbed_blocks") {
    m = CnotMode::kPerturbedBlocks;
  } else {
    fail(1, "mode must be verify_tables, resynthesize or perturbed_blocks");
  }
  const CnotReport report = cnot_case_study(m, optimizer_from(rc));
  const json doc = {{"mode", report.mode},
                    {"infidelity", report.infidelity},
                    {"converged", report.converged},
                    {"evaluations", report.evaluations},
                    {"seed", {report.seed.seed, report.seed.stream}}};
  Run run(rc);
  run.emit("cnot_report.json", doc.dump(2) + "\n");
  run.finish();
  std::cout << "cnot " << report.mode << " infidelity " << io::format_sci(report.infidelity)
            << "\n";
  return (!report.converged && rc.strict) ? 2 : 0;
}

int cmd_su3_check(const ResolvedConfig& rc) {
  const json& v = rc.values;
  const double eps = get_double(v, "eps");
  const int rank_points = get_int(v, "rank_points");
  OptimizerConfig cfg = optimizer_from(rc);

  std::vector<int> generic_ranks;
  for (int i = 0; i < rank_points; ++i) {
    Rng rng(rc.seed.substream(100 + static_cast<std::uint64_t>(i)));
    su3::Point p;
    for (int j = 0; j < 8; ++j) p[j] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    generic_ranks.push_back(su3::tangent_rank(p, 1e-8));
  }
  const int identity_rank = su3::tangent_rank(su3::Point::Zero(), 1e-8);
  const double killing_det_identity = su3::killing_metric(su3::Point::Zero()).determinant();
  const auto [r7, r8] = su3::conjugation_identities();

  cfg.rng = rc.seed.substream(7);
  std::array<double, 8> residuals{};
  const auto ok = su3::local_solvability(Eigen::Matrix3cd::Identity(), eps, cfg, &residuals);

  const json doc = {{"ranks", {{"generic", generic_ranks}, {"identity", identity_rank}}},
                    {"killing_det_identity", killing_det_identity},
                    {"solvability", std::vector<bool>(ok.begin(), ok.end())},
                    {"solvability_residuals", residuals},
                    {"conjugation_residuals", {r7, r8}}};
  Run run(rc);
  run.emit("su3_report.json", doc.dump(2) + "\n");
  run.finish();
  return 0;
}

int cmd_sample_haar(const ResolvedConfig& rc) {
  const json& v = rc.values;
  const int n = get_int(v, "n");
  const int count = get_int(v, "count");
  if (n < 1 || count < 1) fail(1, "need n >= 1 and count >= 1");
  Run run(rc);
  for (int i = 0; i < count; ++i) {
    const UnitaryMatrix u = haar_random_unitary(n, rc.seed.substream(static_cast<std::uint64_t>(i)));
    run.emit("haar_" + std::to_string(i) + ".json", io::matrix_to_json(u.matrix()));
  }
  run.finish();
  return 0;
}

int cmd_coupled_mode(const ResolvedConfig& rc) {
  const json& v = rc.values;
  WaveguideArray w{get_int(v, "n"), get_double(v, "beta"), get_double(v, "coupling"),
                   get_double(v, "length")};
  if (w.n < 2) fail(1, "need n >= 2");
  const UnitaryMatrix u = coupled_mode_transfer(w);

  json doc = {{"n", w.n}, {"beta", w.beta}, {"coupling", w.c}, {"length", w.z}};
  const double balanced = 1.0 / std::sqrt(static_cast<double>(w.n));
  doc["max_modulus_deviation_from_balanced"] =
      (u.matrix().cwiseAbs().array() - balanced).abs().maxCoeff();
  doc["dft_alignment_residual"] =
      phase_align_residual(u.matrix(), dft_matrix(w.n).matrix());
  if (w.n == 3) {
    doc["closed_form_residual"] =
        (u.matrix() - tritter_closed_form(w.beta, w.c, w.z).matrix()).cwiseAbs().maxCoeff();
  }

  Run run(rc);
  run.emit("coupled_mode_matrix.json", io::matrix_to_json(u.matrix()));
  run.emit("coupled_mode_report.json", doc.dump(2) + "\n");
  run.finish();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  if (argc < 2) {
    std::cerr << "usage: ums <command> [--key=value ...]\n"
              << "commands: synthesize histogram robustness precision bench cnot su3-check "
                 "sample-haar coupled-mode\n";
    return 1;
  }
  try {
    const std::string command = argv[1];
    std::vector<std::string> args;
    for (int i = 2; i < argc; ++i) args.emplace_back(argv[i]);
    const ResolvedConfig rc = resolve(command, args);
    for (const auto& w : rc.warnings) std::cerr << "warning: " << w << "\n";

    if (command == "synthesize") return cmd_synthesize(rc);
    if (command == "histogram") return cmd_histogram(rc);
    if (command == "robustness") return cmd_robustness(rc);
    if (command == "precision") return cmd_precision(rc);
    if (command == "bench") return cmd_bench(rc);
    if (command == "cnot") return cmd_cnot(rc);
    if (command == "su3-check") return cmd_su3_check(rc);
    if (command == "sample-haar") return cmd_sample_haar(rc);
    if (command == "coupled-mode") return cmd_coupled_mode(rc);
    return 1;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ums::cli
