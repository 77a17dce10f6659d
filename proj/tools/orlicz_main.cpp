// Copyright 2026 The Orlicz Authors
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
// orlicz: command-line front end. Every subcommand prints one JSON document
// (stdout or --out) and exits 0 on pass, 1 on fail, 2 on refusal.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/family.hpp"
#include "orlicz/harness.hpp"
#include "orlicz/json_io.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"
#include "orlicz/reproduce.hpp"
#include "orlicz/symbol_conditions.hpp"
#include "orlicz/young_calculus.hpp"

namespace {

using nlohmann::json;
using namespace orlicz;

enum ExitCode : int { kPass = 0, kFail = 1, kRefused = 2 };

struct Outcome {
  json report;
  int code = kPass;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

json envelope(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

// --- exponents -------------------------------------------------------------

struct ExponentsArgs {
  std::string phi_path;
};

Outcome run_exponents(const ExponentsArgs& args) {
  const YoungFunction phi = young_function_from_json(read_json_file(args.phi_path));
  const ExponentReport r = compute_exponents(phi);
  json out = envelope("exponents");
  out["phi"] = to_json(phi);
  out["report"] = to_json(r);
  out["strict"] = r.strict();
  return {out, kPass};
}

// --- norm ------------------------------------------------------------------

struct NormArgs {
  std::string grid_path;
  std::string phi_path;
  bool weak = false;
};

Outcome run_norm(const NormArgs& args) {
  const GridFunction f = read_grid_function(args.grid_path);
  const YoungFunction phi = young_function_from_json(read_json_file(args.phi_path));
  const NormResult r = args.weak ? weak_orlicz_norm(f, phi) : luxemburg_norm(f, phi);
  json out = envelope("norm");
  out["kind"] = args.weak ? "weak-orlicz" : "luxemburg";
  out["phi"] = to_json(phi);
  out["grid"] = {{"dim", f.dim()}, {"extent", f.extent()}, {"n", f.n()}};
  out["result"] = to_json(r);
  return {out, kPass};
}

// --- check-mihlin / check-hormander -----------------------------------------

struct ConditionArgs {
  std::string symbol;
  std::vector<double> params;
  int dim = 1;
};

Outcome run_mihlin(const ConditionArgs& args) {
  const SymbolDescriptor a = make_symbol(args.symbol, args.dim, args.params);
  const MihlinResult r = mihlin_functional(a, args.dim);
  json out = envelope("check-mihlin");
  out["symbol"] = {{"name", args.symbol}, {"params", args.params}, {"dim", args.dim}};
  out["result"] = to_json(r);
  out["passed"] = std::isfinite(r.max);
  return {out, std::isfinite(r.max) ? kPass : kFail};
}

Outcome run_hormander(const ConditionArgs& args) {
  const SymbolDescriptor a = make_symbol(args.symbol, args.dim, args.params);
  const HormanderResult r = hormander_functional(a, args.dim);
  json out = envelope("check-hormander");
  out["symbol"] = {{"name", args.symbol}, {"params", args.params}, {"dim", args.dim}};
  out["result"] = to_json(r);
  out["passed"] = std::isfinite(r.max);
  return {out, std::isfinite(r.max) ? kPass : kFail};
}

// --- apply -----------------------------------------------------------------

struct ApplyArgs {
  std::string op = "multiplier";
  std::string input;
  std::string result;
  std::string symbol = "identity";
  std::vector<double> params;
  std::optional<double> cutoff;
  double quantization = 0.0;
  std::string phase = "flat";
  std::vector<double> phase_params;
};

Outcome run_apply(const ApplyArgs& args) {
  const GridFunction f = read_grid_function(args.input);
  ExperimentSpec spec;
  spec.op = operator_kind_from_string(args.op);
  spec.symbol = args.symbol;
  spec.symbol_params = args.params;
  spec.cutoff = args.cutoff;
  spec.quantization = args.quantization;
  spec.phase = args.phase;
  spec.phase_params = args.phase_params;
  spec.dim = f.dim();
  spec.extent = f.extent();
  spec.n = f.n();
  spec.validate();

  const SymbolDescriptor a = spec_symbol(spec);
  std::optional<ValidatedPhase> phase;
  if (spec.op == OperatorKind::fio) {
    phase = ValidatedPhase::accept(make_phase(spec.phase, spec.dim, spec.phase_params));
  }
  const GridFunction g = apply_operator(spec, a, phase, f);
  if (!args.result.empty()) write_grid_function(g, args.result);

  json out = envelope("apply");
  out["operator"] = to_string(spec.op);
  out["symbol"] = {{"name", spec.symbol}, {"params", spec.symbol_params}};
  if (spec.cutoff) out["symbol"]["cutoff"] = *spec.cutoff;
  if (spec.op == OperatorKind::psdo_general) out["quantization"] = spec.quantization;
  if (phase) out["phase"] = {{"name", spec.phase}, {"report", to_json(phase->report())}};
  out["grid"] = {{"dim", g.dim()}, {"extent", g.extent()}, {"n", g.n()}};
  out["input_l2"] = lp_norm(f, 2.0);
  out["output_l2"] = lp_norm(g, 2.0);
  out["output_sup"] = lp_norm(g, INFINITY);
  if (!args.result.empty()) out["result"] = args.result;
  return {out, kPass};
}

// --- transfer --------------------------------------------------------------

struct TransferArgs {
  std::string symbol = "windowed-x-xi";
  std::vector<double> params;
  double a1 = 0.0;
  double a2 = 0.5;
  double extent = 8.0;
  std::size_t n = 128;
  double tolerance = 1e-4;
};

Outcome run_transfer(const TransferArgs& args) {
  const int dim = 1;
  const auto A1 = QuantizationMatrix::scalar(dim, args.a1);
  const auto A2 = QuantizationMatrix::scalar(dim, args.a2);
  const SampledSymbol s1 =
      sample_symbol(make_symbol(args.symbol, dim, args.params), dim, args.extent, args.n);
  const SampledSymbol s2 = transfer_quantization(s1, A1, A2);
  const GridFunction f = GridFunction::sample(
      dim, args.extent, args.n, [](auto x) { return std::exp(-x[0] * x[0]); });
  const GridFunction o1 = apply_psdo_general(as_descriptor(s1, "a1"), A1, f);
  const GridFunction o2 = apply_psdo_general(as_descriptor(s2, "a2"), A2, f);
  double diff = 0.0;
  for (std::size_t i = 0; i < o1.size(); ++i) diff = std::max(diff, std::abs(o1[i] - o2[i]));
  double symbol_change = 0.0;
  for (std::size_t i = 0; i < s1.values.size(); ++i) {
    symbol_change = std::max(symbol_change, std::abs(s1.values[i] - s2.values[i]));
  }
  const bool ok = diff <= args.tolerance;
  json out = envelope("transfer");
  out["symbol"] = {{"name", args.symbol}, {"params", args.params}};
  out["A1"] = args.a1;
  out["A2"] = args.a2;
  out["grid"] = {{"dim", dim}, {"extent", args.extent}, {"n", args.n}};
  out["symbol_lattice"] = {{"nx", s1.nx}, {"nxi", s1.nxi}, {"dxi", s1.dxi}};
  out["max_symbol_change"] = symbol_change;
  out["operator_discrepancy"] = diff;
  out["tolerance"] = args.tolerance;
  out["passed"] = ok;
  return {out, ok ? kPass : kFail};
}

// --- bench -----------------------------------------------------------------

Outcome run_bench(const std::string& path) {
  const ExperimentSpec spec = experiment_spec_from_json(read_json_file(path));
  const BoundednessReport r = run_boundedness(spec);
  json out = to_json(r);
  out["command"] = "bench";
  out["experiment"] = to_json(spec);
  return {out, r.bounded ? kPass : kFail};
}

// --- reproduce -------------------------------------------------------------

Outcome run_reproduce(const std::string& id) {
  std::vector<std::string> ids;
  if (id == "all") {
    ids = reproduce_catalog();
  } else {
    ids.push_back(id);
  }
  json cases = json::array();
  bool all_passed = true;
  for (const auto& c : ids) {
    const CaseReport r = reproduce_case(c);
    all_passed = all_passed && r.passed;
    cases.push_back(to_json(r));
  }
  json out = envelope("reproduce");
  out["cases"] = cases;
  out["passed"] = all_passed;
  return {out, all_passed ? kPass : kFail};
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string config;
  std::string directory = ".";
  int dim = 1;
  double extent = 8.0;
  std::size_t n = 256;
};

Outcome run_generate(const GenerateArgs& args) {
  FamilyConfig cfg;
  if (!args.config.empty()) cfg = family_config_from_json(read_json_file(args.config));
  cfg.validate();
  const auto members = generate_family(cfg, args.dim, args.extent, args.n);
  std::filesystem::create_directories(args.directory);
  json files = json::array();
  for (const auto& m : members) {
    const auto path = std::filesystem::path(args.directory) / (m.label + ".bin");
    write_grid_function(m.f, path);
    files.push_back({{"label", m.label}, {"path", path.string()}, {"l2", lp_norm(m.f, 2.0)}});
  }
  json out = envelope("generate");
  out["family"] = to_json(cfg);
  out["grid"] = {{"dim", args.dim}, {"extent", args.extent}, {"n", args.n}};
  out["members"] = files;
  return {out, kPass};
}

// --- error reporting -------------------------------------------------------

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const NotStrictError*>(&e)) return "not-strict";
  if (dynamic_cast<const OrderViolationError*>(&e)) return "order-violation";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const DegenerateFunctionError*>(&e)) return "degenerate-function";
  if (dynamic_cast<const FormatError*>(&e)) return "format";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  if (dynamic_cast<const CapabilityError*>(&e)) return "capability";
  if (dynamic_cast<const SqueezingViolationError*>(&e)) return "squeezing-violation";
  if (dynamic_cast<const DivergenceError*>(&e)) return "divergence";
  if (dynamic_cast<const SymbolEvaluationError*>(&e)) return "symbol-evaluation";
  return "internal";
}

// Input-side problems are refusals; numerical breakdowns are failures.
int error_code(const std::string& kind) {
  if (kind == "divergence" || kind == "symbol-evaluation" ||
      kind == "squeezing-violation" || kind == "internal") {
    return kFail;
  }
  return kRefused;
}

void emit(const json& report, const std::string& out_path) {
  const std::string text = dump_json(report) + "\n";
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + out_path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-space exponents, norms and operator boundedness checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this file");

  ExponentsArgs exp_args;
  auto* exp_cmd = app.add_subcommand("exponents", "Lebesgue exponents of a Young function");
  exp_cmd->add_option("phi", exp_args.phi_path, "Young function JSON")->required();

  NormArgs norm_args;
  auto* norm_cmd = app.add_subcommand("norm", "Luxemburg or weak-Orlicz norm of a grid file");
  norm_cmd->add_option("grid", norm_args.grid_path, "Grid function file")->required();
  norm_cmd->add_option("--phi", norm_args.phi_path, "Young function JSON")->required();
  norm_cmd->add_flag("--weak", norm_args.weak, "Weak-Orlicz norm");

  ConditionArgs mihlin_args;
  auto* mihlin_cmd = app.add_subcommand("check-mihlin", "Mihlin functional of a symbol");
  ConditionArgs horm_args;
  auto* horm_cmd = app.add_subcommand("check-hormander", "Hormander functional of a symbol");
  for (auto [cmd, args] : {std::pair{mihlin_cmd, &mihlin_args}, std::pair{horm_cmd, &horm_args}}) {
    cmd->add_option("symbol", args->symbol, "Catalog symbol")->required();
    cmd->add_option("--dim", args->dim, "Dimension (1 or 2)")->check(CLI::Range(1, 2));
    cmd->add_option("--param", args->params, "Symbol parameters");
  }

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a grid file");
  apply_cmd->add_option("--op", apply_args.op, "multiplier | psdo-kn | psdo | fio")
      ->check(CLI::IsMember({"multiplier", "psdo-kn", "psdo", "psdo-general", "fio"}));
  apply_cmd->add_option("--input", apply_args.input, "Input grid file")->required();
  apply_cmd->add_option("--result", apply_args.result, "Write the output grid here");
  apply_cmd->add_option("--symbol", apply_args.symbol, "Catalog symbol");
  apply_cmd->add_option("--param", apply_args.params, "Symbol parameters");
  apply_cmd->add_option("--cutoff", apply_args.cutoff, "Drop |xi| < cutoff");
  apply_cmd->add_option("--A", apply_args.quantization, "Scalar quantization A = s I");
  apply_cmd->add_option("--phase", apply_args.phase, "Catalog phase (fio)");
  apply_cmd->add_option("--phase-param", apply_args.phase_params, "Phase parameters");

  TransferArgs tr_args;
  auto* tr_cmd = app.add_subcommand("transfer", "Change of quantization with operator check");
  tr_cmd->add_option("--a1", tr_args.symbol, "Catalog symbol (d = 1)");
  tr_cmd->add_option("--param", tr_args.params, "Symbol parameters");
  tr_cmd->add_option("--A1", tr_args.a1, "Source quantization");
  tr_cmd->add_option("--A2", tr_args.a2, "Target quantization");
  tr_cmd->add_option("--extent", tr_args.extent, "Half-width L of the grid");
  tr_cmd->add_option("--n", tr_args.n, "Samples per axis");
  tr_cmd->add_option("--tol", tr_args.tolerance, "Allowed operator discrepancy");

  std::string bench_path;
  auto* bench_cmd = app.add_subcommand("bench", "Empirical boundedness experiment");
  bench_cmd->add_option("experiment", bench_path, "Experiment JSON")->required();

  std::string case_id;
  auto* repro_cmd = app.add_subcommand("reproduce", "Run a scripted reference check");
  repro_cmd->add_option("case", case_id, "Case id or 'all'")->required();

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Write the test family as grid files");
  gen_cmd->add_option("--config", gen_args.config, "Family JSON");
  gen_cmd->add_option("--dir", gen_args.directory, "Output directory");
  gen_cmd->add_option("--dim", gen_args.dim, "Dimension")->check(CLI::Range(1, 2));
  gen_cmd->add_option("--extent", gen_args.extent, "Half-width L of the grid");
  gen_cmd->add_option("--n", gen_args.n, "Samples per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kRefused;
  }

  Outcome outcome;
  try {
    if (*exp_cmd) {
      outcome = run_exponents(exp_args);
    } else if (*norm_cmd) {
      outcome = run_norm(norm_args);
    } else if (*mihlin_cmd) {
      outcome = run_mihlin(mihlin_args);
    } else if (*horm_cmd) {
      outcome = run_hormander(horm_args);
    } else if (*apply_cmd) {
      outcome = run_apply(apply_args);
    } else if (*tr_cmd) {
      outcome = run_transfer(tr_args);
    } else if (*bench_cmd) {
      outcome = run_bench(bench_path);
    } else if (*repro_cmd) {
      outcome = run_reproduce(case_id);
    } else if (*gen_cmd) {
      outcome = run_generate(gen_args);
    }
  } catch (const std::exception& e) {
    const std::string kind = error_kind(e);
    outcome.code = error_code(kind);
    outcome.report = {{"schema_version", kSchemaVersion},
                      {"command", app.get_subcommands().front()->get_name()},
                      {"status", outcome.code == kRefused ? "refused" : "failed"},
                      {"error", kind},
                      {"message", e.what()}};
    std::cerr << "orlicz: " << kind << ": " << e.what() << "\n";
  }

  try {
    emit(outcome.report, out_path);
  } catch (const std::exception& e) {
    std::cerr << "orlicz: " << e.what() << "\n";
    return kRefused;
  }
  return outcome.code;
}
