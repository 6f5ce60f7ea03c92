// qppc: construct, validate, simulate, optimize and gate-count quantum
// precoded polar codes.
//
// Exit status: 0 success, 1 validation failure, 2 usage error, 3 I/O error.

#include <fmt/format.h>

#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qppc/code_io.hpp"
#include "qppc/ga.hpp"
#include "qppc/gates.hpp"
#include "qppc/montecarlo.hpp"

using namespace qppc;

namespace {

enum Exit : int { kOk = 0, kInvalid = 1, kUsage = 2, kIo = 3 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const std::exception& e) {
    throw IoFailure(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  try {
    write_text_file(path, text);
  } catch (const std::exception& e) {
    throw IoFailure(e.what());
  }
}

CodeFile load_code_file(const std::string& path) { return parse_code_file(read_file(path)); }

struct Validation {
  CssReport css;
  PrecoderReport precoder;
  bool symplectic_checked = false;
  SymplecticReport symplectic;

  bool valid() const { return css.valid() && precoder.valid() && symplectic.valid(); }
};

Validation run_validation(const CodeFile& file) {
  Validation v;
  const CodeSpec spec = file.spec();
  const Precoder t = file.precoder();
  v.css = validate_css(spec);
  v.precoder = validate_precoder(t, spec);
  if (spec.size() <= BitMatrix::kMaxDenseDim) {
    const ParityChecks h = parity_checks(spec, t);
    v.symplectic = symplectic_check(h.hx, h.hz);
    v.symplectic_checked = true;
  }
  return v;
}

std::string describe(const Validation& v) {
  std::string out = v.css.describe() + "\n" + v.precoder.describe() + "\n";
  if (v.symplectic_checked) {
    out += fmt::format("symplectic: {} ({} nonzero)\n", v.symplectic.valid() ? "ok" : "FAIL", v.symplectic.nonzero);
  } else {
    out += "symplectic: skipped (N too large for dense check)\n";
  }
  return out;
}

Json entries_json(const std::vector<Entry>& entries) {
  Json a = Json::array();
  for (const auto& [i, j] : entries) a.push_back({i, j});
  return a;
}

Json validation_json(const Validation& v) {
  Json doc;
  doc["valid"] = v.valid();
  doc["css"] = {{"valid", v.css.valid()}, {"frozen_pairs", entries_json(v.css.frozen_pairs)}};
  doc["precoder"] = {{"valid", v.precoder.valid()},
                     {"involution", v.precoder.involution},
                     {"persymmetric", v.precoder.persymmetric},
                     {"mirror_closed", v.precoder.mirror_closed},
                     {"sparsity", v.precoder.sparsity},
                     {"orphans", entries_json(v.precoder.orphans)},
                     {"sparsity_violations", entries_json(v.precoder.sparsity_violations)}};
  doc["symplectic"] = {{"checked", v.symplectic_checked}, {"nonzero", v.symplectic.nonzero}};
  return doc;
}

// Loads a code file and refuses with the validation report if it is invalid.
QuantumCode load_valid_code(const std::string& path) {
  const CodeFile file = load_code_file(path);
  const Validation v = run_validation(file);
  if (!v.valid()) throw Invalid(fmt::format("{}: invalid code\n{}", path, describe(v)));
  return file.code();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file(out_path, text);
  }
}

Json point_json(const SimPoint& pt) {
  return {{"p", pt.p},           {"L", pt.list_size},         {"N", pt.n},
          {"trials", pt.trials}, {"failures", pt.failures},   {"ler", pt.ler},
          {"ci95_low", pt.ci95_low}, {"ci95_high", pt.ci95_high}, {"seconds", pt.seconds}};
}

// --- subcommands ------------------------------------------------------------

struct ConstructArgs {
  int n_exp = 6;
  double p = 0.05;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  const CodeSpec spec = initial_info_set(a.n_exp, a.p);
  const QuantumCode code(spec, Precoder(spec.size()));
  emit(a.out, render_code_file(CodeFile::from_code(code, Json{{"construction", "initial_info_set"}, {"p", a.p}})));
  return kOk;
}

struct ValidateArgs {
  std::string code;
  bool json = false;
};

int cmd_validate(const ValidateArgs& a) {
  const Validation v = run_validation(load_code_file(a.code));
  if (a.json) {
    fmt::print("{}\n", validation_json(v).dump(2));
  } else {
    fmt::print("{}{}\n", describe(v), v.valid() ? "PASS" : "FAIL");
  }
  return v.valid() ? kOk : kInvalid;
}

struct SimulateArgs {
  std::string code;
  std::vector<double> p_list;
  std::size_t list_size = 4;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t min_failures = 100;
  std::size_t batch = 1000;
  std::size_t threads = 0;
  std::string out;
  std::string json_out;
};

int cmd_simulate(const SimulateArgs& a) {
  const QuantumCode code = load_valid_code(a.code);
  SweepOptions opts;
  opts.trials_per_point = a.trials;
  opts.min_failures = a.min_failures;
  opts.batch = a.batch;
  opts.threads = a.threads;
  const std::vector<SimPoint> points = run_sweep(code, a.p_list, a.list_size, a.seed, opts);
  emit(a.out, render_csv(points));
  if (!a.json_out.empty()) {
    Json doc;
    doc["version"] = 1;
    doc["code"] = code_file_to_json(CodeFile::from_code(code));
    doc["list_size"] = a.list_size;
    doc["seed"] = a.seed;
    doc["trials_per_point"] = a.trials;
    doc["min_failures"] = a.min_failures;
    doc["points"] = Json::array();
    for (const SimPoint& pt : points) doc["points"].push_back(point_json(pt));
    write_file(a.json_out, doc.dump(2) + "\n");
  }
  return kOk;
}

struct OptimizeArgs {
  std::string config;
  std::string out;
  std::string log;
  std::string from;
  int n_exp = 6;
  std::size_t threads = 0;
  bool threads_set = false;
};

int cmd_optimize(const OptimizeArgs& a) {
  Json doc;
  try {
    doc = Json::parse(read_file(a.config));
  } catch (const Json::parse_error& e) {
    throw CodeFileError(fmt::format("config: {}", e.what()));
  }
  GAConfig cfg = ga_config_from_json(doc);
  if (a.threads_set) cfg.threads = a.threads;
  const CodeSpec seed = a.from.empty() ? initial_info_set(a.n_exp, cfg.p) : load_valid_code(a.from).spec();

  GenerationLog log;
  const Candidate best = joint_optimize(cfg, seed, &log);
  std::string lines;
  for (const GenerationRecord& r : log) lines += render_log_line(r) + "\n";
  write_file(a.log.empty() ? a.out + ".log" : a.log, lines);

  Json meta;
  meta["fitness"] = best.fitness;
  meta["eval_trials"] = best.eval_trials;
  meta["ga_config"] = ga_config_to_json(cfg);
  write_file(a.out, render_code_file(CodeFile::from_code(best.code, std::move(meta))));
  fmt::print("best fitness {} with {} off-diagonal entries\n", best.fitness, best.code.precoder().off_diag().size());
  return kOk;
}

struct GatecountArgs {
  std::string code;
  bool json = false;
};

int cmd_gatecount(const GatecountArgs& a) {
  const QuantumCode code = load_valid_code(a.code);
  if (code.size() > BitMatrix::kMaxDenseDim) throw Invalid("gatecount: N too large for dense gate counting");
  const std::size_t extra = encoder_extra_gates(code.precoder());
  const SyndromeGates g = syndrome_extraction_gates(code);
  if (a.json) {
    Json doc{{"encoder_extra_gates", extra},
             {"stab_nnz", g.stab_nnz},
             {"total_gates", g.total_gates},
             {"delta_vs_unprecoded", g.delta_vs_unprecoded},
             {"surface_code_reference_gates", kSurfaceCodeReferenceGates}};
    fmt::print("{}\n", doc.dump(2));
  } else {
    fmt::print("N: {}\n", code.size());
    fmt::print("encoder_extra_gates: {}\n", extra);
    fmt::print("stab_nnz: {}\n", g.stab_nnz);
    fmt::print("total_gates: {}\n", g.total_gates);
    fmt::print("delta_vs_unprecoded: {}\n", g.delta_vs_unprecoded);
    fmt::print("surface_code_reference_gates: {}\n", kSurfaceCodeReferenceGates);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum precoded polar codes"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Write the reliability-ordered seed code with T = I");
  c->add_option("--n", construct.n_exp, "log2 of the blocklength")->required()->check(CLI::Range(1, 24));
  c->add_option("--p", construct.p, "Depolarizing probability used for the reliability order")
      ->check(CLI::Range(0.0, 0.75));
  c->add_option("-o,--out", construct.out, "Output code file (default stdout)");

  ValidateArgs validate;
  auto* v = app.add_subcommand("validate", "Check CSS, precoder and symplectic constraints");
  v->add_option("code", validate.code, "Code file")->required();
  v->add_flag("--json", validate.json, "Machine-readable report");

  SimulateArgs simulate;
  auto* s = app.add_subcommand("simulate", "Monte Carlo logical error rates");
  s->add_option("code", simulate.code, "Code file")->required();
  s->add_option("--p", simulate.p_list, "Depolarizing probabilities")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 0.75));
  s->add_option("--L", simulate.list_size, "List size")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--trials", simulate.trials, "Trials per point")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--seed", simulate.seed, "Master seed")->capture_default_str();
  s->add_option("--min-failures", simulate.min_failures, "Stop a point after this many failures (0 disables)")
      ->capture_default_str();
  s->add_option("--batch", simulate.batch, "Trials between early-stop checks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--threads", simulate.threads, "Worker threads (0 = all cores)")->envname("QPPC_THREADS");
  s->add_option("-o,--out", simulate.out, "Output CSV (default stdout)");
  s->add_option("--json", simulate.json_out, "Also write a JSON report embedding the code file");

  OptimizeArgs optimize;
  auto* o = app.add_subcommand("optimize", "Joint genetic optimization of the information set and precoder");
  o->add_option("config", optimize.config, "GA configuration document")->required();
  o->add_option("-o,--out", optimize.out, "Output code file")->required();
  o->add_option("--log", optimize.log, "Generation log (default <out>.log)");
  auto* from = o->add_option("--from", optimize.from, "Seed code file (its information set is used)");
  o->add_option("--n", optimize.n_exp, "log2 of the blocklength of the default seed")
      ->capture_default_str()
      ->check(CLI::Range(2, 24))
      ->excludes(from);
  auto* threads = o->add_option("--threads", optimize.threads, "Worker threads (0 = all cores)")->envname("QPPC_THREADS");

  GatecountArgs gatecount;
  auto* g = app.add_subcommand("gatecount", "Encoder and syndrome-extraction gate counts");
  g->add_option("code", gatecount.code, "Code file")->required();
  g->add_flag("--json", gatecount.json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  optimize.threads_set = threads->count() > 0;

  try {
    if (*c) return cmd_construct(construct);
    if (*v) return cmd_validate(validate);
    if (*s) return cmd_simulate(simulate);
    if (*o) return cmd_optimize(optimize);
    if (*g) return cmd_gatecount(gatecount);
  } catch (const IoFailure& e) {
    fmt::print(stderr, "qppc: {}\n", e.what());
    return kIo;
  } catch (const CodeFileError& e) {
    fmt::print(stderr, "qppc: {}\n", e.what());
    return kInvalid;
  } catch (const Invalid& e) {
    fmt::print(stderr, "qppc: {}\n", e.what());
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "qppc: {}\n", e.what());
    return kInvalid;
  } catch (const std::exception& e) {
    fmt::print(stderr, "qppc: {}\n", e.what());
    return kInvalid;
  }
  return kUsage;
}
