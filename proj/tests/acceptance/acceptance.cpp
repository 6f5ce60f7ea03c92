// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria
//   acceptance 1 4 9      run the listed criteria only

#include <sys/wait.h>
#include <unistd.h>

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../support/random_code.hpp"
#include "qppc/code_io.hpp"
#include "qppc/decoder.hpp"
#include "qppc/ga.hpp"
#include "qppc/gates.hpp"
#include "qppc/montecarlo.hpp"
#include "qppc/oracle.hpp"

using namespace qppc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Rng64 = std::mt19937_64;

// 1. Full-list decoding equals exhaustive MAP.
Outcome oracle_equivalence() {
  Rng64 rng(101);
  std::size_t cases = 0, pm_mismatch = 0, verdict_mismatch = 0, dead = 0;
  double worst = 0.0;
  for (int n_exp : {2, 3}) {
    for (int c = 0; c < 20; ++c) {
      const QuantumCode code = testing::random_code(n_exp, rng, 20);
      const std::size_t list = std::size_t{1} << (2 * code.spec().k());
      for (double p : {0.05, 0.1}) {
        const ChannelParam param(p);
        QuantumListDecoder dec(code, param, list);
        const std::uint64_t seed = rng();
        for (std::size_t t = 0; t < 200; ++t) {
          const PauliVec e = trial_noise(param, code.size(), seed, t);
          const SyndromePair syn = measure_syndrome(e, code);
          const QuantumDecodeResult r = dec.decode(syn);
          const OracleResult o = exhaustive_map_decode(syn, code, param);
          ++cases;
          if (!r.ok) {
            ++dead;
            continue;
          }
          const double d = std::abs(r.pm - o.pm);
          worst = std::max(worst, d);
          pm_mismatch += d > 1e-9;
          verdict_mismatch += is_logical_success(r.s_hat, e, code) != is_logical_success(o.s_best, e, code);
        }
      }
    }
  }
  return {pm_mismatch == 0 && verdict_mismatch == 0 && dead == 0,
          fmt::format("{} cases, pm mismatches {}, verdict mismatches {}, empty lists {}, max |dpm| {:.3g}", cases,
                      pm_mismatch, verdict_mismatch, dead, worst)};
}

// 2. Degenerate settings reduce to the simpler decoders.
Outcome degenerations() {
  Rng64 rng(202);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int sizes[] = {3, 4, 6, 8};
  std::size_t sc_bad = 0, plain_bad = 0, binary_bad = 0;
  const std::size_t reps = 1000;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    const int n_exp = sizes[rep % 4];
    const QuantumCode code = testing::random_code(n_exp, rng, 4 * (std::size_t{1} << n_exp));
    const ChannelParam param(0.01 + 0.14 * unit(rng));
    const PauliVec e = sample_depolarizing(param, code.size(), rng);
    const SyndromePair syn = measure_syndrome(e, code);
    sc_bad += quantum_scl_decode(syn, code, param, 1).s_hat != quantum_sc_decode(syn, code, param).s_hat;

    const QuantumCode plain(code.spec(), Precoder(code.size()));
    const SyndromePair syn0 = measure_syndrome(e, plain);
    plain_bad +=
        quantum_scl_decode(syn0, plain, param, 4).s_hat != unprecoded_scl_decode(syn0, code.spec(), param, 4).s_hat;

    const CodeSpec spec = testing::random_spec(n_exp, rng);
    const double sigma = 0.5 + unit(rng);
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<double> llr(spec.size());
    for (double& l : llr) l = 2.0 * ((rng() & 1U ? -1.0 : 1.0) + noise(rng)) / (sigma * sigma);
    BitVec frozen(spec.frozen_set().size());
    for (std::size_t i = 0; i < frozen.size(); ++i) frozen.set(i, rng() & 1U);
    binary_bad += binary_scl_decode(llr, spec, frozen, 1).u != binary_sc_decode(llr, spec, frozen);
  }
  return {sc_bad == 0 && plain_bad == 0 && binary_bad == 0,
          fmt::format("{} instances each; L=1 vs SC mismatches {}, T=I vs unprecoded {}, binary L=1 vs SC {}", reps,
                      sc_bad, plain_bad, binary_bad)};
}

// Dense restatement of every constraint, independent of validate_*.
bool dense_constraints_hold(const CodeSpec& spec, const Precoder& t) {
  const std::size_t n = spec.size();
  const BitMatrix j = BitMatrix::exchange(n);
  const BitMatrix fjf = project_rows(project_columns(j, spec.frozen_set()), spec.frozen_set());
  if (!fjf.is_zero()) return false;
  const BitMatrix td = t.dense();
  if (!(mat_mul(td, td) == BitMatrix::identity(n))) return false;
  if (!(td.transposed() == mat_mul(mat_mul(j, td), j))) return false;
  for (const Entry& e : t.off_diag()) {
    const Entry m = mirror_entry(n, e);
    if (!t.contains(m.first, m.second)) return false;
    if (!is_base_position(spec, e) && !is_base_position(spec, m)) return false;
  }
  return true;
}

// 3. GA operators never leave the constraint set.
Outcome constraint_suite() {
  GaRng rng(303);
  std::size_t steps = 0, violations = 0;
  for (int n_exp : {4, 6}) {
    const CodeSpec seed = initial_info_set(n_exp, 0.05);
    const ForcedSets forced = ForcedSets::defaults(seed, 0.05);
    SetGenome g = spec_to_genome(seed);
    CodeSpec spec = seed;
    Precoder t(seed.size());
    for (int step = 0; step < 5000; ++step) {
      switch (rng() % 4) {
        case 0:
          mutate_genome(g, forced, 0.1, rng);
          break;
        case 1: {
          SetGenome other = spec_to_genome(seed);
          for (int k = 0; k < 3; ++k) mutate_genome(other, forced, 0.2, rng);
          g = crossover_genomes(g, other, rng);
          repair_genome(g, forced, rng);
          break;
        }
        case 2: {
          const auto groups = precoder_groups(spec);
          if (!groups.empty()) t = mutate_precoder(t, groups, 0.5, rng);
          break;
        }
        default: {
          IndexSet rows;
          for (std::size_t i : spec.info_set()) {
            if (rng() % 4 == 0) rows.push_back(i);
          }
          const auto groups = precoder_groups(spec, rows);
          if (!groups.empty()) t = mutate_precoder(t, groups, 0.5, rng);
          break;
        }
      }
      const CodeSpec next = genome_to_spec(g, n_exp);
      if (!(next == spec)) {
        spec = next;
        t = repair_precoder(t, spec);
      }
      ++steps;
      const bool ok = validate_css(spec).valid() && validate_precoder(t, spec).valid() && forced.respected_by(spec) &&
                      dense_constraints_hold(spec, t);
      violations += !ok;
    }
  }
  return {violations == 0, fmt::format("{} operator steps, {} violations", steps, violations)};
}

// 4. Decoded noise reproduces the measured syndrome.
Outcome coset_consistency() {
  Rng64 rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int sizes[] = {4, 6, 8};
  const std::size_t lists[] = {1, 4, 8};
  std::size_t total = 0, bad = 0;
  for (int s = 0; s < 3; ++s) {
    for (int c = 0; c < 20; ++c) {
      const QuantumCode code = testing::random_code(sizes[s], rng, 4 * (std::size_t{1} << sizes[s]));
      const ChannelParam param(0.01 + 0.19 * unit(rng));
      QuantumListDecoder dec(code, param, lists[c % 3]);
      const std::size_t per = s == 0 ? 200 : 167;
      for (std::size_t t = 0; t < per; ++t) {
        const PauliVec e = sample_depolarizing(param, code.size(), rng);
        const SyndromePair syn = measure_syndrome(e, code);
        const QuantumDecodeResult r = dec.decode(syn);
        ++total;
        bad += !r.ok || !(measure_syndrome(r.noise_estimate, code) == syn);
      }
    }
  }
  return {bad == 0 && total >= 10000, fmt::format("{} decodes, {} inconsistent", total, bad)};
}

// 5. Printed integers.
Outcome printed_numbers(const std::string& data_dir) {
  std::vector<std::string> failed;
  const BitMatrix tg = mat_mul(BitMatrix{{1, 1}, {0, 1}}, BitMatrix{{1, 0}, {1, 1}});
  if (!(tg == BitMatrix{{0, 1}, {1, 1}})) failed.push_back("TG");

  Rng64 rng(505);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Entry> entries;
    while (entries.size() < 36) {
      const std::size_t i = rng() % 63;
      const std::size_t j = i + 1 + rng() % (63 - i);
      if (std::find(entries.begin(), entries.end(), Entry{i, j}) == entries.end()) entries.emplace_back(i, j);
    }
    const Precoder t(64, entries);
    if (nnz(t.dense()) != 100 || encoder_extra_gates(t) != 36) failed.push_back("encoder gates");
  }
  if (total_syndrome_gates(5550) != 11100) failed.push_back("11100");

  const QuantumCode c64 = parse_code_file(read_text_file(data_dir + "/n64_precoded.json")).code();
  const SyndromeGates g64 = syndrome_extraction_gates(c64);
  if (nnz(c64.precoder().dense()) != 100 || encoder_extra_gates(c64.precoder()) != 36 || g64.delta_vs_unprecoded != 26) {
    failed.push_back("bundled N=64 example");
  }
  const QuantumCode c256 = parse_code_file(read_text_file(data_dir + "/n256_precoded.json")).code();
  const SyndromeGates g256 = syndrome_extraction_gates(c256);
  if (g256.stab_nnz != 5550 || g256.total_gates != 11100) failed.push_back("bundled N=256 example");

  std::size_t codes = 0;
  for (int n_exp = 1; n_exp <= 10; ++n_exp) {
    for (int rep = 0; rep < 20; ++rep) {
      const CodeSpec spec = testing::random_spec(n_exp, rng);
      ++codes;
      if (spec.k() != spec.size() / 2 + 1 || derive_logicals(spec).logical.size() != 2) failed.push_back("logical set");
    }
    if (QuantumCode(initial_info_set(n_exp, 0.05), Precoder(std::size_t{1} << n_exp)).logical_set().size() != 2) {
      failed.push_back("logical set");
    }
  }
  std::string detail = fmt::format("TG, 36 encoder gates, 11100 = 2*5550, delta 26, |logical| = 2 over {} codes", codes);
  if (!failed.empty()) detail += "; failed:";
  for (const auto& f : failed) detail += " " + f;
  return {failed.empty(), detail};
}

// 6. List decoding beats greedy decoding.
Outcome list_gain() {
  const QuantumCode code(initial_info_set(6, 0.05), Precoder(64));
  const SimPoint l4 = run_point(code, 0.05, 4, 20000, 606);
  const SimPoint l1 = run_point(code, 0.05, 1, 20000, 606);
  return {l4.ler < l1.ler && l4.ci95_high < l1.ci95_low,
          fmt::format("L=4 {:.4f} [{:.4f}, {:.4f}], L=1 {:.4f} [{:.4f}, {:.4f}]", l4.ler, l4.ci95_low, l4.ci95_high,
                      l1.ler, l1.ci95_low, l1.ci95_high)};
}

// 7. Desk-budget joint optimization.
Outcome ga_improvement() {
  GAConfig cfg;
  cfg.population_size = 8;
  cfg.offspring_count = 16;
  cfg.outer_iters = 10;
  cfg.list_size = 4;
  cfg.p = 0.05;
  cfg.fitness_trials = 2000;
  cfg.seed = 1;
  const CodeSpec seed = initial_info_set(6, 0.05);
  const auto start = std::chrono::steady_clock::now();
  const Candidate best = joint_optimize(cfg, seed);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::uint64_t eval_seed = 707;
  const SimPoint before = run_point(QuantumCode(seed, Precoder(64)), 0.05, 4, 50000, eval_seed);
  const SimPoint after = run_point(best.code, 0.05, 4, 50000, eval_seed);
  const double ratio = after.ler / before.ler;
  return {ratio <= 0.8, fmt::format("seed LER {:.4f}, optimized LER {:.4f}, ratio {:.3f}, |T offdiag| {}, GA {:.0f}s",
                                    before.ler, after.ler, ratio, best.code.precoder().off_diag().size(), secs)};
}

int run_command(const std::string& cmd) {
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string without_seconds(const std::string& csv) {
  std::string out;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string::npos) end = csv.size();
    const std::string line = csv.substr(start, end - start);
    out += line.substr(0, line.rfind(',')) + "\n";
    start = end + 1;
  }
  return out;
}

// 8. CLI output does not depend on the worker count.
Outcome determinism(const std::string& cli, const std::string& data_dir) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / fmt::format("qppc_accept_{}", ::getpid());
  fs::create_directories(dir);
  const std::string base = fmt::format("{} simulate {}/n64_precoded.json --p 0.02,0.05,0.08 --L 4 --trials 3000 --seed 8",
                                       cli, data_dir);
  const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string(), c = (dir / "c.csv").string();
  const int rc = run_command(base + " --threads 1 -o " + a) | run_command(base + " --threads 1 -o " + b) |
                 run_command(base + " --threads 8 -o " + c);
  bool same = false;
  if (rc == 0) {
    const std::string ta = without_seconds(read_text_file(a));
    same = ta == without_seconds(read_text_file(b)) && ta == without_seconds(read_text_file(c));
  }
  fs::remove_all(dir);
  return {rc == 0 && same, fmt::format("threads 1, 1, 8: exit {}, CSVs {}", rc, same ? "identical" : "differ")};
}

Quad random_quad(Rng64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Quad q{{u(rng), u(rng), u(rng), u(rng)}};
  const double s = q.sum();
  for (double& v : q.p) v /= s;
  return q;
}

// 9. Butterfly kernels against direct summation.
Outcome node_correctness() {
  Rng64 rng(909);
  double worst = 0.0;
  for (int rep = 0; rep < 100000; ++rep) {
    const Quad a = random_quad(rng);
    const Quad b = random_quad(rng);
    Quad sum{{0, 0, 0, 0}};
    for (unsigned x1 = 0; x1 < 2; ++x1)
      for (unsigned z1 = 0; z1 < 2; ++z1)
        for (unsigned x2 = 0; x2 < 2; ++x2)
          for (unsigned z2 = 0; z2 < 2; ++z2) sum[x1 + 2 * z1] += a[(x1 ^ x2) + 2 * z1] * b[x2 + 2 * (z1 ^ z2)];
    const double ns = sum.sum();
    const Quad c = quaternary_node_combine(a, b);
    for (unsigned k = 0; k < 4; ++k) worst = std::max(worst, std::abs(c[k] - sum[k] / ns));

    const unsigned d = rng() & 3U;
    const unsigned x1 = d & 1U, z1 = d >> 1;
    Quad part{{0, 0, 0, 0}};
    for (unsigned x2 = 0; x2 < 2; ++x2)
      for (unsigned z2 = 0; z2 < 2; ++z2) part[x2 + 2 * z2] = a[(x1 ^ x2) + 2 * z1] * b[x2 + 2 * (z1 ^ z2)];
    const double np = part.sum();
    const Quad s = quaternary_node_split(a, b, static_cast<Pauli>(d));
    for (unsigned k = 0; k < 4; ++k) worst = std::max(worst, std::abs(s[k] - part[k] / np));
  }
  return {worst <= 1e-12, fmt::format("100000 quad pairs, max abs error {:.3g}", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = QPPC_DATA_DIR;
  const std::string cli = QPPC_CLI;
  const std::vector<std::function<Outcome()>> criteria{
      oracle_equivalence,
      degenerations,
      constraint_suite,
      coset_consistency,
      [&] { return printed_numbers(data_dir); },
      list_gain,
      ga_improvement,
      [&] { return determinism(cli, data_dir); },
      node_correctness,
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);
  }

  bool all = true;
  for (int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      fmt::print(stderr, "unknown criterion {}\n", k);
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("criterion {}: {} ({}; {:.1f}s)\n", k, o.pass ? "PASS" : "FAIL", o.detail, secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
