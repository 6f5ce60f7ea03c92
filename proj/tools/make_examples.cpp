// Writes the example code files under data/. The precoders are found by a
// seeded local search over mirror-closed toggle groups that hits a target
// number of off-diagonal entries and a target stabilizer weight.

#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>

#include "qppc/code_io.hpp"
#include "qppc/ga.hpp"
#include "qppc/gates.hpp"

using namespace qppc;

namespace {

struct Target {
  std::optional<std::size_t> offdiag;
  std::size_t stab_nnz;
};

std::size_t score(const Precoder& t, const CodeSpec& spec, const Target& target) {
  const QuantumCode code(spec, t);
  const std::size_t w = syndrome_extraction_gates(code).stab_nnz;
  const std::size_t k = t.off_diag().size();
  const auto dist = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
  return (target.offdiag ? 64 * dist(k, *target.offdiag) : 0) + dist(w, target.stab_nnz);
}

Precoder search(const CodeSpec& spec, const Target& target, std::uint64_t seed) {
  const auto groups = precoder_groups(spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Precoder t(spec.size());
  std::size_t cur = score(t, spec, target);
  const std::size_t steps = 100000;
  for (std::size_t step = 0; step < steps && cur != 0; ++step) {
    Precoder next = t.toggled(groups[pick(rng)]);
    if (!is_involution(next)) continue;
    const std::size_t s = score(next, spec, target);
    const double temp = 16.0 * (1.0 - static_cast<double>(step) / steps) + 0.5;
    if (s <= cur || unit(rng) < std::exp(-static_cast<double>(s - cur) / temp)) {
      t = std::move(next);
      cur = s;
    }
  }
  if (cur != 0) throw std::runtime_error("example search did not reach its target");
  return t;
}

void emit(const std::string& dir, const std::string& name, const QuantumCode& code, Json meta) {
  const SyndromeGates g = syndrome_extraction_gates(code);
  meta["encoder_extra_gates"] = encoder_extra_gates(code.precoder());
  meta["stab_nnz"] = g.stab_nnz;
  meta["delta_vs_unprecoded"] = g.delta_vs_unprecoded;
  write_text_file(dir + "/" + name, render_code_file(CodeFile::from_code(code, std::move(meta))));
  fmt::print("{}: N={} offdiag={} stab_nnz={} delta={}\n", name, code.size(), code.precoder().off_diag().size(),
             g.stab_nnz, g.delta_vs_unprecoded);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  try {
    const CodeSpec s64 = initial_info_set(6, 0.05);
    emit(dir, "n64_identity.json", QuantumCode(s64, Precoder(64)), Json{{"construction", "initial_info_set(6, 0.05)"}});

    const std::size_t plain64 = syndrome_extraction_gates(QuantumCode(s64, Precoder(64))).stab_nnz;
    const Precoder t64 = search(s64, {36, plain64 + 26}, 64);
    emit(dir, "n64_precoded.json", QuantumCode(s64, t64),
         Json{{"construction", "initial_info_set(6, 0.05) with 36 off-diagonal entries and stabilizer weight +26"}});

    const CodeSpec s256 = initial_info_set(8, 0.05);
    const Precoder t256 = search(s256, {std::nullopt, 5550}, 256);
    emit(dir, "n256_precoded.json", QuantumCode(s256, t256),
         Json{{"construction", "initial_info_set(8, 0.05) with stabilizer weight 5550"}});
  } catch (const std::exception& e) {
    fmt::print(stderr, "make_examples: {}\n", e.what());
    return 1;
  }
  return 0;
}
