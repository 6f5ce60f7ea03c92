#pragma once

// Joint genetic search over information sets and precoders.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qppc/code.hpp"
#include "qppc/code_io.hpp"

namespace qppc {

struct GAConfig {
  std::size_t population_size = 8;  // P
  std::size_t offspring_count = 16;  // C
  std::size_t outer_iters = 10;  // O
  std::size_t list_size = 4;
  double p = 0.05;
  std::size_t fitness_trials = 2000;
  IndexSet forced_frozen;
  IndexSet forced_info;
  // When both forced lists are empty, force the N/8 most reliable
  // non-logical information indices of the seed (and freeze their mirrors).
  bool default_forced = true;
  double set_swap_rate = 0.1;  // per-pair resampling probability
  double t_flip_rate = 0.5;  // probability of each further group toggle
  std::size_t set_generations = 4;
  std::size_t t_generations = 4;
  std::size_t row_generations = 2;
  // Score every round on the same trials instead of fresh ones.
  bool fixed_trial_set = false;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
};

Json ga_config_to_json(const GAConfig& cfg);
// Unknown or ill-typed fields throw CodeFileError naming the field.
GAConfig ga_config_from_json(const Json& doc);

struct Candidate {
  QuantumCode code;
  double fitness = 1.0;
  std::size_t eval_trials = 0;
};

// One structured record per ranking round.
struct GenerationRecord {
  std::string phase;  // "set", "t", "row", "outer"
  std::size_t round = 0;
  std::size_t generation = 0;
  double best_fitness = 1.0;
  std::size_t population = 0;
  std::string digest;  // hash of the ranked population
};

using GenerationLog = std::vector<GenerationRecord>;
std::string render_log_line(const GenerationRecord& r);

// ---------------------------------------------------------------------------
// Operators. Information sets with K = N/2 + 1 are encoded as one symbol per
// index pair (q, N-1-q): exactly one pair is LOGICAL (both information), the
// rest hold one information index.

enum class PairSymbol : std::uint8_t { Logical = 0, Left = 1, Right = 2 };

using SetGenome = std::vector<PairSymbol>;

SetGenome spec_to_genome(const CodeSpec& spec);
CodeSpec genome_to_spec(const SetGenome& g, int n_exp);

// Per-pair admissible symbols implied by the forced sets. Throws
// std::invalid_argument if the forced sets admit no valid information set.
class ForcedSets {
 public:
  ForcedSets(int n_exp, const IndexSet& forced_info, const IndexSet& forced_frozen);
  // Default forcing relative to a seed (see GAConfig::default_forced).
  static ForcedSets defaults(const CodeSpec& seed, double p);
  static ForcedSets from_config(const GAConfig& cfg, const CodeSpec& seed);

  bool allows(std::size_t pair, PairSymbol s) const { return (allowed_[pair] >> static_cast<unsigned>(s)) & 1U; }
  std::size_t pairs() const { return allowed_.size(); }
  const IndexSet& forced_info() const { return info_; }
  const IndexSet& forced_frozen() const { return frozen_; }
  bool respected_by(const CodeSpec& spec) const;

 private:
  IndexSet info_;
  IndexSet frozen_;
  std::vector<std::uint8_t> allowed_;
};

using GaRng = std::mt19937_64;

// Restore admissibility and exactly one LOGICAL pair.
void repair_genome(SetGenome& g, const ForcedSets& forced, GaRng& rng);
void mutate_genome(SetGenome& g, const ForcedSets& forced, double rate, GaRng& rng);
SetGenome crossover_genomes(const SetGenome& a, const SetGenome& b, GaRng& rng);

// Mirror-closed groups {e, mirror(e)} over the base positions of spec.
using PositionGroup = std::vector<Entry>;
std::vector<PositionGroup> precoder_groups(const CodeSpec& spec);
// Groups whose base row lies in rows (and their mirrors).
std::vector<PositionGroup> precoder_groups(const CodeSpec& spec, const IndexSet& rows);

// Toggle one or more groups; toggles that would break the involution are
// rejected and resampled. The result is valid for spec whenever t is.
Precoder mutate_precoder(const Precoder& t, const std::vector<PositionGroup>& groups, double extra_rate, GaRng& rng);

// Drop entries that are invalid for spec (sparsity, mirror closure), then
// drop further groups until T is an involution.
Precoder repair_precoder(const Precoder& t, const CodeSpec& spec);

// ---------------------------------------------------------------------------
// Algorithm phases.

std::vector<CodeSpec> set_ga(const CodeSpec& seed_spec, const Precoder& t, const GAConfig& cfg,
                             GenerationLog* log = nullptr);
Precoder t_ga(const CodeSpec& spec, const Precoder& t0, const GAConfig& cfg, GenerationLog* log = nullptr);
Precoder row_ga(const CodeSpec& spec_elite, const Precoder& t_elite, const CodeSpec& spec_new, const GAConfig& cfg,
                GenerationLog* log = nullptr);
Candidate joint_optimize(const GAConfig& cfg, const CodeSpec& seed_spec, GenerationLog* log = nullptr);

// Monte Carlo fitness on trials [0, trials) of seed.
double evaluate_fitness(const QuantumCode& code, const GAConfig& cfg, std::uint64_t seed);

}  // namespace qppc
