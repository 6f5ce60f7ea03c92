#include "qppc/ga.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qppc/channel.hpp"
#include "qppc/montecarlo.hpp"

namespace qppc {

// ---------------------------------------------------------------------------
// Config document.

Json ga_config_to_json(const GAConfig& cfg) {
  Json doc = Json::object();
  doc["version"] = 1;
  doc["population_size"] = cfg.population_size;
  doc["offspring_count"] = cfg.offspring_count;
  doc["outer_iters"] = cfg.outer_iters;
  doc["list_size"] = cfg.list_size;
  doc["p"] = cfg.p;
  doc["fitness_trials"] = cfg.fitness_trials;
  doc["forced_frozen"] = cfg.forced_frozen;
  doc["forced_info"] = cfg.forced_info;
  doc["default_forced"] = cfg.default_forced;
  doc["set_swap_rate"] = cfg.set_swap_rate;
  doc["t_flip_rate"] = cfg.t_flip_rate;
  doc["set_generations"] = cfg.set_generations;
  doc["t_generations"] = cfg.t_generations;
  doc["row_generations"] = cfg.row_generations;
  doc["fixed_trial_set"] = cfg.fixed_trial_set;
  doc["seed"] = cfg.seed;
  doc["threads"] = cfg.threads;
  return doc;
}

namespace {

std::size_t get_count(const Json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw CodeFileError(fmt::format("config: field '{}' must be a non-negative integer", key));
  return v.get<std::size_t>();
}

double get_rate(const Json& v, const std::string& key) {
  if (!v.is_number()) throw CodeFileError(fmt::format("config: field '{}' must be a number", key));
  const double x = v.get<double>();
  if (!(x >= 0.0 && x <= 1.0)) throw CodeFileError(fmt::format("config: field '{}' must lie in [0, 1]", key));
  return x;
}

bool get_bool(const Json& v, const std::string& key) {
  if (!v.is_boolean()) throw CodeFileError(fmt::format("config: field '{}' must be true or false", key));
  return v.get<bool>();
}

IndexSet get_indices(const Json& v, const std::string& key) {
  if (!v.is_array()) throw CodeFileError(fmt::format("config: field '{}' must be an array", key));
  IndexSet out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(get_count(v[k], fmt::format("{}[{}]", key, k)));
  return out;
}

}  // namespace

GAConfig ga_config_from_json(const Json& doc) {
  if (!doc.is_object()) throw CodeFileError("config: top level must be an object");
  auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer() || version->get<int>() != 1) {
    throw CodeFileError("config: field 'version' must be 1");
  }
  GAConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "version") continue;
    if (key == "population_size") {
      cfg.population_size = get_count(v, key);
    } else if (key == "offspring_count") {
      cfg.offspring_count = get_count(v, key);
    } else if (key == "outer_iters") {
      cfg.outer_iters = get_count(v, key);
    } else if (key == "list_size") {
      cfg.list_size = get_count(v, key);
    } else if (key == "p") {
      cfg.p = get_rate(v, key);
    } else if (key == "fitness_trials") {
      cfg.fitness_trials = get_count(v, key);
    } else if (key == "forced_frozen") {
      cfg.forced_frozen = get_indices(v, key);
    } else if (key == "forced_info") {
      cfg.forced_info = get_indices(v, key);
    } else if (key == "default_forced") {
      cfg.default_forced = get_bool(v, key);
    } else if (key == "set_swap_rate") {
      cfg.set_swap_rate = get_rate(v, key);
    } else if (key == "t_flip_rate") {
      cfg.t_flip_rate = get_rate(v, key);
    } else if (key == "set_generations") {
      cfg.set_generations = get_count(v, key);
    } else if (key == "t_generations") {
      cfg.t_generations = get_count(v, key);
    } else if (key == "row_generations") {
      cfg.row_generations = get_count(v, key);
    } else if (key == "fixed_trial_set") {
      cfg.fixed_trial_set = get_bool(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw CodeFileError("config: field 'seed' must be a non-negative integer");
      }
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "threads") {
      cfg.threads = get_count(v, key);
    } else {
      throw CodeFileError(fmt::format("config: unknown field '{}'", key));
    }
  }
  if (cfg.population_size < 1) throw CodeFileError("config: field 'population_size' must be >= 1");
  if (cfg.list_size < 1) throw CodeFileError("config: field 'list_size' must be >= 1");
  if (cfg.fitness_trials < 1) throw CodeFileError("config: field 'fitness_trials' must be >= 1");
  return cfg;
}

std::string render_log_line(const GenerationRecord& r) {
  Json j = Json::object();
  j["phase"] = r.phase;
  j["round"] = r.round;
  j["generation"] = r.generation;
  j["best_fitness"] = r.best_fitness;
  j["population"] = r.population;
  j["digest"] = r.digest;
  return j.dump();
}

// ---------------------------------------------------------------------------
// Genome operators.

SetGenome spec_to_genome(const CodeSpec& spec) {
  const std::size_t n = spec.size();
  if (n < 2 || spec.k() != n / 2 + 1 || !validate_css(spec).valid()) {
    throw std::invalid_argument("set genome: spec must be CSS-valid with K = N/2 + 1");
  }
  SetGenome g(n / 2);
  for (std::size_t q = 0; q < n / 2; ++q) {
    const bool left = spec.is_info(q);
    const bool right = spec.is_info(n - 1 - q);
    g[q] = left && right ? PairSymbol::Logical : (left ? PairSymbol::Left : PairSymbol::Right);
  }
  return g;
}

CodeSpec genome_to_spec(const SetGenome& g, int n_exp) {
  const std::size_t n = std::size_t{1} << n_exp;
  if (g.size() != n / 2) throw std::invalid_argument("set genome: length must be N/2");
  IndexSet info;
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (g[q] != PairSymbol::Right) info.push_back(q);
    if (g[q] != PairSymbol::Left) info.push_back(n - 1 - q);
  }
  return CodeSpec(n_exp, std::move(info));
}

namespace {

constexpr std::uint8_t kAllSymbols = 0b111;

std::uint8_t bit(PairSymbol s) { return static_cast<std::uint8_t>(1U << static_cast<unsigned>(s)); }

template <class T>
const T& pick(const std::vector<T>& v, GaRng& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

ForcedSets::ForcedSets(int n_exp, const IndexSet& forced_info, const IndexSet& forced_frozen)
    : info_(forced_info), frozen_(forced_frozen) {
  const std::size_t n = std::size_t{1} << n_exp;
  std::sort(info_.begin(), info_.end());
  info_.erase(std::unique(info_.begin(), info_.end()), info_.end());
  std::sort(frozen_.begin(), frozen_.end());
  frozen_.erase(std::unique(frozen_.begin(), frozen_.end()), frozen_.end());
  for (std::size_t i : info_) {
    if (i >= n) throw std::invalid_argument(fmt::format("forced info index {} out of range", i));
  }
  for (std::size_t i : frozen_) {
    if (i >= n) throw std::invalid_argument(fmt::format("forced frozen index {} out of range", i));
    if (std::binary_search(info_.begin(), info_.end(), i)) {
      throw std::invalid_argument(fmt::format("index {} is forced both info and frozen", i));
    }
  }
  allowed_.assign(n / 2, kAllSymbols);
  auto restrict_by = [&](std::size_t idx, bool info) {
    const std::size_t q = std::min(idx, n - 1 - idx);
    const bool left = idx == q;
    if (info) {
      allowed_[q] &= static_cast<std::uint8_t>(~bit(left ? PairSymbol::Right : PairSymbol::Left));
    } else {
      allowed_[q] &= left ? bit(PairSymbol::Right) : bit(PairSymbol::Left);
    }
  };
  for (std::size_t i : info_) restrict_by(i, true);
  for (std::size_t i : frozen_) restrict_by(i, false);

  std::size_t must_logical = 0;
  bool any_logical = false;
  for (std::size_t q = 0; q < allowed_.size(); ++q) {
    if (allowed_[q] == 0) throw std::invalid_argument(fmt::format("forced sets freeze both members of pair ({},{})", q, n - 1 - q));
    if (allowed_[q] == bit(PairSymbol::Logical)) ++must_logical;
    if (allowed_[q] & bit(PairSymbol::Logical)) any_logical = true;
  }
  if (must_logical > 1) throw std::invalid_argument("forced sets require more than one logical pair");
  if (!any_logical) throw std::invalid_argument("forced sets leave no pair that can be logical");
}

ForcedSets ForcedSets::defaults(const CodeSpec& seed, double p) {
  const std::size_t n = seed.size();
  const LogicalSplit split = derive_logicals(seed);
  IndexSet cand = split.stabilizer;
  const std::size_t count = std::min(n / 8, cand.size());
  if (count > 0) {
    const std::vector<double> z = log_bhattacharyya(seed.n_exp(), 2.0 * p / 3.0);
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return z[a] < z[b]; });
  }
  IndexSet info(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(count));
  IndexSet frozen;
  for (std::size_t i : info) frozen.push_back(n - 1 - i);
  return ForcedSets(seed.n_exp(), info, frozen);
}

ForcedSets ForcedSets::from_config(const GAConfig& cfg, const CodeSpec& seed) {
  if (cfg.default_forced && cfg.forced_info.empty() && cfg.forced_frozen.empty()) return defaults(seed, cfg.p);
  return ForcedSets(seed.n_exp(), cfg.forced_info, cfg.forced_frozen);
}

bool ForcedSets::respected_by(const CodeSpec& spec) const {
  return std::all_of(info_.begin(), info_.end(), [&](std::size_t i) { return spec.is_info(i); }) &&
         std::all_of(frozen_.begin(), frozen_.end(), [&](std::size_t i) { return spec.is_frozen(i); });
}

void repair_genome(SetGenome& g, const ForcedSets& forced, GaRng& rng) {
  if (g.size() != forced.pairs()) throw std::invalid_argument("repair_genome: length mismatch");
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (!forced.allows(q, g[q])) {
      std::vector<PairSymbol> opts;
      for (unsigned s = 0; s < 3; ++s) {
        if (forced.allows(q, static_cast<PairSymbol>(s))) opts.push_back(static_cast<PairSymbol>(s));
      }
      g[q] = pick(opts, rng);
    }
  }
  std::vector<std::size_t> logical;
  std::size_t must = g.size();
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (g[q] == PairSymbol::Logical) logical.push_back(q);
    if (forced.allows(q, PairSymbol::Logical) && !forced.allows(q, PairSymbol::Left) &&
        !forced.allows(q, PairSymbol::Right)) {
      must = q;
    }
  }
  if (logical.empty()) {
    std::vector<std::size_t> opts;
    for (std::size_t q = 0; q < g.size(); ++q) {
      if (forced.allows(q, PairSymbol::Logical)) opts.push_back(q);
    }
    g[pick(opts, rng)] = PairSymbol::Logical;
    return;
  }
  if (logical.size() == 1) return;
  const std::size_t keep = must < g.size() ? must : pick(logical, rng);
  for (std::size_t q : logical) {
    if (q == keep) continue;
    std::vector<PairSymbol> opts;
    if (forced.allows(q, PairSymbol::Left)) opts.push_back(PairSymbol::Left);
    if (forced.allows(q, PairSymbol::Right)) opts.push_back(PairSymbol::Right);
    g[q] = pick(opts, rng);
  }
}

void mutate_genome(SetGenome& g, const ForcedSets& forced, double rate, GaRng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto resample = [&](std::size_t q) {
    std::vector<PairSymbol> opts;
    for (unsigned s = 0; s < 3; ++s) {
      const auto sym = static_cast<PairSymbol>(s);
      if (sym != g[q] && forced.allows(q, sym)) opts.push_back(sym);
    }
    if (opts.empty()) return false;
    g[q] = pick(opts, rng);
    return true;
  };
  bool changed = false;
  for (std::size_t q = 0; q < g.size(); ++q) {
    if (u(rng) < rate) changed |= resample(q);
  }
  if (!changed) {
    std::vector<std::size_t> movable;
    for (std::size_t q = 0; q < g.size(); ++q) {
      for (unsigned s = 0; s < 3; ++s) {
        if (static_cast<PairSymbol>(s) != g[q] && forced.allows(q, static_cast<PairSymbol>(s))) {
          movable.push_back(q);
          break;
        }
      }
    }
    if (!movable.empty()) resample(pick(movable, rng));
  }
  repair_genome(g, forced, rng);
}

SetGenome crossover_genomes(const SetGenome& a, const SetGenome& b, GaRng& rng) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover: length mismatch");
  SetGenome child(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) child[q] = (rng() & 1U) ? a[q] : b[q];
  return child;
}

namespace {

PositionGroup group_of(std::size_t n, Entry e) {
  const Entry m = mirror_entry(n, e);
  if (m == e) return {e};
  return e < m ? PositionGroup{e, m} : PositionGroup{m, e};
}

}  // namespace

std::vector<PositionGroup> precoder_groups(const CodeSpec& spec, const IndexSet& rows) {
  const std::size_t n = spec.size();
  std::set<PositionGroup> groups;
  for (std::size_t i : rows) {
    if (i >= n || !spec.is_info(i)) continue;
    for (std::size_t j : spec.frozen_set()) {
      if (i < j) groups.insert(group_of(n, {i, j}));
    }
  }
  return {groups.begin(), groups.end()};
}

std::vector<PositionGroup> precoder_groups(const CodeSpec& spec) { return precoder_groups(spec, spec.info_set()); }

Precoder mutate_precoder(const Precoder& t, const std::vector<PositionGroup>& groups, double extra_rate, GaRng& rng) {
  if (groups.empty()) return t;
  constexpr int kAttempts = 64;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Precoder cur = t;
  do {
    for (int a = 0; a < kAttempts; ++a) {
      Precoder next = cur.toggled(pick(groups, rng));
      if (is_involution(next)) {
        cur = std::move(next);
        break;
      }
    }
  } while (u(rng) < extra_rate);
  return cur;
}

Precoder repair_precoder(const Precoder& t, const CodeSpec& spec) {
  const std::size_t n = spec.size();
  if (t.size() != n) throw std::invalid_argument("repair_precoder: dimension mismatch");
  std::vector<Entry> kept;
  for (const Entry& e : t.off_diag()) {
    const Entry m = mirror_entry(n, e);
    if (t.contains(m.first, m.second) && (is_base_position(spec, e) || is_base_position(spec, m))) kept.push_back(e);
  }
  Precoder cand(n, kept);
  if (is_involution(cand)) return cand;
  std::set<PositionGroup> groups;
  for (const Entry& e : kept) groups.insert(group_of(n, e));
  Precoder cur(n);
  for (const PositionGroup& g : groups) {
    Precoder next = cur.toggled(g);
    if (is_involution(next)) cur = std::move(next);
  }
  return cur;
}

double evaluate_fitness(const QuantumCode& code, const GAConfig& cfg, std::uint64_t seed) {
  const std::size_t fails = count_failures(code, cfg.p, cfg.list_size, seed, 0, cfg.fitness_trials, cfg.threads);
  return static_cast<double>(fails) / static_cast<double>(cfg.fitness_trials);
}

// ---------------------------------------------------------------------------
// Search driver shared by the phases so one run draws from one RNG stream.

namespace {

struct Member {
  CodeSpec spec;
  Precoder t;
  double fitness = 1.0;

  bool same(const Member& o) const { return spec == o.spec && t == o.t; }
};

std::string digest(const std::vector<Member>& pop) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  for (const Member& m : pop) {
    for (std::size_t i : m.spec.info_set()) mix(i);
    mix(~0ULL);
    for (const auto& [i, j] : m.t.off_diag()) mix((static_cast<std::uint64_t>(i) << 32) | j);
    mix(~1ULL);
  }
  return fmt::format("{:016x}", h);
}

class Search {
 public:
  Search(const GAConfig& cfg, ForcedSets forced, GenerationLog* log)
      : cfg_(cfg), forced_(std::move(forced)), log_(log), rng_(mix64(cfg.seed ^ 0x5eedULL)) {
    if (cfg.population_size < 1) throw std::invalid_argument("GA: population size must be >= 1");
    if (cfg.fitness_trials < 1) throw std::invalid_argument("GA: fitness trials must be >= 1");
    if (cfg.list_size < 1) throw std::invalid_argument("GA: list size must be >= 1");
  }

  std::vector<Member> set_phase(const CodeSpec& seed, const Precoder& t) {
    SetGenome g0 = spec_to_genome(seed);
    if (!forced_.respected_by(seed)) repair_genome(g0, forced_, rng_);
    const CodeSpec spec0 = genome_to_spec(g0, seed.n_exp());
    std::vector<Member> pop{Member{spec0, repair_precoder(t, spec0)}};
    if (cfg_.offspring_count == 0) return pop;
    for (std::size_t gen = 0; gen < cfg_.set_generations; ++gen) {
      std::vector<Member> pool = pop;
      for (std::size_t c = 0; c < cfg_.offspring_count; ++c) {
        const SetGenome a = spec_to_genome(pick(pop, rng_).spec);
        const SetGenome b = spec_to_genome(pick(pop, rng_).spec);
        SetGenome child = crossover_genomes(a, b, rng_);
        repair_genome(child, forced_, rng_);
        mutate_genome(child, forced_, cfg_.set_swap_rate, rng_);
        CodeSpec spec = genome_to_spec(child, seed.n_exp());
        Precoder tc = repair_precoder(t, spec);
        pool.push_back(Member{std::move(spec), std::move(tc)});
      }
      pop = rank(std::move(pool), "set", gen);
    }
    return pop;
  }

  Member t_phase(const CodeSpec& spec, const Precoder& t0, const std::vector<PositionGroup>& groups,
                 std::size_t generations, const char* phase) {
    std::vector<Member> pop{Member{spec, t0}};
    if (cfg_.offspring_count == 0 || groups.empty()) return pop.front();
    for (std::size_t gen = 0; gen < generations; ++gen) {
      std::vector<Member> pool = pop;
      for (std::size_t c = 0; c < cfg_.offspring_count; ++c) {
        pool.push_back(Member{spec, mutate_precoder(pick(pop, rng_).t, groups, cfg_.t_flip_rate, rng_)});
      }
      pop = rank(std::move(pool), phase, gen);
    }
    return pop.front();
  }

  Member row_phase(const CodeSpec& spec_elite, const Precoder& t_elite, const CodeSpec& spec_new) {
    const Precoder repaired = repair_precoder(t_elite, spec_new);
    IndexSet focus;
    std::set_difference(spec_new.info_set().begin(), spec_new.info_set().end(), spec_elite.info_set().begin(),
                        spec_elite.info_set().end(), std::back_inserter(focus));
    if (focus.empty()) return Member{spec_new, repaired};
    return t_phase(spec_new, repaired, precoder_groups(spec_new, focus), cfg_.row_generations, "row");
  }

  Candidate joint(const CodeSpec& seed) {
    const std::size_t n = seed.size();
    // Phase 1: information sets under T = I.
    const std::vector<Member> sets = set_phase(seed, Precoder(n));
    // Phase 2: a precoder per set.
    std::vector<Member> pool;
    for (const Member& m : sets) pool.push_back(t_phase(m.spec, m.t, precoder_groups(m.spec), cfg_.t_generations, "t"));
    pool = rank(std::move(pool), "outer", 0);
    // Phase 3: refine elites.
    for (std::size_t o = 1; o <= cfg_.outer_iters; ++o) {
      const std::size_t top = std::min(pool.size(), (cfg_.population_size + 3) / 4);
      const Member elite = pool[std::uniform_int_distribution<std::size_t>(0, top - 1)(rng_)];
      if (rng_() & 1U) {
        pool.push_back(t_phase(elite.spec, elite.t, precoder_groups(elite.spec), cfg_.t_generations, "t"));
      } else {
        for (const Member& m : set_phase(elite.spec, elite.t)) {
          pool.push_back(Member{m.spec, repair_precoder(elite.t, m.spec)});
          pool.push_back(row_phase(elite.spec, elite.t, m.spec));
        }
      }
      pool = rank(std::move(pool), "outer", o);
    }
    const Member& best = pool.front();
    return Candidate{QuantumCode(best.spec, best.t), best.fitness, cfg_.fitness_trials};
  }

 private:
  std::uint64_t round_seed() {
    const std::uint64_t r = cfg_.fixed_trial_set ? 0 : round_++;
    return mix64(cfg_.seed ^ mix64(r + 0x7a11ULL));
  }

  // Deduplicate, score on one shared trial set, keep the best P.
  std::vector<Member> rank(std::vector<Member> pool, const char* phase, std::size_t generation) {
    std::vector<Member> uniq;
    for (Member& m : pool) {
      if (std::none_of(uniq.begin(), uniq.end(), [&](const Member& u) { return u.same(m); })) uniq.push_back(std::move(m));
    }
    const std::uint64_t seed = round_seed();
    for (Member& m : uniq) m.fitness = evaluate_fitness(QuantumCode(m.spec, m.t), cfg_, seed);
    std::stable_sort(uniq.begin(), uniq.end(), [](const Member& a, const Member& b) { return a.fitness < b.fitness; });
    if (uniq.size() > cfg_.population_size) uniq.erase(uniq.begin() + static_cast<std::ptrdiff_t>(cfg_.population_size), uniq.end());
    if (log_) {
      log_->push_back(GenerationRecord{phase, log_round_++, generation, uniq.front().fitness, uniq.size(), digest(uniq)});
    }
    return uniq;
  }

  GAConfig cfg_;
  ForcedSets forced_;
  GenerationLog* log_;
  GaRng rng_;
  std::uint64_t round_ = 0;
  std::size_t log_round_ = 0;
};

void require_seed(const CodeSpec& seed) {
  if (!validate_css(seed).valid()) throw std::invalid_argument("GA: seed spec is not CSS-valid");
  if (seed.size() < 2 || seed.k() != seed.size() / 2 + 1) throw std::invalid_argument("GA: seed must have K = N/2 + 1");
}

}  // namespace

std::vector<CodeSpec> set_ga(const CodeSpec& seed_spec, const Precoder& t, const GAConfig& cfg, GenerationLog* log) {
  require_seed(seed_spec);
  if (t.size() != seed_spec.size()) throw std::invalid_argument("set_ga: precoder size mismatch");
  Search s(cfg, ForcedSets::from_config(cfg, seed_spec), log);
  std::vector<CodeSpec> out;
  for (const Member& m : s.set_phase(seed_spec, t)) out.push_back(m.spec);
  return out;
}

Precoder t_ga(const CodeSpec& spec, const Precoder& t0, const GAConfig& cfg, GenerationLog* log) {
  require_seed(spec);
  if (t0.size() != spec.size() || !validate_precoder(t0, spec).valid()) {
    throw std::invalid_argument("t_ga: initial precoder is not valid for spec");
  }
  Search s(cfg, ForcedSets::from_config(cfg, spec), log);
  return s.t_phase(spec, t0, precoder_groups(spec), cfg.t_generations, "t").t;
}

Precoder row_ga(const CodeSpec& spec_elite, const Precoder& t_elite, const CodeSpec& spec_new, const GAConfig& cfg,
                GenerationLog* log) {
  require_seed(spec_elite);
  require_seed(spec_new);
  if (spec_elite.size() != spec_new.size()) throw std::invalid_argument("row_ga: blocklength mismatch");
  Search s(cfg, ForcedSets::from_config(cfg, spec_elite), log);
  return s.row_phase(spec_elite, t_elite, spec_new).t;
}

Candidate joint_optimize(const GAConfig& cfg, const CodeSpec& seed_spec, GenerationLog* log) {
  require_seed(seed_spec);
  Search s(cfg, ForcedSets::from_config(cfg, seed_spec), log);
  return s.joint(seed_spec);
}

}  // namespace qppc
