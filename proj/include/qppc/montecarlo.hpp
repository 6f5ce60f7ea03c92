#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qppc/channel.hpp"
#include "qppc/code.hpp"

namespace qppc {

struct SimPoint {
  double p = 0.0;
  std::size_t list_size = 1;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double ler = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  double seconds = 0.0;

  double ci95_half_width() const { return 0.5 * (ci95_high - ci95_low); }
  // Equality ignoring the wall-clock column.
  bool same_result(const SimPoint& o) const;
};

struct WilsonInterval {
  double low;
  double high;
};

inline constexpr double kZ95 = 1.959963984540054;

WilsonInterval wilson_interval(std::size_t failures, std::size_t trials, double z = kZ95);

// Noise of trial t under master seed; identical wherever it is evaluated.
PauliVec trial_noise(const ChannelParam& param, std::size_t n, std::uint64_t seed, std::uint64_t trial);

// 0 means std::thread::hardware_concurrency().
std::size_t resolve_threads(std::size_t requested);

// Trials [first, first + count) with one decoder per worker. Results do not
// depend on the worker count.
std::size_t count_failures(const QuantumCode& code, double p, std::size_t list_size, std::uint64_t seed,
                           std::uint64_t first, std::size_t count, std::size_t threads);

SimPoint run_point(const QuantumCode& code, double p, std::size_t list_size, std::size_t trials, std::uint64_t seed,
                   std::size_t threads = 0);

struct SweepOptions {
  std::size_t trials_per_point = 1000;
  // Stop a point once this many failures are seen, checked at batch
  // boundaries so the cut does not depend on scheduling. 0 disables.
  std::size_t min_failures = 100;
  std::size_t batch = 1000;
  std::size_t threads = 0;
};

// Every point uses the same master seed (common random numbers across p).
std::vector<SimPoint> run_sweep(const QuantumCode& code, const std::vector<double>& p_list, std::size_t list_size,
                                std::uint64_t seed, const SweepOptions& opts);

inline constexpr const char* kCsvHeader = "p,L,N,trials,failures,ler,ci95_low,ci95_high,seconds";

std::string render_csv(const std::vector<SimPoint>& points);
// Throws std::runtime_error on malformed input.
std::vector<SimPoint> parse_csv(const std::string& text);

}  // namespace qppc
