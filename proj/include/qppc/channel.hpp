#pragma once

#include <cstdint>
#include <random>

#include "qppc/pauli.hpp"

namespace qppc {

// Depolarizing channel: X, Z, Y each with probability p/3, I with 1 - p.
class ChannelParam {
 public:
  explicit ChannelParam(double p);
  double p() const { return p_; }

 private:
  double p_;
};

// SplitMix64 finalizer; used to derive independent per-trial streams.
std::uint64_t mix64(std::uint64_t x);

// Seed of trial `trial` under `master`: master ^ mix64(trial). Any trial can
// be regenerated without touching the others.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) { return master ^ mix64(trial + 1); }

using Rng = std::mt19937_64;

// Uniform double in [0,1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PauliVec sample_depolarizing(const ChannelParam& param, std::size_t n, Rng& rng);
PauliVec sample_depolarizing(const ChannelParam& param, std::size_t n, std::uint64_t seed);

Quad prior_quad(const ChannelParam& param);

}  // namespace qppc
