#pragma once

// Test-side generator of random valid (A, T) pairs, independent of the GA
// operators it is used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "qppc/code.hpp"

namespace qppc::testing {

inline CodeSpec random_spec(int n_exp, std::mt19937_64& rng) {
  const std::size_t n = std::size_t{1} << n_exp;
  const std::size_t pairs = n / 2;
  std::vector<std::size_t> info;
  const std::size_t logical = std::uniform_int_distribution<std::size_t>(0, pairs - 1)(rng);
  for (std::size_t q = 0; q < pairs; ++q) {
    if (q == logical) {
      info.push_back(q);
      info.push_back(n - 1 - q);
    } else {
      info.push_back(rng() & 1U ? q : n - 1 - q);
    }
  }
  return CodeSpec(n_exp, info);
}

// Toggles random mirror-closed base groups, keeping T an involution.
inline Precoder random_precoder(const CodeSpec& spec, std::mt19937_64& rng, std::size_t toggles) {
  const std::size_t n = spec.size();
  std::vector<Entry> base;
  for (std::size_t i : spec.info_set()) {
    for (std::size_t j : spec.frozen_set()) {
      if (i < j) base.emplace_back(i, j);
    }
  }
  Precoder t(n);
  if (base.empty()) return t;
  for (std::size_t k = 0; k < toggles; ++k) {
    const Entry e = base[std::uniform_int_distribution<std::size_t>(0, base.size() - 1)(rng)];
    const Entry m = mirror_entry(n, e);
    std::vector<Entry> group{e};
    if (m != e) group.push_back(m);
    Precoder next = t.toggled(group);
    if (is_involution(next)) t = std::move(next);
  }
  return t;
}

inline QuantumCode random_code(int n_exp, std::mt19937_64& rng, std::size_t toggles) {
  CodeSpec spec = random_spec(n_exp, rng);
  Precoder t = random_precoder(spec, rng, toggles);
  return QuantumCode(std::move(spec), std::move(t));
}

}  // namespace qppc::testing
