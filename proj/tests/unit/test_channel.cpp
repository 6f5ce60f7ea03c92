#include <array>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qppc/channel.hpp"

using namespace qppc;

TEST_CASE("sample_depolarizing edge probabilities") {
  const PauliVec none = sample_depolarizing(ChannelParam(0.0), 1000, std::uint64_t{1});
  CHECK(none.weight() == 0);
  const PauliVec all = sample_depolarizing(ChannelParam(1.0), 1000, std::uint64_t{2});
  CHECK(all.weight() == 1000);
  CHECK_THROWS_AS(ChannelParam(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(ChannelParam(1.5), std::invalid_argument);
}

TEST_CASE("sample_depolarizing statistics at p = 0.3") {
  const std::size_t n = 100000;
  const double p = 0.3;
  const PauliVec e = sample_depolarizing(ChannelParam(p), n, std::uint64_t{12345});
  std::array<double, 4> counts{};
  for (std::size_t i = 0; i < n; ++i) counts[code(e.at(i))] += 1;
  const double hits = counts[1] + counts[2] + counts[3];
  const double sigma = std::sqrt(n * p * (1 - p));
  CHECK(std::abs(hits - n * p) < 3 * sigma);
  double chi2 = 0;
  for (int c = 1; c <= 3; ++c) chi2 += (counts[c] - hits / 3) * (counts[c] - hits / 3) / (hits / 3);
  // Chi-square, 2 degrees of freedom, alpha = 0.01.
  CHECK(chi2 < 9.210);
}

TEST_CASE("same seed reproduces the same noise") {
  const ChannelParam param(0.2);
  CHECK(sample_depolarizing(param, 500, std::uint64_t{99}) == sample_depolarizing(param, 500, std::uint64_t{99}));
  CHECK_FALSE(sample_depolarizing(param, 500, std::uint64_t{99}) == sample_depolarizing(param, 500, std::uint64_t{100}));
  CHECK(trial_seed(5, 3) == trial_seed(5, 3));
  CHECK(trial_seed(5, 3) != trial_seed(5, 4));
}

TEST_CASE("prior_quad") {
  const Quad q0 = prior_quad(ChannelParam(0.0));
  CHECK(q0.p == std::array<double, 4>{1, 0, 0, 0});
  const Quad qu = prior_quad(ChannelParam(0.75));
  for (double v : qu.p) CHECK(v == doctest::Approx(0.25));
  const Quad q = prior_quad(ChannelParam(0.1));
  CHECK(q[Pauli::I] == doctest::Approx(0.9));
  CHECK(q[Pauli::Y] == doctest::Approx(0.1 / 3));
  for (double p : {0.0, 0.01, 0.3, 0.75, 1.0}) CHECK(std::abs(prior_quad(ChannelParam(p)).sum() - 1.0) < 1e-12);
}

TEST_CASE("Pauli encoding") {
  CHECK(make_pauli(0, 0) == Pauli::I);
  CHECK(make_pauli(1, 0) == Pauli::X);
  CHECK(make_pauli(0, 1) == Pauli::Z);
  CHECK(make_pauli(1, 1) == Pauli::Y);
  PauliVec v(3);
  v.set(1, Pauli::Y);
  CHECK(v.x.get(1));
  CHECK(v.z.get(1));
  CHECK(v.weight() == 1);
}
