#include "qppc/channel.hpp"

#include <stdexcept>

namespace qppc {

PauliVec::PauliVec(BitVec x_part, BitVec z_part) : x(std::move(x_part)), z(std::move(z_part)) {
  if (x.size() != z.size()) throw std::invalid_argument("PauliVec: x/z length mismatch");
}

std::size_t PauliVec::weight() const {
  BitVec either = x;
  auto w = either.words();
  auto zw = z.words();
  for (std::size_t k = 0; k < w.size(); ++k) w[k] |= zw[k];
  return either.weight();
}

ChannelParam::ChannelParam(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ChannelParam: p must lie in [0,1]");
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

PauliVec sample_depolarizing(const ChannelParam& param, std::size_t n, Rng& rng) {
  const double p = param.p();
  PauliVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    if (u < p) {
      // Conditioned on u < p, u/p is uniform on [0,1): split it in thirds.
      const unsigned which = static_cast<unsigned>(3.0 * u / p);
      out.set(i, static_cast<Pauli>(1U + (which > 2U ? 2U : which)));
    }
  }
  return out;
}

PauliVec sample_depolarizing(const ChannelParam& param, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_depolarizing(param, n, rng);
}

Quad prior_quad(const ChannelParam& param) {
  const double p = param.p();
  return Quad{{1.0 - p, p / 3.0, p / 3.0, p / 3.0}};
}

}  // namespace qppc
