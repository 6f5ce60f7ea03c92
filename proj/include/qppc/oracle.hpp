#pragma once

// Brute-force references. Everything here works on dense matrices built from
// first principles and never touches the decoder's message passing.

#include <span>
#include <vector>

#include "qppc/bitmatrix.hpp"
#include "qppc/channel.hpp"
#include "qppc/code.hpp"
#include "qppc/decoder.hpp"
#include "qppc/pauli.hpp"

namespace qppc {

inline constexpr std::size_t kOracleMaxN = 8;
inline constexpr std::size_t kDenseReferenceMaxN = 256;

struct OracleResult {
  std::vector<Pauli> s_best;
  PauliVec noise;
  double pm = 0.0;  // -ln P(noise)
};

// MAP over the 4^K symbol assignments consistent with the syndrome. Ties are
// broken by lexicographic s (I < X < Z < Y). Throws std::invalid_argument for
// N > kOracleMaxN.
OracleResult exhaustive_map_decode(const SyndromePair& syndrome, const QuantumCode& code, const ChannelParam& param);

struct DenseTransforms {
  BitMatrix hx;   // F_X^T T G
  BitMatrix hz;   // F_Z^T T^T G^T
  BitMatrix gt;   // G T
  BitMatrix jgt;  // J G T
};

DenseTransforms dense_reference_transforms(const QuantumCode& code);

// Minimum of sum_k log2(1 + e^{-l_k (-1)^{x_k}}) over every u that matches
// the frozen values, x = u G. N <= 16.
double exhaustive_binary_ml(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals);

}  // namespace qppc
