#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "qppc/bitvec.hpp"
#include "qppc/channel.hpp"
#include "qppc/code.hpp"
#include "qppc/pauli.hpp"

namespace qppc {

// ---------------------------------------------------------------------------
// Classical binary decoding (channel LLRs in natural log, positive favours 0).

// Check-node update 2 atanh(tanh(a/2) tanh(b/2)), evaluated stably.
double llr_check(double a, double b);
// Variable-node update given the partial sum of the upper branch.
// Contradictory infinite inputs give 0.
inline double llr_variable(double a, double b, unsigned upper) {
  const double r = upper ? b - a : b + a;
  return r == r ? r : 0.0;
}
// -log2 P(u | lambda) = log2(1 + e^{-lambda (-1)^u}).
double binary_branch_metric(double llr, unsigned u);

// Frozen positions take frozen_vals (listed over spec.frozen_set() in order).
// Information bits take the symbol of smaller branch metric (0 on ties), i.e.
// 1 iff lambda < 0 up to rounding.
BitVec binary_sc_decode(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals);

struct BinaryListResult {
  BitVec u;
  double pm = 0.0;  // bits
};

BinaryListResult binary_scl_decode(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals,
                                   std::size_t list_size);

// ---------------------------------------------------------------------------
// Quaternary message kernels. Upper/lower physical symbols of one butterfly
// are (x1^x2, z1) and (x2, z1^z2) for branch symbols (x1,z1), (x2,z2): X
// parts combine through G2, Z parts through G2^T.

class DegenerateMessage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Quad quaternary_node_combine(const Quad& a, const Quad& b);
// Throws DegenerateMessage if no symbol is consistent with the inputs.
Quad quaternary_node_split(const Quad& a, const Quad& b, Pauli decided);

// ---------------------------------------------------------------------------
// Syndromes.

// Syndrome bits listed over the frozen set F (ascending):
//   sx = (n_X G T)|_F,  sz = (n_Z J G T)|_F.
struct SyndromePair {
  BitVec sx;
  BitVec sz;
  bool operator==(const SyndromePair& other) const = default;
};

// Full-length s = (n_X G T, n_Z J G T) as per-index Pauli symbols.
std::vector<Pauli> polarized_symbols(const PauliVec& noise, const Precoder& t, int n_exp);
std::vector<Pauli> polarized_symbols(const PauliVec& noise, const QuantumCode& code);

SyndromePair measure_syndrome(const PauliVec& noise, const QuantumCode& code);

// Inverse of polarized_symbols: n_X = (s^X T) G, n_Z = ((s^Z T) G) J.
PauliVec noise_from_symbols(std::span<const Pauli> s, const Precoder& t, int n_exp);

// ---------------------------------------------------------------------------
// Joint quaternary decoding.
//
// The decoder walks the CNOT-conjugated frame w with w_X = n_X G and
// w_Z = n_Z G^T, where the per-qubit depolarizing prior factorizes and the
// butterfly kernels above are exact. In this frame the syndrome becomes a set
// of linear constraints on w: the X side is s^X = w_X T (causal, pivot j for
// every frozen j), the Z side is (s^Z J) = w_Z T^T, which is reduced to
// echelon form so every constraint fixes the last index it touches. Each
// index therefore branches over 1, 2 or 4 Pauli symbols.

struct FreezeRule {
  bool frozen = false;
  std::vector<std::uint32_t> deps;     // earlier w indices whose bits are XORed in
  std::vector<std::uint32_t> sources;  // syndrome positions (into sx or sz) XORed in
};

class DecodingPlan {
 public:
  // Constraints induced by the code's precoder.
  static DecodingPlan precoded(const QuantumCode& code);
  // Constraints of the plain quantum polar code on the same information set,
  // ignoring any precoder.
  static DecodingPlan unprecoded(const CodeSpec& spec);

  int n_exp() const { return n_exp_; }
  std::size_t size() const { return x_.size(); }
  std::size_t frozen_count() const { return frozen_count_; }
  const FreezeRule& x_rule(std::size_t i) const { return x_[i]; }
  const FreezeRule& z_rule(std::size_t i) const { return z_[i]; }

  // Syndrome contribution of each rule: bit i of the returned vectors is the
  // XOR of the rule's sources.
  void syndrome_constants(const SyndromePair& syndrome, std::vector<std::uint8_t>& x_const,
                          std::vector<std::uint8_t>& z_const) const;

 private:
  int n_exp_ = 0;
  std::size_t frozen_count_ = 0;
  std::vector<FreezeRule> x_;
  std::vector<FreezeRule> z_;
};

struct QuantumDecodeResult {
  bool ok = false;  // false: every path died (counted as a logical error)
  PauliVec noise_estimate;
  std::vector<Pauli> s_hat;
  double pm = 0.0;  // nats, -ln P(noise_estimate)
};

// Reusable list decoder; one instance per worker thread.
class QuantumListDecoder {
 public:
  QuantumListDecoder(const QuantumCode& code, const ChannelParam& param, std::size_t list_size);
  ~QuantumListDecoder();
  QuantumListDecoder(QuantumListDecoder&&) noexcept;
  QuantumListDecoder& operator=(QuantumListDecoder&&) noexcept;

  QuantumDecodeResult decode(const SyndromePair& syndrome);

  // Decode against an explicit plan (used for the unprecoded reference).
  static QuantumDecodeResult decode_with_plan(const DecodingPlan& plan, const Precoder& t,
                                              const SyndromePair& syndrome, const ChannelParam& param,
                                              std::size_t list_size);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Final-list ties within this many nats are broken by lexicographic s_hat
// (per index, I < X < Z < Y).
inline constexpr double kTieTolerance = 1e-9;

QuantumDecodeResult quantum_scl_decode(const SyndromePair& syndrome, const QuantumCode& code,
                                       const ChannelParam& param, std::size_t list_size);

// Plain quantum polar decoder on code.spec(), ignoring the precoder.
QuantumDecodeResult unprecoded_scl_decode(const SyndromePair& syndrome, const CodeSpec& spec,
                                          const ChannelParam& param, std::size_t list_size);

// Greedy successive cancellation: at each index keep the single best symbol.
QuantumDecodeResult quantum_sc_decode(const SyndromePair& syndrome, const QuantumCode& code,
                                      const ChannelParam& param);

// Success iff s_hat matches the true polarized symbols (both X and Z) on
// every logical index.
bool is_logical_success(std::span<const Pauli> s_hat, const PauliVec& truth, const QuantumCode& code);

// Lexicographic comparison of symbol sequences, I < X < Z < Y.
bool symbols_less(std::span<const Pauli> a, std::span<const Pauli> b);

}  // namespace qppc
