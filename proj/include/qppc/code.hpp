#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qppc/bitmatrix.hpp"
#include "qppc/bitvec.hpp"

namespace qppc {

using IndexSet = std::vector<std::size_t>;
using Entry = std::pair<std::size_t, std::size_t>;

// Blocklength N = 2^n_exp and the information set A (sorted). The frozen set
// F is the complement. For the quantum construction A plays the role of A_Z
// and A_X = J(A).
class CodeSpec {
 public:
  CodeSpec(int n_exp, IndexSet info_set);

  int n_exp() const { return n_exp_; }
  std::size_t size() const { return std::size_t{1} << n_exp_; }
  std::size_t k() const { return info_.size(); }
  const IndexSet& info_set() const { return info_; }
  const IndexSet& frozen_set() const { return frozen_; }
  bool is_info(std::size_t i) const { return is_info_[i] != 0; }
  bool is_frozen(std::size_t i) const { return is_info_[i] == 0; }
  std::size_t mirror(std::size_t i) const { return size() - 1 - i; }

  bool operator==(const CodeSpec& other) const { return n_exp_ == other.n_exp_ && info_ == other.info_; }

 private:
  int n_exp_;
  IndexSet info_;
  IndexSet frozen_;
  std::vector<std::uint8_t> is_info_;
};

// Rate-1 precoder: upper unitriangular T stored as its strictly-upper
// off-diagonal support. Involution/persymmetry are not enforced here; see
// validate_precoder.
class Precoder {
 public:
  explicit Precoder(std::size_t n);
  Precoder(std::size_t n, std::vector<Entry> off_diag);

  static Precoder identity(std::size_t n) { return Precoder(n); }

  std::size_t size() const { return n_; }
  const std::vector<Entry>& off_diag() const { return entries_; }
  bool is_identity() const { return entries_.empty(); }
  bool contains(std::size_t i, std::size_t j) const;
  // Columns j > i with T(i,j) = 1.
  const std::vector<std::uint32_t>& row_entries(std::size_t i) const { return rows_[i]; }
  // Rows i < j with T(i,j) = 1.
  const std::vector<std::uint32_t>& column_entries(std::size_t j) const { return cols_[j]; }

  // v T and v T^T.
  BitVec apply(const BitVec& v) const;
  BitVec apply_transposed(const BitVec& v) const;

  BitMatrix dense() const;
  Precoder toggled(std::span<const Entry> entries) const;

  bool operator==(const Precoder& other) const { return n_ == other.n_ && entries_ == other.entries_; }

 private:
  std::size_t n_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::vector<std::uint32_t>> cols_;
};

// Persymmetric partner of an off-diagonal position: (i,j) -> (N-1-j, N-1-i).
inline Entry mirror_entry(std::size_t n, Entry e) { return {n - 1 - e.second, n - 1 - e.first}; }

struct CssReport {
  // Pairs (i, N-1-i), i < N-1-i, with both members frozen.
  std::vector<Entry> frozen_pairs;
  bool valid() const { return frozen_pairs.empty(); }
  std::string describe() const;
};

struct PrecoderReport {
  bool involution = true;      // T^2 = I
  bool persymmetric = true;    // T J T^T J = I
  bool mirror_closed = true;
  bool sparsity = true;        // info-row x frozen-column, or mirror of one
  std::vector<Entry> orphans;  // entries whose mirror is absent
  std::vector<Entry> sparsity_violations;
  bool valid() const { return involution && persymmetric && mirror_closed && sparsity; }
  std::string describe() const;
};

struct SymplecticReport {
  std::size_t nonzero = 0;  // nnz of H_X H_Z^T + H_Z H_X^T
  bool valid() const { return nonzero == 0; }
};

CssReport validate_css(const CodeSpec& spec);
PrecoderReport validate_precoder(const Precoder& t, const CodeSpec& spec);
SymplecticReport symplectic_check(const BitMatrix& hx, const BitMatrix& hz);

// True if (i,j) is an info-row x frozen-column position under spec.
bool is_base_position(const CodeSpec& spec, Entry e);
// Off-diagonal E of T satisfies E^2 = 0 (equivalently T^2 = I).
bool is_involution(const Precoder& t);

struct LogicalSplit {
  IndexSet logical;
  IndexSet stabilizer;
};

// logical = {i in A : N-1-i in A}; stabilizer = A \ logical.
// Throws std::invalid_argument if spec is not CSS-valid.
LogicalSplit derive_logicals(const CodeSpec& spec);

// Bhattacharyya parameters (natural log) of the bit-channels of G2^{(x)n}
// over BSC(eps), natural index order.
std::vector<double> log_bhattacharyya(int n_exp, double eps);

// CSS-valid seed information set with K = N/2 + 1 from bit-channel
// reliabilities over BSC(2p/3).
CodeSpec initial_info_set(int n_exp, double p);

struct ParityChecks {
  BitMatrix hx;  // F_X^T T G
  BitMatrix hz;  // F_Z^T T^T G^T
};

// Dense H~_X and H~_Z with F_Z = F and F_X = J(F). N <= 2^12.
ParityChecks parity_checks(const CodeSpec& spec, const Precoder& t);

// A CSS-valid information set paired with a precoder that passes every check.
class QuantumCode {
 public:
  // Throws std::invalid_argument naming the first failed check.
  QuantumCode(CodeSpec spec, Precoder precoder);

  const CodeSpec& spec() const { return spec_; }
  const Precoder& precoder() const { return precoder_; }
  std::size_t size() const { return spec_.size(); }
  int n_exp() const { return spec_.n_exp(); }
  const IndexSet& logical_set() const { return split_.logical; }
  const IndexSet& stabilizer_set() const { return split_.stabilizer; }

  bool operator==(const QuantumCode& other) const {
    return spec_ == other.spec_ && precoder_ == other.precoder_;
  }

 private:
  CodeSpec spec_;
  Precoder precoder_;
  LogicalSplit split_;
};

}  // namespace qppc
