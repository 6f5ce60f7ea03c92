#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qppc/bitvec.hpp"

namespace qppc {

// Dense F2 matrix stored as bit-packed rows. Only materialized for the
// blocklengths validation and gate counting need (N <= kMaxDenseDim).
class BitMatrix {
 public:
  static constexpr std::size_t kMaxDenseDim = std::size_t{1} << 12;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix exchange(std::size_t n);
  // G2^{(x)n_exp}.
  static BitMatrix polar(int n_exp);
  static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec column(std::size_t c) const;

  BitMatrix transposed() const;
  bool is_zero() const;

  bool operator==(const BitMatrix& other) const = default;
  BitMatrix& operator+=(const BitMatrix& other);
  friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }

  std::string to_string() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// Exact F2 product. Throws std::invalid_argument on inner-dimension mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
// Row vector times matrix.
BitVec vec_mul(const BitVec& v, const BitMatrix& m);
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
BitMatrix kron_power(const BitMatrix& base, int power);

// m * S where S selects the listed columns (in order).
BitMatrix project_columns(const BitMatrix& m, std::span<const std::size_t> idx);
// S^T * m where S selects the listed rows (in order).
BitMatrix project_rows(const BitMatrix& m, std::span<const std::size_t> idx);

// Number of nonzero entries, the ||.||_0 used for gate accounting.
std::size_t nnz(const BitMatrix& m);

// Unpacked byte-per-entry implementations used to cross-check the packed
// paths in tests.
namespace reference {

using Dense = std::vector<std::vector<std::uint8_t>>;

Dense to_dense(const BitMatrix& m);
BitMatrix from_dense(const Dense& d);
Dense mat_mul(const Dense& a, const Dense& b);
Dense kron_power(const Dense& base, int power);
std::vector<std::uint8_t> vec_mul(const std::vector<std::uint8_t>& v, const Dense& m);

}  // namespace reference

}  // namespace qppc
