#include "qppc/bitmatrix.hpp"

#include <stdexcept>

namespace qppc {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged initializer");
    rows_.emplace_back(r);
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::exchange(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1 - i, true);
  return m;
}

BitMatrix BitMatrix::polar(int n_exp) {
  if (n_exp < 0 || (std::size_t{1} << n_exp) > kMaxDenseDim) {
    throw std::invalid_argument("BitMatrix::polar: size out of dense range");
  }
  const std::size_t n = std::size_t{1} << n_exp;
  // Row i of G2^{(x)n} is the polar transform of e_i.
  BitMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g.rows_[i] = polar_transform(BitVec::unit(n, i), n_exp);
  return g;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: row length mismatch");
  }
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) out.set(r, true);
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r, true);
  }
  return t;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_) {
    if (r.any()) return false;
  }
  return true;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& other) {
  if (other.rows() != rows() || other.cols_ != cols_) throw std::invalid_argument("BitMatrix add: shape mismatch");
  for (std::size_t r = 0; r < rows(); ++r) rows_[r] ^= other.rows_[r];
  return *this;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (const auto& r : rows_) {
    s += r.to_string();
    s += '\n';
  }
  return s;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimension mismatch");
  std::vector<BitVec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(vec_mul(a.row(r), b));
  return BitMatrix::from_rows(std::move(rows), b.cols());
}

BitVec vec_mul(const BitVec& v, const BitMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mul: dimension mismatch");
  BitVec out(m.cols());
  for (std::size_t k : v.support()) out ^= m.row(k);
  return out;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j : a.row(i).support()) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l : b.row(k).support()) out.set(i * b.rows() + k, j * b.cols() + l, true);
      }
    }
  }
  return out;
}

BitMatrix kron_power(const BitMatrix& base, int power) {
  if (power < 0) throw std::invalid_argument("kron_power: negative power");
  BitMatrix out = BitMatrix::identity(1);
  for (int i = 0; i < power; ++i) out = kron(out, base);
  return out;
}

BitMatrix project_columns(const BitMatrix& m, std::span<const std::size_t> idx) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(project(m.row(r), idx));
  return BitMatrix::from_rows(std::move(rows), idx.size());
}

BitMatrix project_rows(const BitMatrix& m, std::span<const std::size_t> idx) {
  std::vector<BitVec> rows;
  rows.reserve(idx.size());
  for (std::size_t r : idx) {
    if (r >= m.rows()) throw std::invalid_argument("project_rows: index out of range");
    rows.push_back(m.row(r));
  }
  return BitMatrix::from_rows(std::move(rows), m.cols());
}

std::size_t nnz(const BitMatrix& m) {
  std::size_t total = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) total += m.row(r).weight();
  return total;
}

namespace reference {

Dense to_dense(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
  }
  return d;
}

BitMatrix from_dense(const Dense& d) {
  const std::size_t cols = d.empty() ? 0 : d[0].size();
  BitMatrix m(d.size(), cols);
  for (std::size_t r = 0; r < d.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d[r][c] & 1U);
  }
  return m;
}

Dense mat_mul(const Dense& a, const Dense& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Dense out(a.size(), std::vector<std::uint8_t>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("reference::mat_mul: inner dimension mismatch");
    for (std::size_t j = 0; j < cols; ++j) {
      unsigned acc = 0;
      for (std::size_t k = 0; k < inner; ++k) acc ^= a[i][k] & b[k][j];
      out[i][j] = static_cast<std::uint8_t>(acc & 1U);
    }
  }
  return out;
}

Dense kron_power(const Dense& base, int power) {
  Dense out{{1}};
  for (int p = 0; p < power; ++p) {
    const std::size_t r0 = out.size(), c0 = out[0].size();
    const std::size_t r1 = base.size(), c1 = base[0].size();
    Dense next(r0 * r1, std::vector<std::uint8_t>(c0 * c1, 0));
    for (std::size_t i = 0; i < r0; ++i)
      for (std::size_t j = 0; j < c0; ++j)
        for (std::size_t k = 0; k < r1; ++k)
          for (std::size_t l = 0; l < c1; ++l) next[i * r1 + k][j * c1 + l] = out[i][j] & base[k][l];
    out = std::move(next);
  }
  return out;
}

std::vector<std::uint8_t> vec_mul(const std::vector<std::uint8_t>& v, const Dense& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<std::uint8_t> out(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    unsigned acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) acc ^= v[k] & m[k][j];
    out[j] = static_cast<std::uint8_t>(acc & 1U);
  }
  return out;
}

}  // namespace reference

}  // namespace qppc
