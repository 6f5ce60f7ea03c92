#include "qppc/code.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qppc {
namespace {

using SparseRows = std::vector<std::vector<std::uint32_t>>;

// Sparse F2 product of row-adjacency matrices; rows come back sorted.
SparseRows sparse_mul(const SparseRows& a, const SparseRows& b, std::size_t n) {
  SparseRows out(a.size());
  std::vector<std::uint8_t> acc(n, 0), seen(n, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < a.size(); ++i) {
    touched.clear();
    for (std::uint32_t k : a[i]) {
      for (std::uint32_t j : b[k]) {
        if (!seen[j]) {
          seen[j] = 1;
          touched.push_back(j);
        }
        acc[j] ^= 1U;
      }
    }
    for (std::uint32_t j : touched) {
      if (acc[j]) out[i].push_back(j);
      acc[j] = 0;
      seen[j] = 0;
    }
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

SparseRows with_unit_diagonal(const std::vector<std::vector<std::uint32_t>>& strict, std::size_t n) {
  SparseRows out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i].push_back(static_cast<std::uint32_t>(i));
    out[i].insert(out[i].end(), strict[i].begin(), strict[i].end());
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

bool is_identity_rows(const SparseRows& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != 1 || m[i][0] != i) return false;
  }
  return true;
}

}  // namespace

CodeSpec::CodeSpec(int n_exp, IndexSet info_set) : n_exp_(n_exp), info_(std::move(info_set)) {
  if (n_exp < 0 || n_exp > 24) throw std::invalid_argument("CodeSpec: n_exp out of range");
  const std::size_t n = size();
  std::sort(info_.begin(), info_.end());
  if (std::adjacent_find(info_.begin(), info_.end()) != info_.end()) {
    throw std::invalid_argument("CodeSpec: duplicate index in info_set");
  }
  if (!info_.empty() && info_.back() >= n) throw std::invalid_argument("CodeSpec: info index out of range");
  is_info_.assign(n, 0);
  for (std::size_t i : info_) is_info_[i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_info_[i]) frozen_.push_back(i);
  }
}

Precoder::Precoder(std::size_t n) : n_(n), rows_(n), cols_(n) {}

Precoder::Precoder(std::size_t n, std::vector<Entry> off_diag) : Precoder(n) {
  std::sort(off_diag.begin(), off_diag.end());
  off_diag.erase(std::unique(off_diag.begin(), off_diag.end()), off_diag.end());
  for (const auto& [i, j] : off_diag) {
    if (j >= n || i >= j) throw std::invalid_argument("Precoder: entries must satisfy i < j < N");
    rows_[i].push_back(static_cast<std::uint32_t>(j));
    cols_[j].push_back(static_cast<std::uint32_t>(i));
  }
  for (auto& c : cols_) std::sort(c.begin(), c.end());
  entries_ = std::move(off_diag);
}

bool Precoder::contains(std::size_t i, std::size_t j) const {
  if (i >= n_) return false;
  const auto& r = rows_[i];
  return std::binary_search(r.begin(), r.end(), static_cast<std::uint32_t>(j));
}

BitVec Precoder::apply(const BitVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Precoder::apply: length mismatch");
  BitVec out = v;
  for (const auto& [i, j] : entries_) {
    if (v.get(i)) out.flip(j);
  }
  return out;
}

BitVec Precoder::apply_transposed(const BitVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Precoder::apply_transposed: length mismatch");
  BitVec out = v;
  for (const auto& [i, j] : entries_) {
    if (v.get(j)) out.flip(i);
  }
  return out;
}

BitMatrix Precoder::dense() const {
  BitMatrix t = BitMatrix::identity(n_);
  for (const auto& [i, j] : entries_) t.set(i, j, true);
  return t;
}

Precoder Precoder::toggled(std::span<const Entry> entries) const {
  std::vector<Entry> next = entries_;
  for (const Entry& e : entries) {
    auto it = std::lower_bound(next.begin(), next.end(), e);
    if (it != next.end() && *it == e) {
      next.erase(it);
    } else {
      next.insert(it, e);
    }
  }
  return Precoder(n_, std::move(next));
}

std::string CssReport::describe() const {
  if (valid()) return "css: ok";
  std::ostringstream os;
  os << "css: pairs frozen in both codes:";
  for (const auto& [a, b] : frozen_pairs) os << " (" << a << "," << b << ")";
  return os.str();
}

std::string PrecoderReport::describe() const {
  std::ostringstream os;
  os << "precoder: involution=" << (involution ? "ok" : "FAIL") << " persymmetric=" << (persymmetric ? "ok" : "FAIL")
     << " mirror_closed=" << (mirror_closed ? "ok" : "FAIL") << " sparsity=" << (sparsity ? "ok" : "FAIL");
  for (const auto& [i, j] : orphans) os << "\n  orphan entry (" << i << "," << j << ")";
  for (const auto& [i, j] : sparsity_violations) os << "\n  sparsity violation (" << i << "," << j << ")";
  return os.str();
}

CssReport validate_css(const CodeSpec& spec) {
  CssReport report;
  const std::size_t n = spec.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (spec.is_frozen(i) && spec.is_frozen(n - 1 - i)) report.frozen_pairs.emplace_back(i, n - 1 - i);
  }
  return report;
}

bool is_base_position(const CodeSpec& spec, Entry e) {
  return e.first < e.second && e.second < spec.size() && spec.is_info(e.first) && spec.is_frozen(e.second);
}

bool is_involution(const Precoder& t) {
  std::vector<std::vector<std::uint32_t>> strict(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) strict[i] = t.row_entries(i);
  const SparseRows sq = sparse_mul(strict, strict, t.size());
  return std::all_of(sq.begin(), sq.end(), [](const auto& r) { return r.empty(); });
}

PrecoderReport validate_precoder(const Precoder& t, const CodeSpec& spec) {
  const std::size_t n = spec.size();
  if (t.size() != n) throw std::invalid_argument("validate_precoder: dimension mismatch");
  PrecoderReport report;
  report.involution = is_involution(t);

  // T J T^T J: (J T^T J)(a,b) = T(N-1-b, N-1-a).
  std::vector<std::vector<std::uint32_t>> strict(n), mirrored(n);
  for (std::size_t i = 0; i < n; ++i) strict[i] = t.row_entries(i);
  for (const auto& e : t.off_diag()) {
    const Entry m = mirror_entry(n, e);
    mirrored[m.first].push_back(static_cast<std::uint32_t>(m.second));
  }
  const SparseRows prod = sparse_mul(with_unit_diagonal(strict, n), with_unit_diagonal(mirrored, n), n);
  report.persymmetric = is_identity_rows(prod);

  for (const auto& e : t.off_diag()) {
    const Entry m = mirror_entry(n, e);
    if (!t.contains(m.first, m.second)) {
      report.mirror_closed = false;
      report.orphans.push_back(e);
    }
    if (!is_base_position(spec, e) && !is_base_position(spec, m)) {
      report.sparsity = false;
      report.sparsity_violations.push_back(e);
    }
  }
  return report;
}

SymplecticReport symplectic_check(const BitMatrix& hx, const BitMatrix& hz) {
  if (hx.rows() != hz.rows() || hx.cols() != hz.cols()) {
    throw std::invalid_argument("symplectic_check: dimension mismatch");
  }
  const BitMatrix form = mat_mul(hx, hz.transposed()) + mat_mul(hz, hx.transposed());
  return SymplecticReport{nnz(form)};
}

LogicalSplit derive_logicals(const CodeSpec& spec) {
  if (!validate_css(spec).valid()) throw std::invalid_argument("derive_logicals: spec is not CSS-valid");
  LogicalSplit split;
  for (std::size_t i : spec.info_set()) {
    if (spec.is_info(spec.mirror(i))) {
      split.logical.push_back(i);
    } else {
      split.stabilizer.push_back(i);
    }
  }
  return split;
}

std::vector<double> log_bhattacharyya(int n_exp, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("log_bhattacharyya: eps must lie in (0,1)");
  std::vector<double> z{std::log(2.0) + 0.5 * (std::log(eps) + std::log1p(-eps))};
  for (int stage = 0; stage < n_exp; ++stage) {
    std::vector<double> next(z.size() * 2);
    for (std::size_t k = 0; k < z.size(); ++k) {
      // Check-node child 2z - z^2 = z(2 - z); variable-node child z^2.
      next[2 * k] = z[k] + std::log(2.0 - std::exp(z[k]));
      next[2 * k + 1] = 2.0 * z[k];
    }
    z = std::move(next);
  }
  return z;
}

CodeSpec initial_info_set(int n_exp, double p) {
  if (n_exp < 1) throw std::invalid_argument("initial_info_set: n_exp must be >= 1");
  if (!(p > 0.0 && p < 0.75)) throw std::invalid_argument("initial_info_set: p must lie in (0, 0.75)");
  const std::size_t n = std::size_t{1} << n_exp;
  const std::vector<double> z = log_bhattacharyya(n_exp, 2.0 * p / 3.0);

  // The logical pair is the pair whose weaker member is most reliable; every
  // other pair contributes its more reliable member.
  std::size_t logical = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double worse = std::max(z[i], z[n - 1 - i]);
    if (i == 0 || worse < best) {
      best = worse;
      logical = i;
    }
  }
  IndexSet info;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const std::size_t j = n - 1 - i;
    if (i == logical) {
      info.push_back(i);
      info.push_back(j);
    } else {
      info.push_back(z[j] < z[i] ? j : i);
    }
  }
  return CodeSpec(n_exp, std::move(info));
}

ParityChecks parity_checks(const CodeSpec& spec, const Precoder& t) {
  if (t.size() != spec.size()) throw std::invalid_argument("parity_checks: dimension mismatch");
  const BitMatrix g = BitMatrix::polar(spec.n_exp());
  const BitMatrix td = t.dense();
  IndexSet frozen_x;
  for (std::size_t j : spec.frozen_set()) frozen_x.push_back(spec.mirror(j));
  std::sort(frozen_x.begin(), frozen_x.end());
  ParityChecks out;
  out.hz = project_columns(mat_mul(g, td), spec.frozen_set()).transposed();
  out.hx = project_rows(mat_mul(td, g), frozen_x);
  return out;
}

QuantumCode::QuantumCode(CodeSpec spec, Precoder precoder) : spec_(std::move(spec)), precoder_(std::move(precoder)) {
  if (precoder_.size() != spec_.size()) throw std::invalid_argument("QuantumCode: precoder size mismatch");
  const CssReport css = validate_css(spec_);
  if (!css.valid()) throw std::invalid_argument(css.describe());
  const PrecoderReport pre = validate_precoder(precoder_, spec_);
  if (!pre.valid()) throw std::invalid_argument(pre.describe());
  split_ = derive_logicals(spec_);
}

}  // namespace qppc
