#include <algorithm>
#include "qppc/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qppc {
namespace {

using reference::Dense;

Dense dense_t(const Precoder& t) {
  Dense d(t.size(), std::vector<std::uint8_t>(t.size(), 0));
  for (std::size_t i = 0; i < t.size(); ++i) d[i][i] = 1;
  for (const auto& [i, j] : t.off_diag()) d[i][j] = 1;
  return d;
}

Dense dense_j(std::size_t n) {
  Dense d(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) d[i][n - 1 - i] = 1;
  return d;
}

Dense transpose(const Dense& m) {
  Dense t(m.empty() ? 0 : m[0].size(), std::vector<std::uint8_t>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Dense select_columns(const Dense& m, std::span<const std::size_t> idx) {
  Dense out(m.size(), std::vector<std::uint8_t>(idx.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t c = 0; c < idx.size(); ++c) out[i][c] = m[i][idx[c]];
  }
  return out;
}

Dense polar_dense(int n_exp) { return reference::kron_power({{1, 0}, {1, 1}}, n_exp); }

}  // namespace

OracleResult exhaustive_map_decode(const SyndromePair& syndrome, const QuantumCode& code, const ChannelParam& param) {
  const std::size_t n = code.size();
  if (n > kOracleMaxN) throw std::invalid_argument("exhaustive_map_decode: N too large for enumeration");
  const auto& info = code.spec().info_set();
  const auto& frozen = code.spec().frozen_set();
  if (syndrome.sx.size() != frozen.size() || syndrome.sz.size() != frozen.size()) {
    throw std::invalid_argument("exhaustive_map_decode: syndrome length must equal |F|");
  }
  const Dense g = polar_dense(code.n_exp());
  const Dense t = dense_t(code.precoder());
  const Dense j = dense_j(n);
  // s^X = n_X G T and s^Z = n_Z J G T, so n_X = s^X T G and n_Z = s^Z T G J
  // because T and G are involutions.
  const Dense to_x = reference::mat_mul(t, g);
  const Dense to_z = reference::mat_mul(to_x, j);
  const Quad prior = prior_quad(param);

  std::vector<std::uint8_t> sx(n, 0), sz(n, 0);
  for (std::size_t p = 0; p < frozen.size(); ++p) {
    sx[frozen[p]] = syndrome.sx.get(p);
    sz[frozen[p]] = syndrome.sz.get(p);
  }
  OracleResult best;
  best.pm = std::numeric_limits<double>::infinity();
  bool have = false;
  const std::size_t total = std::size_t{1} << (2 * info.size());
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t k = 0; k < info.size(); ++k) {
      const unsigned sym = (a >> (2 * k)) & 3U;
      sx[info[k]] = sym & 1U;
      sz[info[k]] = sym >> 1;
    }
    const auto nx = reference::vec_mul(sx, to_x);
    const auto nz = reference::vec_mul(sz, to_z);
    double prob = 1.0;
    for (std::size_t i = 0; i < n; ++i) prob *= prior[nx[i] | (nz[i] << 1)];
    const double pm = -std::log(prob);
    std::vector<Pauli> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = make_pauli(sx[i], sz[i]);
    const bool better = !have || pm < best.pm - kTieTolerance ||
                        (pm <= best.pm + kTieTolerance && symbols_less(s, best.s_best));
    if (better) {
      best.s_best = std::move(s);
      best.pm = pm;
      best.noise = PauliVec(BitVec::from_bits(nx), BitVec::from_bits(nz));
      have = true;
    }
  }
  return best;
}

DenseTransforms dense_reference_transforms(const QuantumCode& code) {
  const std::size_t n = code.size();
  if (n > kDenseReferenceMaxN) throw std::invalid_argument("dense_reference_transforms: N too large");
  const Dense g = polar_dense(code.n_exp());
  const Dense t = dense_t(code.precoder());
  const Dense j = dense_j(n);
  IndexSet frozen_x;
  for (std::size_t f : code.spec().frozen_set()) frozen_x.push_back(n - 1 - f);
  std::sort(frozen_x.begin(), frozen_x.end());

  const Dense gt = reference::mat_mul(g, t);
  const Dense tg = reference::mat_mul(t, g);
  DenseTransforms out;
  out.gt = reference::from_dense(gt);
  out.jgt = reference::from_dense(reference::mat_mul(j, gt));
  out.hz = reference::from_dense(transpose(select_columns(gt, code.spec().frozen_set())));
  out.hx = reference::from_dense(transpose(select_columns(transpose(tg), frozen_x)));
  return out;
}

double exhaustive_binary_ml(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals) {
  const std::size_t n = spec.size();
  if (n > 16) throw std::invalid_argument("exhaustive_binary_ml: N too large");
  const Dense g = polar_dense(spec.n_exp());
  const auto& info = spec.info_set();
  const auto& frozen = spec.frozen_set();
  std::vector<std::uint8_t> u(n, 0);
  for (std::size_t p = 0; p < frozen.size(); ++p) u[frozen[p]] = frozen_vals.get(p);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < (std::size_t{1} << info.size()); ++a) {
    for (std::size_t k = 0; k < info.size(); ++k) u[info[k]] = (a >> k) & 1U;
    const auto x = reference::vec_mul(u, g);
    double pm = 0.0;
    for (std::size_t k = 0; k < n; ++k) pm += std::log2(1.0 + std::exp(-llrs[k] * (x[k] ? -1.0 : 1.0)));
    best = std::min(best, pm);
  }
  return best;
}

}  // namespace qppc
