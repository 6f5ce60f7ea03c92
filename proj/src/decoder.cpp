#include "qppc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qppc/list_engine.hpp"

namespace qppc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void normalize(Quad& q) {
  const double s = q.sum();
  if (s > 0.0) {
    for (double& v : q.p) v /= s;
  }
}

Quad combine_quad(const Quad& a, const Quad& b) {
  const double bx0 = b[0U] + b[2U];
  const double bx1 = b[1U] + b[3U];
  Quad out{{a[0U] * bx0 + a[1U] * bx1, a[1U] * bx0 + a[0U] * bx1, a[2U] * bx0 + a[3U] * bx1,
            a[3U] * bx0 + a[2U] * bx1}};
  normalize(out);
  return out;
}

Quad split_quad(const Quad& a, const Quad& b, unsigned d) {
  const unsigned x1 = d & 1U;
  const unsigned z1 = (d >> 1) & 1U;
  Quad out;
  for (unsigned x2 = 0; x2 < 2; ++x2) {
    for (unsigned z2 = 0; z2 < 2; ++z2) {
      out[x2 | (z2 << 1)] = a[(x1 ^ x2) | (z1 << 1)] * b[x2 | ((z1 ^ z2) << 1)];
    }
  }
  normalize(out);
  return out;
}

struct QuaternaryKernel {
  using Msg = Quad;
  static constexpr unsigned kSymbols = 4;
  static Msg combine(const Msg& a, const Msg& b) { return combine_quad(a, b); }
  static Msg split(const Msg& a, const Msg& b, std::uint8_t d) { return split_quad(a, b, d); }
  static void recombine(std::uint8_t a, std::uint8_t b, std::uint8_t& top, std::uint8_t& bottom) {
    top = static_cast<std::uint8_t>(a ^ (b & 1U));
    bottom = static_cast<std::uint8_t>(b ^ (a & 2U));
  }
  static double metric(const Msg& leaf, std::uint8_t s) {
    const double q = leaf[static_cast<unsigned>(s)];
    return q > 0.0 ? -std::log(q) : kInf;
  }
};

struct BinaryKernel {
  using Msg = double;
  static constexpr unsigned kSymbols = 2;
  static Msg combine(double a, double b) { return llr_check(a, b); }
  static Msg split(double a, double b, std::uint8_t u) { return llr_variable(a, b, u); }
  static void recombine(std::uint8_t a, std::uint8_t b, std::uint8_t& top, std::uint8_t& bottom) {
    top = static_cast<std::uint8_t>(a ^ b);
    bottom = b;
  }
  static double metric(double llr, std::uint8_t u) { return binary_branch_metric(llr, u); }
};

std::vector<std::size_t> frozen_positions(const CodeSpec& spec) {
  std::vector<std::size_t> pos(spec.size(), spec.size());
  const auto& f = spec.frozen_set();
  for (std::size_t p = 0; p < f.size(); ++p) pos[f[p]] = p;
  return pos;
}

// Admissible symbols at index i given the path history.
struct Constraints {
  const DecodingPlan* plan;
  std::vector<std::uint8_t> x_const;
  std::vector<std::uint8_t> z_const;

  Constraints(const DecodingPlan& p, const SyndromePair& syn) : plan(&p) { p.syndrome_constants(syn, x_const, z_const); }

  unsigned operator()(std::size_t i, std::span<const std::uint8_t> hist) const {
    unsigned xmask = 0b11;
    unsigned zmask = 0b11;
    const FreezeRule& xr = plan->x_rule(i);
    if (xr.frozen) {
      unsigned v = x_const[i];
      for (std::uint32_t k : xr.deps) v ^= hist[k] & 1U;
      xmask = 1U << v;
    }
    const FreezeRule& zr = plan->z_rule(i);
    if (zr.frozen) {
      unsigned v = z_const[i];
      for (std::uint32_t k : zr.deps) v ^= (hist[k] >> 1) & 1U;
      zmask = 1U << v;
    }
    unsigned mask = 0;
    for (unsigned s = 0; s < 4; ++s) {
      if (((xmask >> (s & 1U)) & 1U) && ((zmask >> (s >> 1)) & 1U)) mask |= 1U << s;
    }
    return mask;
  }
};

PauliVec noise_from_frame(std::span<const std::uint8_t> w, int n_exp) {
  const std::size_t n = w.size();
  BitVec wx(n);
  BitVec wz(n);
  for (std::size_t i = 0; i < n; ++i) {
    wx.set(i, w[i] & 1U);
    wz.set(i, (w[i] >> 1) & 1U);
  }
  return PauliVec(polar_transform(wx, n_exp), polar_transform_transposed(wz, n_exp));
}

template <class Leaf>
QuantumDecodeResult pick_leaf(const std::vector<Leaf>& leaves, const Precoder& t, int n_exp) {
  QuantumDecodeResult res;
  if (leaves.empty()) return res;
  double best = kInf;
  for (const Leaf& l : leaves) best = std::min(best, l.pm);
  bool have = false;
  for (const Leaf& l : leaves) {
    if (l.pm > best + kTieTolerance) continue;
    PauliVec noise = noise_from_frame(l.syms, n_exp);
    std::vector<Pauli> s = polarized_symbols(noise, t, n_exp);
    if (!have || symbols_less(s, res.s_hat)) {
      res.noise_estimate = std::move(noise);
      res.s_hat = std::move(s);
      res.pm = l.pm;
      have = true;
    }
  }
  res.ok = true;
  return res;
}

std::vector<Quad> channel_quads(const ChannelParam& param, std::size_t n) { return std::vector<Quad>(n, prior_quad(param)); }

// Greedy quaternary SC by direct recursion over the polar tree.
class GreedyQuaternary {
 public:
  GreedyQuaternary(const Constraints& cons, std::size_t n) : cons_(cons), hist_(n, 0) {}

  bool run(std::span<const Quad> channel, std::vector<std::uint8_t>& sums_out) {
    sums_out.assign(channel.size(), 0);
    return node(channel, 0, sums_out);
  }
  const std::vector<std::uint8_t>& history() const { return hist_; }
  double pm() const { return pm_; }

 private:
  bool node(std::span<const Quad> msgs, std::size_t first, std::span<std::uint8_t> sums) {
    if (msgs.size() == 1) {
      const unsigned mask = cons_(first, std::span<const std::uint8_t>(hist_.data(), first));
      double best = kInf;
      double best_bm = kInf;
      int pick = -1;
      for (unsigned s = 0; s < 4; ++s) {
        if (!((mask >> s) & 1U)) continue;
        const double bm = QuaternaryKernel::metric(msgs[0], static_cast<std::uint8_t>(s));
        if (!std::isfinite(bm)) continue;
        if (pick < 0 || pm_ + bm < best || (pm_ + bm == best && bm < best_bm)) {
          best = pm_ + bm;
          best_bm = bm;
          pick = static_cast<int>(s);
        }
      }
      if (pick < 0) return false;
      pm_ = best;
      hist_[first] = static_cast<std::uint8_t>(pick);
      sums[0] = static_cast<std::uint8_t>(pick);
      return true;
    }
    const std::size_t m = msgs.size() / 2;
    std::vector<Quad> child(m);
    for (std::size_t k = 0; k < m; ++k) child[k] = QuaternaryKernel::combine(msgs[k], msgs[k + m]);
    std::vector<std::uint8_t> left(m);
    if (!node(child, first, left)) return false;
    for (std::size_t k = 0; k < m; ++k) child[k] = QuaternaryKernel::split(msgs[k], msgs[k + m], left[k]);
    std::vector<std::uint8_t> right(m);
    if (!node(child, first + m, right)) return false;
    for (std::size_t k = 0; k < m; ++k) QuaternaryKernel::recombine(left[k], right[k], sums[k], sums[k + m]);
    return true;
  }

  const Constraints& cons_;
  std::vector<std::uint8_t> hist_;
  double pm_ = 0.0;
};

// Binary greedy SC; returns the decided u.
class GreedyBinary {
 public:
  GreedyBinary(const CodeSpec& spec, const BitVec& frozen_vals)
      : spec_(spec), frozen_(frozen_vals), pos_(frozen_positions(spec)), u_(spec.size()) {}

  BitVec run(std::span<const double> llrs) {
    std::vector<std::uint8_t> sums(llrs.size());
    node(llrs, 0, sums);
    return u_;
  }

 private:
  void node(std::span<const double> l, std::size_t first, std::span<std::uint8_t> sums) {
    if (l.size() == 1) {
      bool bit = false;
      if (spec_.is_frozen(first)) {
        bit = frozen_.get(pos_[first]);
      } else {
        bit = BinaryKernel::metric(l[0], 1) < BinaryKernel::metric(l[0], 0);
      }
      u_.set(first, bit);
      sums[0] = bit ? 1 : 0;
      return;
    }
    const std::size_t m = l.size() / 2;
    std::vector<double> child(m);
    for (std::size_t k = 0; k < m; ++k) child[k] = BinaryKernel::combine(l[k], l[k + m]);
    std::vector<std::uint8_t> left(m);
    node(child, first, left);
    for (std::size_t k = 0; k < m; ++k) child[k] = BinaryKernel::split(l[k], l[k + m], left[k]);
    std::vector<std::uint8_t> right(m);
    node(child, first + m, right);
    for (std::size_t k = 0; k < m; ++k) BinaryKernel::recombine(left[k], right[k], sums[k], sums[k + m]);
  }

  const CodeSpec& spec_;
  const BitVec& frozen_;
  std::vector<std::size_t> pos_;
  BitVec u_;
};

void check_binary_inputs(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals) {
  if (llrs.size() != spec.size()) throw std::invalid_argument("binary decoder: llr length must equal N");
  if (frozen_vals.size() != spec.frozen_set().size()) {
    throw std::invalid_argument("binary decoder: frozen_vals length must equal |F|");
  }
}

void check_syndrome(const SyndromePair& syn, std::size_t frozen) {
  if (syn.sx.size() != frozen || syn.sz.size() != frozen) {
    throw std::invalid_argument("syndrome length must equal |F|");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

double llr_check(double a, double b) {
  const bool ia = std::isinf(a);
  const bool ib = std::isinf(b);
  if (ia && ib) return (a > 0) == (b > 0) ? kInf : -kInf;
  if (ia) return a > 0 ? b : -b;
  if (ib) return b > 0 ? a : -a;
  const double sign = (a < 0) != (b < 0) ? -1.0 : 1.0;
  return sign * std::min(std::abs(a), std::abs(b)) + std::log1p(std::exp(-std::abs(a + b))) -
         std::log1p(std::exp(-std::abs(a - b)));
}

double binary_branch_metric(double llr, unsigned u) {
  const double t = u ? llr : -llr;  // -lambda (-1)^u
  if (std::isnan(t)) return 1.0;
  if (t == kInf) return kInf;
  if (t == -kInf) return 0.0;
  const double nats = t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
  return nats / std::numbers::ln2;
}

BitVec binary_sc_decode(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals) {
  check_binary_inputs(llrs, spec, frozen_vals);
  GreedyBinary g(spec, frozen_vals);
  return g.run(llrs);
}

BinaryListResult binary_scl_decode(std::span<const double> llrs, const CodeSpec& spec, const BitVec& frozen_vals,
                                   std::size_t list_size) {
  check_binary_inputs(llrs, spec, frozen_vals);
  const std::vector<std::size_t> pos = frozen_positions(spec);
  auto allowed = [&](std::size_t i, std::span<const std::uint8_t>) -> unsigned {
    if (spec.is_frozen(i)) return 1U << (frozen_vals.get(pos[i]) ? 1 : 0);
    return 0b11;
  };
  BinaryListResult res;
  res.u = BitVec(spec.size());
  if (spec.n_exp() == 0) {
    const bool bit = spec.is_frozen(0) ? frozen_vals.get(0) : binary_branch_metric(llrs[0], 1) < binary_branch_metric(llrs[0], 0);
    res.u.set(0, bit);
    res.pm = binary_branch_metric(llrs[0], bit);
    return res;
  }
  ListEngine<BinaryKernel> engine(spec.n_exp(), list_size);
  auto leaves = engine.run(llrs, allowed);
  if (leaves.empty()) {
    res.pm = kInf;
    return res;
  }
  std::size_t best = 0;
  for (std::size_t l = 1; l < leaves.size(); ++l) {
    if (leaves[l].pm < leaves[best].pm) best = l;
  }
  for (std::size_t i = 0; i < spec.size(); ++i) res.u.set(i, leaves[best].syms[i] != 0);
  res.pm = leaves[best].pm;
  return res;
}

Quad quaternary_node_combine(const Quad& a, const Quad& b) { return combine_quad(a, b); }

Quad quaternary_node_split(const Quad& a, const Quad& b, Pauli decided) {
  Quad out = split_quad(a, b, code(decided));
  if (!(out.sum() > 0.0)) throw DegenerateMessage("quaternary split: zero normalizer");
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Pauli> polarized_symbols(const PauliVec& noise, const Precoder& t, int n_exp) {
  if (noise.size() != t.size()) throw std::invalid_argument("noise length must equal N");
  const BitVec sx = t.apply(polar_transform(noise.x, n_exp));
  const BitVec sz = t.apply(polar_transform(reverse(noise.z), n_exp));
  std::vector<Pauli> s(noise.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = make_pauli(sx.get(i), sz.get(i));
  return s;
}

std::vector<Pauli> polarized_symbols(const PauliVec& noise, const QuantumCode& code) {
  return polarized_symbols(noise, code.precoder(), code.n_exp());
}

SyndromePair measure_syndrome(const PauliVec& noise, const QuantumCode& code) {
  if (noise.size() != code.size()) throw std::invalid_argument("measure_syndrome: noise length must equal N");
  const Precoder& t = code.precoder();
  const auto& f = code.spec().frozen_set();
  return SyndromePair{project(t.apply(polar_transform(noise.x, code.n_exp())), f),
                      project(t.apply(polar_transform(reverse(noise.z), code.n_exp())), f)};
}

PauliVec noise_from_symbols(std::span<const Pauli> s, const Precoder& t, int n_exp) {
  if (s.size() != t.size()) throw std::invalid_argument("symbol length must equal N");
  BitVec sx(s.size());
  BitVec sz(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    sx.set(i, x_bit(s[i]));
    sz.set(i, z_bit(s[i]));
  }
  // T is an involution, so s T recovers the polarized vector.
  return PauliVec(polar_transform(t.apply(sx), n_exp), reverse(polar_transform(t.apply(sz), n_exp)));
}

// ---------------------------------------------------------------------------

DecodingPlan DecodingPlan::precoded(const QuantumCode& code) {
  const CodeSpec& spec = code.spec();
  const Precoder& t = code.precoder();
  const std::size_t n = spec.size();
  const auto& f = spec.frozen_set();
  DecodingPlan plan;
  plan.n_exp_ = spec.n_exp();
  plan.frozen_count_ = f.size();
  plan.x_.resize(n);
  plan.z_.resize(n);

  // X: s^X_j = w_j + sum_{k<j, T(k,j)=1} w_k.
  for (std::size_t p = 0; p < f.size(); ++p) {
    FreezeRule& r = plan.x_[f[p]];
    r.frozen = true;
    r.deps.assign(t.column_entries(f[p]).begin(), t.column_entries(f[p]).end());
    r.sources = {static_cast<std::uint32_t>(p)};
  }

  // Z: (s^Z J)_m = sum_k w_k (JTJ)(k,m); for m = N-1-j, j in F, this touches
  // m and N-1-i for every i < j with T(i,j) = 1. Reduce to distinct last
  // indices.
  std::vector<BitVec> rows;
  std::vector<BitVec> srcs;
  std::vector<std::size_t> pivot_of(n, n);
  for (std::size_t p = 0; p < f.size(); ++p) {
    const std::size_t j = f[p];
    BitVec row(n);
    row.set(n - 1 - j, true);
    for (std::uint32_t i : t.column_entries(j)) row.flip(n - 1 - i);
    BitVec src(f.size());
    src.set(p, true);
    for (;;) {
      const std::size_t h = row.last_set();
      if (h == n) throw std::logic_error("DecodingPlan: dependent Z constraints");
      if (pivot_of[h] == n) {
        pivot_of[h] = rows.size();
        rows.push_back(std::move(row));
        srcs.push_back(std::move(src));
        break;
      }
      row ^= rows[pivot_of[h]];
      src ^= srcs[pivot_of[h]];
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::size_t h = rows[r].last_set();
    FreezeRule& rule = plan.z_[h];
    rule.frozen = true;
    for (std::size_t k : rows[r].support()) {
      if (k != h) rule.deps.push_back(static_cast<std::uint32_t>(k));
    }
    for (std::size_t s : srcs[r].support()) rule.sources.push_back(static_cast<std::uint32_t>(s));
  }
  return plan;
}

DecodingPlan DecodingPlan::unprecoded(const CodeSpec& spec) {
  const std::size_t n = spec.size();
  const auto& f = spec.frozen_set();
  DecodingPlan plan;
  plan.n_exp_ = spec.n_exp();
  plan.frozen_count_ = f.size();
  plan.x_.resize(n);
  plan.z_.resize(n);
  for (std::size_t p = 0; p < f.size(); ++p) {
    plan.x_[f[p]].frozen = true;
    plan.x_[f[p]].sources = {static_cast<std::uint32_t>(p)};
    plan.z_[n - 1 - f[p]].frozen = true;
    plan.z_[n - 1 - f[p]].sources = {static_cast<std::uint32_t>(p)};
  }
  return plan;
}

void DecodingPlan::syndrome_constants(const SyndromePair& syndrome, std::vector<std::uint8_t>& x_const,
                                      std::vector<std::uint8_t>& z_const) const {
  check_syndrome(syndrome, frozen_count_);
  x_const.assign(size(), 0);
  z_const.assign(size(), 0);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::uint32_t s : x_[i].sources) x_const[i] ^= syndrome.sx.get(s) ? 1 : 0;
    for (std::uint32_t s : z_[i].sources) z_const[i] ^= syndrome.sz.get(s) ? 1 : 0;
  }
}

// ---------------------------------------------------------------------------

struct QuantumListDecoder::Impl {
  Precoder precoder;
  DecodingPlan plan;
  std::vector<Quad> channel;
  ListEngine<QuaternaryKernel> engine;

  Impl(const Precoder& t, DecodingPlan pl, const ChannelParam& param, std::size_t list_size)
      : precoder(t),
        plan(std::move(pl)),
        channel(channel_quads(param, t.size())),
        engine(std::max(plan.n_exp(), 1), list_size) {}

  QuantumDecodeResult decode(const SyndromePair& syndrome) {
    const Constraints cons(plan, syndrome);
    if (plan.n_exp() == 0) {
      // Single qubit: enumerate directly.
      std::vector<typename ListEngine<QuaternaryKernel>::Leaf> leaves;
      const unsigned mask = cons(0, {});
      for (unsigned s = 0; s < 4; ++s) {
        if (!((mask >> s) & 1U)) continue;
        const double bm = QuaternaryKernel::metric(channel[0], static_cast<std::uint8_t>(s));
        if (std::isfinite(bm)) leaves.push_back({bm, {static_cast<std::uint8_t>(s)}});
      }
      return pick_leaf(leaves, precoder, 0);
    }
    return pick_leaf(engine.run(channel, cons), precoder, plan.n_exp());
  }
};

QuantumListDecoder::QuantumListDecoder(const QuantumCode& code, const ChannelParam& param, std::size_t list_size)
    : impl_(std::make_unique<Impl>(code.precoder(), DecodingPlan::precoded(code), param, list_size)) {}
QuantumListDecoder::~QuantumListDecoder() = default;
QuantumListDecoder::QuantumListDecoder(QuantumListDecoder&&) noexcept = default;
QuantumListDecoder& QuantumListDecoder::operator=(QuantumListDecoder&&) noexcept = default;

QuantumDecodeResult QuantumListDecoder::decode(const SyndromePair& syndrome) { return impl_->decode(syndrome); }

QuantumDecodeResult QuantumListDecoder::decode_with_plan(const DecodingPlan& plan, const Precoder& t,
                                                         const SyndromePair& syndrome, const ChannelParam& param,
                                                         std::size_t list_size) {
  Impl impl(t, plan, param, list_size);
  return impl.decode(syndrome);
}

QuantumDecodeResult quantum_scl_decode(const SyndromePair& syndrome, const QuantumCode& code,
                                       const ChannelParam& param, std::size_t list_size) {
  QuantumListDecoder dec(code, param, list_size);
  return dec.decode(syndrome);
}

QuantumDecodeResult unprecoded_scl_decode(const SyndromePair& syndrome, const CodeSpec& spec,
                                          const ChannelParam& param, std::size_t list_size) {
  return QuantumListDecoder::decode_with_plan(DecodingPlan::unprecoded(spec), Precoder::identity(spec.size()),
                                              syndrome, param, list_size);
}

QuantumDecodeResult quantum_sc_decode(const SyndromePair& syndrome, const QuantumCode& code,
                                      const ChannelParam& param) {
  const DecodingPlan plan = DecodingPlan::precoded(code);
  const Constraints cons(plan, syndrome);
  const std::vector<Quad> channel = channel_quads(param, code.size());
  GreedyQuaternary g(cons, code.size());
  std::vector<std::uint8_t> sums;
  QuantumDecodeResult res;
  if (!g.run(channel, sums)) return res;
  res.ok = true;
  res.noise_estimate = noise_from_frame(g.history(), code.n_exp());
  res.s_hat = polarized_symbols(res.noise_estimate, code);
  res.pm = g.pm();
  return res;
}

bool is_logical_success(std::span<const Pauli> s_hat, const PauliVec& truth, const QuantumCode& code) {
  if (s_hat.size() != code.size()) return false;
  const std::vector<Pauli> s_true = polarized_symbols(truth, code);
  for (std::size_t i : code.logical_set()) {
    if (s_hat[i] != s_true[i]) return false;
  }
  return true;
}

bool symbols_less(std::span<const Pauli> a, std::span<const Pauli> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Pauli x, Pauli y) { return code(x) < code(y); });
}

}  // namespace qppc
