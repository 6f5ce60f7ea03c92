#pragma once

// Successive-cancellation list search over the natural-order polar tree.
//
// Messages live in per-layer buffers shared between paths until a path
// writes to a layer (every write overwrites the whole block, so sharing is
// resolved by reassignment, never by copying). Candidates are ranked by
// (path metric, branch metric, parent rank, symbol) so the surviving list is
// deterministic.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace qppc {

template <class Kernel>
class ListEngine {
 public:
  using Msg = typename Kernel::Msg;
  using Sym = std::uint8_t;
  static constexpr unsigned kSymbols = Kernel::kSymbols;

  struct Leaf {
    double pm;
    std::vector<Sym> syms;
  };

  ListEngine(int n_exp, std::size_t list_size) : n_(n_exp), size_(std::size_t{1} << n_exp), cap_(list_size) {
    if (n_exp < 1) throw std::invalid_argument("ListEngine: n_exp must be >= 1");
    if (list_size < 1) throw std::invalid_argument("ListEngine: list size must be >= 1");
    // The tree never holds more than kSymbols^N leaves.
    const double leaves = std::pow(static_cast<double>(kSymbols), static_cast<double>(size_));
    if (leaves < static_cast<double>(cap_)) cap_ = static_cast<std::size_t>(leaves);
    msgs_.resize(n_ + 1);
    sums_.resize(n_ + 1);
    for (int lam = 1; lam <= n_; ++lam) {
      const std::size_t m = block(lam);
      msgs_[lam].init(cap_, m);
      sums_[lam].init(cap_, m);
    }
    hist_.assign(cap_ * size_, 0);
    pm_.assign(cap_, 0.0);
    scratch_a_.resize(size_);
    scratch_b_.resize(size_);
  }

  std::size_t list_size() const { return cap_; }

  // allowed(i, history) returns a bitmask of admissible symbols at index i
  // given the path's decided symbols history[0..i). Returns surviving leaves
  // in list order; empty if every path died.
  template <class Allowed>
  std::vector<Leaf> run(std::span<const Msg> channel, Allowed&& allowed) {
    if (channel.size() != size_) throw std::invalid_argument("ListEngine: channel length mismatch");
    reset();
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::uint32_t slot : order_) compute_leaf(slot, i, channel);

      cands_.clear();
      for (std::size_t r = 0; r < order_.size(); ++r) {
        const std::uint32_t slot = order_[r];
        const unsigned mask = allowed(i, std::span<const Sym>(&hist_[slot * size_], i));
        const Msg& leaf = msgs_[n_].read(slot)[0];
        for (unsigned s = 0; s < kSymbols; ++s) {
          if (!((mask >> s) & 1U)) continue;
          const double bm = Kernel::metric(leaf, static_cast<Sym>(s));
          if (!std::isfinite(bm)) continue;
          cands_.push_back(
              Cand{pm_[slot] + bm, bm, static_cast<std::uint32_t>(r * kSymbols + s), slot, static_cast<Sym>(s)});
        }
      }
      if (cands_.empty()) return {};
      if (cands_.size() > cap_) {
        auto by_metric = [](const Cand& a, const Cand& b) {
          if (a.pm != b.pm) return a.pm < b.pm;
          if (a.bm != b.bm) return a.bm < b.bm;
          return a.order < b.order;
        };
        std::nth_element(cands_.begin(), cands_.begin() + static_cast<std::ptrdiff_t>(cap_), cands_.end(), by_metric);
        cands_.resize(cap_);
      }
      std::sort(cands_.begin(), cands_.end(), [](const Cand& a, const Cand& b) { return a.order < b.order; });
      apply(i);
    }
    std::vector<Leaf> out;
    out.reserve(order_.size());
    for (std::uint32_t slot : order_) {
      out.push_back(Leaf{pm_[slot], std::vector<Sym>(hist_.begin() + slot * size_, hist_.begin() + (slot + 1) * size_)});
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Cand {
    double pm;
    double bm;  // breaks ties the sum lost to rounding
    std::uint32_t order;
    std::uint32_t parent;
    Sym sym;
  };

  // One layer of buffers with reference counts; cap buffers of `width` items.
  template <class T>
  struct Layer {
    std::size_t width = 0;
    std::vector<T> data;
    std::vector<std::uint32_t> owner;  // slot -> buffer
    std::vector<std::uint32_t> refs;   // buffer -> reference count
    std::vector<std::uint32_t> free;

    void init(std::size_t cap, std::size_t w) {
      width = w;
      data.assign(cap * w, T{});
      owner.assign(cap, kNone);
      refs.assign(cap, 0);
      reset();
    }
    void reset() {
      std::fill(owner.begin(), owner.end(), kNone);
      std::fill(refs.begin(), refs.end(), 0);
      free.clear();
      for (std::size_t b = refs.size(); b-- > 0;) free.push_back(static_cast<std::uint32_t>(b));
    }
    const T* read(std::uint32_t slot) const { return &data[owner[slot] * width]; }
    T* write(std::uint32_t slot) {
      std::uint32_t b = owner[slot];
      if (b == kNone || refs[b] > 1) {
        if (b != kNone) --refs[b];
        b = free.back();
        free.pop_back();
        refs[b] = 1;
        owner[slot] = b;
      }
      return &data[b * width];
    }
    void share(std::uint32_t from, std::uint32_t to) {
      owner[to] = owner[from];
      if (owner[to] != kNone) ++refs[owner[to]];
    }
    void release(std::uint32_t slot) {
      const std::uint32_t b = owner[slot];
      if (b != kNone && --refs[b] == 0) free.push_back(b);
      owner[slot] = kNone;
    }
  };

  std::size_t block(int lam) const { return std::size_t{1} << (n_ - lam); }
  unsigned layer_bit(std::size_t i, int lam) const { return static_cast<unsigned>((i >> (n_ - lam)) & 1U); }

  void reset() {
    for (int lam = 1; lam <= n_; ++lam) {
      msgs_[lam].reset();
      sums_[lam].reset();
    }
    free_slots_.clear();
    for (std::size_t s = cap_; s-- > 1;) free_slots_.push_back(static_cast<std::uint32_t>(s));
    order_.assign(1, 0);
    pm_[0] = 0.0;
  }

  void compute_leaf(std::uint32_t slot, std::size_t i, std::span<const Msg> channel) {
    const int start = i == 0 ? 1 : n_ - (static_cast<int>(std::bit_width(i ^ (i - 1))) - 1);
    for (int lam = start; lam <= n_; ++lam) {
      const std::size_t m = block(lam);
      const Msg* parent = lam == 1 ? channel.data() : msgs_[lam - 1].read(slot);
      Msg* dst = msgs_[lam].write(slot);
      if (lam == start && i > 0) {
        const Sym* left = sums_[lam].read(slot);
        for (std::size_t k = 0; k < m; ++k) dst[k] = Kernel::split(parent[k], parent[k + m], left[k]);
      } else {
        for (std::size_t k = 0; k < m; ++k) dst[k] = Kernel::combine(parent[k], parent[k + m]);
      }
    }
  }

  void update_sums(std::uint32_t slot, std::size_t i, Sym s) {
    if (layer_bit(i, n_) == 0) {
      sums_[n_].write(slot)[0] = s;
      return;
    }
    Sym* cur = scratch_a_.data();
    Sym* next = scratch_b_.data();
    Kernel::recombine(sums_[n_].read(slot)[0], s, cur[0], cur[1]);
    int lam = n_ - 1;
    while (lam >= 1 && layer_bit(i, lam) == 1) {
      const std::size_t m = block(lam);
      const Sym* left = sums_[lam].read(slot);
      for (std::size_t k = 0; k < m; ++k) Kernel::recombine(left[k], cur[k], next[k], next[k + m]);
      std::swap(cur, next);
      --lam;
    }
    if (lam >= 1) std::copy_n(cur, block(lam), sums_[lam].write(slot));
  }

  void apply(std::size_t i) {
    // Parents with no surviving child are released first so their buffers
    // can be reused by the clones below.
    kids_.assign(cap_, 0);
    for (const Cand& c : cands_) ++kids_[c.parent];
    for (std::uint32_t slot : order_) {
      if (kids_[slot] == 0) release(slot);
    }
    // Clone before any parent is modified.
    targets_.resize(cands_.size());
    used_.assign(cap_, 0);
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      const std::uint32_t parent = cands_[c].parent;
      if (!used_[parent]) {
        used_[parent] = 1;
        targets_[c] = parent;
      } else {
        const std::uint32_t slot = free_slots_.back();
        free_slots_.pop_back();
        clone(parent, slot, i);
        targets_[c] = slot;
      }
    }
    order_.clear();
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      const std::uint32_t slot = targets_[c];
      hist_[slot * size_ + i] = cands_[c].sym;
      pm_[slot] = cands_[c].pm;
      update_sums(slot, i, cands_[c].sym);
      order_.push_back(slot);
    }
  }

  void clone(std::uint32_t from, std::uint32_t to, std::size_t upto) {
    for (int lam = 1; lam <= n_; ++lam) {
      msgs_[lam].share(from, to);
      sums_[lam].share(from, to);
    }
    std::copy_n(hist_.begin() + from * size_, upto, hist_.begin() + to * size_);
    pm_[to] = pm_[from];
  }

  void release(std::uint32_t slot) {
    for (int lam = 1; lam <= n_; ++lam) {
      msgs_[lam].release(slot);
      sums_[lam].release(slot);
    }
    free_slots_.push_back(slot);
  }

  int n_;
  std::size_t size_;
  std::size_t cap_;
  std::vector<Layer<Msg>> msgs_;
  std::vector<Layer<Sym>> sums_;
  std::vector<Sym> hist_;
  std::vector<double> pm_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> free_slots_;
  std::vector<Cand> cands_;
  std::vector<std::uint32_t> kids_, targets_;
  std::vector<std::uint8_t> used_;
  std::vector<Sym> scratch_a_, scratch_b_;
};

}  // namespace qppc
