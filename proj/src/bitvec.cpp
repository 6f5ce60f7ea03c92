#include "qppc/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qppc {
namespace {

constexpr BitVec::Word kLowMasks[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

std::size_t words_for(std::size_t bits) { return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits; }

void check_length(const BitVec& u, int n_exp) {
  if (n_exp < 0 || n_exp > 30 || u.size() != (std::size_t{1} << n_exp)) {
    throw std::invalid_argument("polar transform: length must equal 2^n_exp");
  }
}

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) {
    set(i++, b & 1);
  }
}

BitVec BitVec::from_bits(std::span<const std::uint8_t> bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1U) v.set(i, true);
  }
  return v;
}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
  BitVec v(size);
  v.set(index, true);
  return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVec xor: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVec and: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::size_t BitVec::weight() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool BitVec::dot(const BitVec& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVec dot: length mismatch");
  Word acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::last_set() const {
  for (std::size_t w = words_.size(); w-- > 0;) {
    if (words_[w] != 0) {
      return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
    }
  }
  return size_;
}

std::vector<std::uint8_t> BitVec::to_bits() const {
  std::vector<std::uint8_t> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i);
  return out;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word word = words_[w];
    while (word != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVec polar_transform(const BitVec& u, int n_exp) {
  check_length(u, n_exp);
  BitVec x = u;
  auto words = x.words();
  const std::size_t n = u.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    if (h < BitVec::kWordBits) {
      const BitVec::Word mask = kLowMasks[std::countr_zero(h)];
      for (auto& w : words) w ^= (w >> h) & mask;
    } else {
      const std::size_t hw = h / BitVec::kWordBits;
      for (std::size_t base = 0; base < words.size(); base += 2 * hw) {
        for (std::size_t k = 0; k < hw; ++k) words[base + k] ^= words[base + hw + k];
      }
    }
  }
  return x;
}

BitVec polar_transform_transposed(const BitVec& u, int n_exp) {
  check_length(u, n_exp);
  BitVec x = u;
  auto words = x.words();
  const std::size_t n = u.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    if (h < BitVec::kWordBits) {
      const BitVec::Word mask = kLowMasks[std::countr_zero(h)];
      for (auto& w : words) w ^= (w & mask) << h;
    } else {
      const std::size_t hw = h / BitVec::kWordBits;
      for (std::size_t base = 0; base < words.size(); base += 2 * hw) {
        for (std::size_t k = 0; k < hw; ++k) words[base + hw + k] ^= words[base + k];
      }
    }
  }
  return x;
}

BitVec reverse(const BitVec& v) {
  const std::size_t n = v.size();
  BitVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v.get(i)) out.set(n - 1 - i, true);
  }
  return out;
}

BitVec project(const BitVec& v, std::span<const std::size_t> idx) {
  BitVec out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= v.size()) throw std::invalid_argument("project: index out of range");
    if (v.get(idx[k])) out.set(k, true);
  }
  return out;
}

void polar_transform_inplace(std::span<std::uint8_t> bits) {
  const std::size_t n = bits.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t base = 0; base < n; base += 2 * h) {
      for (std::size_t k = base; k < base + h; ++k) bits[k] ^= bits[k + h];
    }
  }
}

void polar_transform_transposed_inplace(std::span<std::uint8_t> bits) {
  const std::size_t n = bits.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t base = 0; base < n; base += 2 * h) {
      for (std::size_t k = base; k < base + h; ++k) bits[k + h] ^= bits[k];
    }
  }
}

int exact_log2(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) throw std::invalid_argument("length is not a power of two");
  return std::countr_zero(n);
}

}  // namespace qppc
