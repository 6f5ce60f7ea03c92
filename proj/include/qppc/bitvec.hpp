#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qppc {

// Fixed-length vector over F2, packed 64 bits per word (bit k of word w is
// index 64*w + k). Bits past size() in the last word are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t size);
  BitVec(std::initializer_list<int> bits);

  static BitVec from_bits(std::span<const std::uint8_t> bits);
  static BitVec unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  bool operator[](std::size_t i) const { return get(i); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  bool operator==(const BitVec& other) const = default;

  // Hamming weight.
  std::size_t weight() const;
  bool any() const;
  // Inner product over F2.
  bool dot(const BitVec& other) const;
  // Highest set index, or size() if the vector is zero.
  std::size_t last_set() const;

  std::vector<std::uint8_t> to_bits() const;
  std::vector<std::size_t> support() const;
  std::string to_string() const;

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// u * G with G = G2^{(x)n}, G2 = [[1,0],[1,1]], via the O(N log N) butterfly.
// G is an involution over F2, so applying this twice is the identity.
BitVec polar_transform(const BitVec& u, int n_exp);

// u * G^T. Equal to reverse(polar_transform(reverse(u))) since G^T = JGJ.
BitVec polar_transform_transposed(const BitVec& u, int n_exp);

// v * J: index reversal, v'_i = v_{N-1-i}.
BitVec reverse(const BitVec& v);

// Entries of v at the listed positions, in the listed order.
BitVec project(const BitVec& v, std::span<const std::size_t> idx);

// In-place butterflies on unpacked 0/1 arrays of length 2^n.
void polar_transform_inplace(std::span<std::uint8_t> bits);
void polar_transform_transposed_inplace(std::span<std::uint8_t> bits);

// log2 of a power of two; throws std::invalid_argument otherwise.
int exact_log2(std::size_t n);

}  // namespace qppc
