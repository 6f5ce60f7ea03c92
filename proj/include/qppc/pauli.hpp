#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qppc/bitvec.hpp"

namespace qppc {

// Single-qubit Pauli as an (x,z) bit pair packed into code x + 2z. The
// numeric order I < X < Z < Y is also the branch and tie-break order.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr Pauli make_pauli(unsigned x, unsigned z) { return static_cast<Pauli>((x & 1U) | ((z & 1U) << 1)); }
constexpr unsigned x_bit(Pauli p) { return static_cast<unsigned>(p) & 1U; }
constexpr unsigned z_bit(Pauli p) { return (static_cast<unsigned>(p) >> 1) & 1U; }
constexpr unsigned code(Pauli p) { return static_cast<unsigned>(p); }
constexpr char pauli_char(Pauli p) { return "IXZY"[code(p)]; }

// n = [n_X | n_Z] over N qubits.
struct PauliVec {
  BitVec x;
  BitVec z;

  PauliVec() = default;
  explicit PauliVec(std::size_t n) : x(n), z(n) {}
  PauliVec(BitVec x_part, BitVec z_part);

  std::size_t size() const { return x.size(); }
  Pauli at(std::size_t i) const { return make_pauli(x.get(i), z.get(i)); }
  void set(std::size_t i, Pauli p) {
    x.set(i, x_bit(p));
    z.set(i, z_bit(p));
  }
  // Number of non-identity positions.
  std::size_t weight() const;
  bool operator==(const PauliVec& other) const = default;
};

// Probability quadruple (p_I, p_X, p_Z, p_Y), indexed by Pauli code.
struct Quad {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};

  double operator[](Pauli s) const { return p[code(s)]; }
  double operator[](unsigned c) const { return p[c]; }
  double& operator[](unsigned c) { return p[c]; }
  double sum() const { return p[0] + p[1] + p[2] + p[3]; }
};

}  // namespace qppc
