#pragma once

#include <cstddef>
#include <cstdint>

#include "qppc/code.hpp"

namespace qppc {

// Clifford count quoted for the distance-25 surface code, for context only.
inline constexpr std::size_t kSurfaceCodeReferenceGates = 4704;

// One extra encoder CNOT per off-diagonal entry of T: ||T||_0 - N.
std::size_t encoder_extra_gates(const Precoder& t);

struct SyndromeGates {
  std::size_t stab_nnz = 0;      // ||F^T T^T G^T||_0
  std::size_t total_gates = 0;   // X and Z sectors: 2 stab_nnz
  std::int64_t delta_vs_unprecoded = 0;  // ||F^T T^T G^T||_0 - ||F^T G^T||_0
};

// N <= BitMatrix::kMaxDenseDim.
SyndromeGates syndrome_extraction_gates(const QuantumCode& code);

// 2 stab_nnz.
inline std::size_t total_syndrome_gates(std::size_t stab_nnz) { return 2 * stab_nnz; }

}  // namespace qppc
