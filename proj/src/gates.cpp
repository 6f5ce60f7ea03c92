#include "qppc/gates.hpp"

#include "qppc/bitmatrix.hpp"

namespace qppc {

std::size_t encoder_extra_gates(const Precoder& t) { return t.off_diag().size(); }

SyndromeGates syndrome_extraction_gates(const QuantumCode& code) {
  const BitMatrix g = BitMatrix::polar(code.n_exp());
  const auto& f = code.spec().frozen_set();
  // ||F^T T^T G^T||_0 = ||G T F||_0.
  const std::size_t with_t = nnz(project_columns(mat_mul(g, code.precoder().dense()), f));
  const std::size_t without_t = nnz(project_columns(g, f));
  SyndromeGates out;
  out.stab_nnz = with_t;
  out.total_gates = total_syndrome_gates(with_t);
  out.delta_vs_unprecoded = static_cast<std::int64_t>(with_t) - static_cast<std::int64_t>(without_t);
  return out;
}

}  // namespace qppc
