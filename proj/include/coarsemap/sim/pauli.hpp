#pragma once

#include <cstdint>
#include <string_view>

#include "coarsemap/sim/linalg.hpp"

namespace coarsemap::sim {

enum class Pauli { I, X, Y, Z };
inline constexpr Pauli kNontrivialPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};

std::string_view to_string(Pauli p);
CMatrix pauli_matrix(Pauli p);

/// Tensor product of single-qubit Paulis on k local qubits, encoded by bit
/// masks: qubit q carries X^{x_q} Z^{z_q} up to the phase that makes XZ into
/// Y. Local qubit q is bit q of the basis index.
struct PauliWord {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  bool is_identity() const { return x == 0 && z == 0; }
  Pauli at(unsigned q) const;
  /// W|i> = phase(i) |i ^ x>.
  cplx phase(std::uint32_t i) const;
};

PauliWord pauli_word(Pauli p, unsigned qubit);
CMatrix pauli_word_matrix(PauliWord w, unsigned qubits);

/// tr(rho W) for a density matrix on the word's qubits.
cplx pauli_expectation(const CMatrix& rho, PauliWord w);

}  // namespace coarsemap::sim
