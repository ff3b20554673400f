#include "coarsemap/sim/pauli.hpp"

#include <bit>

namespace coarsemap::sim {

std::string_view to_string(Pauli p) {
  switch (p) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

CMatrix pauli_matrix(Pauli p) {
  CMatrix m(2, 2);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Pauli PauliWord::at(unsigned q) const {
  const bool bx = (x >> q) & 1u;
  const bool bz = (z >> q) & 1u;
  if (bx) return bz ? Pauli::Y : Pauli::X;
  return bz ? Pauli::Z : Pauli::I;
}

cplx PauliWord::phase(std::uint32_t i) const {
  // Y|b> = i (-1)^b |1-b>, Z|b> = (-1)^b |b>
  static constexpr cplx kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int sign = std::popcount(i & z) & 1;
  const cplx p = kI[std::popcount(x & z) & 3];
  return sign ? -p : p;
}

PauliWord pauli_word(Pauli p, unsigned qubit) {
  const std::uint32_t bit = 1u << qubit;
  switch (p) {
    case Pauli::I: return {0, 0};
    case Pauli::X: return {bit, 0};
    case Pauli::Y: return {bit, bit};
    case Pauli::Z: return {0, bit};
  }
  return {};
}

CMatrix pauli_word_matrix(PauliWord w, unsigned qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(dim); ++i) m(i ^ w.x, i) = w.phase(i);
  return m;
}

cplx pauli_expectation(const CMatrix& rho, PauliWord w) {
  // tr(rho W) = sum_i <i|rho W|i> = sum_i phase(i) rho(i, i ^ x)
  cplx acc = 0.0;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(rho.rows()); ++i) acc += w.phase(i) * rho(i, i ^ w.x);
  return acc;
}

}  // namespace coarsemap::sim
