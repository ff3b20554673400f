#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "coarsemap/sim/linalg.hpp"

namespace coarsemap::sim::detail {

/// offsets[i] = sum_q bit_q(i) << positions[q], for all 2^k local indices.
inline std::vector<std::uint64_t> scatter_offsets(std::span<const unsigned> positions) {
  const std::size_t k = positions.size();
  std::vector<std::uint64_t> out(std::size_t{1} << k, 0);
  for (std::size_t i = 1; i < out.size(); ++i) {
    const unsigned q = static_cast<unsigned>(std::countr_zero(i));
    out[i] = out[i & (i - 1)] | (std::uint64_t{1} << positions[q]);
  }
  return out;
}

/// Enumerates the 2^m configurations of m bit positions in counter order
/// (counter bit q <-> positions[q]), via two half tables.
class BitEnumerator {
 public:
  explicit BitEnumerator(std::span<const unsigned> positions) {
    const std::size_t m = positions.size();
    low_bits_ = static_cast<unsigned>(m / 2);
    low_ = scatter_offsets(positions.first(low_bits_));
    high_ = scatter_offsets(positions.subspan(low_bits_));
    count_ = std::uint64_t{1} << m;
  }
  std::uint64_t count() const { return count_; }
  std::uint64_t operator[](std::uint64_t c) const {
    return low_[c & ((std::uint64_t{1} << low_bits_) - 1)] | high_[c >> low_bits_];
  }

 private:
  unsigned low_bits_ = 0;
  std::vector<std::uint64_t> low_, high_;
  std::uint64_t count_ = 1;
};

/// m <- G m where G acts on the local row bits `positions` (G index bit q <->
/// positions[q]) and as the identity elsewhere.
inline void apply_left(CMatrix& m, const CMatrix& g, std::span<const unsigned> positions) {
  const auto offs = scatter_offsets(positions);
  std::uint64_t mask = 0;
  for (unsigned p : positions) mask |= std::uint64_t{1} << p;
  const Eigen::Index k = static_cast<Eigen::Index>(offs.size());
  CVector in(k), out(k);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(m.rows()); ++base) {
      if (base & mask) continue;
      for (Eigen::Index i = 0; i < k; ++i) in(i) = m(static_cast<Eigen::Index>(base | offs[i]), col);
      out.noalias() = g * in;
      for (Eigen::Index i = 0; i < k; ++i) m(static_cast<Eigen::Index>(base | offs[i]), col) = out(i);
    }
  }
}

/// m <- m G with G acting on the local column bits `positions`.
inline void apply_right(CMatrix& m, const CMatrix& g, std::span<const unsigned> positions) {
  CMatrix t = m.transpose();
  apply_left(t, g.transpose(), positions);
  m = t.transpose();
}

/// v <- G v on the given bits of a state vector.
inline void apply_to_vector(CVector& v, const CMatrix& g, std::span<const unsigned> positions) {
  const auto offs = scatter_offsets(positions);
  std::uint64_t mask = 0;
  for (unsigned p : positions) mask |= std::uint64_t{1} << p;
  const Eigen::Index k = static_cast<Eigen::Index>(offs.size());
  CVector in(k), out(k);
  for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(v.size()); ++base) {
    if (base & mask) continue;
    for (Eigen::Index i = 0; i < k; ++i) in(i) = v(static_cast<Eigen::Index>(base | offs[i]));
    out.noalias() = g * in;
    for (Eigen::Index i = 0; i < k; ++i) v(static_cast<Eigen::Index>(base | offs[i])) = out(i);
  }
}

}  // namespace coarsemap::sim::detail
