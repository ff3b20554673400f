#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>

namespace coarsemap::sim {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Largest singular value. Hermitian and anti-Hermitian inputs use their
/// eigenvalues; other inputs up to dimension 64 use a full SVD, larger ones
/// power iteration on M^dagger M (tolerance 1e-10, at most 10000 steps).
double operator_norm(const CMatrix& m);

/// Maximizer of |tr(K a)| over the operator-norm unit ball: for K = U S V^*
/// the optimum is a = V U^* with value sum(S).
struct TraceNormArgmax {
  double value;
  CMatrix a;
};
TraceNormArgmax trace_norm_argmax(const CMatrix& k);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with the phase fix).
CMatrix haar_unitary(Eigen::Index dim, std::mt19937_64& rng);

bool is_unitary(const CMatrix& u, double tol = 1e-10);

/// Deterministic generator from a base seed and a list of integer tags.
std::mt19937_64 derived_rng(std::uint64_t seed, std::span<const std::uint64_t> tags);

/// 64-bit FNV-1a, stable across platforms; used to seed per-pair streams
/// from site labels.
std::uint64_t stable_hash(const std::string& s);

}  // namespace coarsemap::sim
