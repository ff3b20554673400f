#include "coarsemap/sim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "coarsemap/error.hpp"

namespace coarsemap::sim {

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.isApprox(m.adjoint(), 1e-14)) {
    const CMatrix h = 0.5 * (m + m.adjoint());
    return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().maxCoeff();
  }
  if (m.isApprox(-m.adjoint(), 1e-14)) {
    const CMatrix h = cplx(0.0, 0.5) * (m - m.adjoint());
    return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().maxCoeff();
  }
  if (m.rows() <= 64 && m.cols() <= 64) {
    return Eigen::JacobiSVD<CMatrix>(m).singularValues()(0);
  }
  const CMatrix g = m.adjoint() * m;
  CVector v = CVector::Ones(g.cols()) / std::sqrt(static_cast<double>(g.cols()));
  double lambda = 0.0;
  for (int it = 0; it < 10000; ++it) {
    CVector w = g * v;
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    if (std::abs(next - lambda) <= 1e-10 * std::max(1.0, next)) return std::sqrt(next);
    lambda = next;
  }
  throw Error(ErrorCode::NonConvergence, "power iteration did not converge");
}

TraceNormArgmax trace_norm_argmax(const CMatrix& k) {
  Eigen::JacobiSVD<CMatrix> svd(k, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.singularValues().sum(), svd.matrixV() * svd.matrixU().adjoint()};
}

CMatrix haar_unitary(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = cplx(normal(rng), normal(rng));
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return ((u.adjoint() * u) - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

std::mt19937_64 derived_rng(std::uint64_t seed, std::span<const std::uint64_t> tags) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (std::uint64_t t : tags) {
    words.push_back(static_cast<std::uint32_t>(t));
    words.push_back(static_cast<std::uint32_t>(t >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace coarsemap::sim
