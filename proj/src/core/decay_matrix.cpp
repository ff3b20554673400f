#include "coarsemap/decay_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "coarsemap/error.hpp"

namespace coarsemap {

namespace {

std::string cell(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "entry (" << i << ", " << j << ")";
  return os.str();
}

}  // namespace

DecayMatrix build_decay_matrix(std::span<const double> raw, const SiteSet& sites, bool symmetrize) {
  const std::size_t n = sites.size();
  if (raw.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "table size is not n x n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = raw[i * n + j];
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, cell(i, j) + " is not finite");
      if (v < 0.0) throw Error(ErrorCode::NegativeEntry, cell(i, j) + " is negative");
    }
  }
  std::vector<double> values(raw.begin(), raw.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = raw[i * n + j];
      const double b = raw[j * n + i];
      if (!symmetrize && std::abs(a - b) > 1e-12) {
        throw Error(ErrorCode::AsymmetricInput, cell(i, j) + " differs from its transpose");
      }
      const double v = symmetrize ? std::max(a, b) : a;
      values[i * n + j] = v;
      values[j * n + i] = v;
    }
  }
  return DecayMatrix(sites, std::move(values));
}

DecayMatrix build_decay_matrix(const std::vector<std::vector<double>>& raw, const SiteSet& sites, bool symmetrize) {
  const std::size_t n = sites.size();
  if (raw.size() != n) throw Error(ErrorCode::DimensionMismatch, "row count differs from site count");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& row : raw) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "row length differs from site count");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return build_decay_matrix(flat, sites, symmetrize);
}

double DecayMatrix::max_off_diagonal() const {
  double best = 0.0;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, (*this)(i, j));
  return best;
}

DecayMatrix DecayMatrix::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values[perm[i] * n + perm[j]] = values_[i * n + j];
  return DecayMatrix(sites_.permuted(perm), std::move(values));
}

double sup_distance(const DecayMatrix& f, const DecayMatrix& g) {
  require_same_sites(f.sites(), g.sites());
  double best = 0.0;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, std::abs(f(i, j) - g(i, j)));
  return best;
}

Filtration::Filtration(const DecayMatrix& matrix) : matrix_(matrix) {
  const std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix(i, j) > 0.0) thresholds_.push_back(matrix(i, j));
  std::sort(thresholds_.begin(), thresholds_.end(), std::greater<>());
  thresholds_.erase(std::unique(thresholds_.begin(), thresholds_.end()), thresholds_.end());
}

}  // namespace coarsemap
