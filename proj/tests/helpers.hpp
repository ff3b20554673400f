#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/error.hpp"

namespace coarsemap::testing {

template <class Fn>
void expect_code(ErrorCode code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// f(i, j) = fn(|i - j|) on sites "0" .. "n-1".
template <class Fn>
DecayMatrix path_decay(std::size_t n, Fn&& fn) {
  return tabulate_decay(SiteSet::range(n), [&](std::size_t i, std::size_t j) {
    return fn(static_cast<double>(i > j ? i - j : j - i));
  });
}

inline DecayMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> raw(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) raw[i * n + j] = raw[j * n + i] = unit(rng);
  return build_decay_matrix(raw, SiteSet::range(n), false);
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace coarsemap::testing
