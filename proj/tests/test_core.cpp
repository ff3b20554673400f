#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>

#include "coarsemap/closure.hpp"
#include "coarsemap/compare.hpp"
#include "coarsemap/error.hpp"
#include "coarsemap/growth.hpp"
#include "coarsemap/path_metric.hpp"
#include "coarsemap/profile.hpp"
#include "coarsemap/regression.hpp"
#include "coarsemap/relation.hpp"
#include "helpers.hpp"

using namespace coarsemap;
using coarsemap::testing::expect_code;
using coarsemap::testing::path_decay;
using coarsemap::testing::random_matrix;
using coarsemap::testing::random_permutation;

namespace {

Relation path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Relation::from_edges(SiteSet::range(n), edges);
}

Relation within_distance(std::size_t n, std::size_t k) {
  Relation r(SiteSet::range(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i > j ? i - j : j - i) <= k) r.insert(i, j);
  return r;
}

Relation random_relation(std::size_t n, double p, std::mt19937_64& rng, bool symmetric) {
  std::bernoulli_distribution coin(p);
  Relation r(SiteSet::range(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric && j < i) continue;
      if (coin(rng)) {
        r.insert(i, j);
        if (symmetric) r.insert(j, i);
      }
    }
  return r;
}

// Independent component labelling by union-find.
std::vector<std::size_t> components_uf(const Relation& e) {
  const std::size_t n = e.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (e.contains(i, j)) parent[find(i)] = find(j);
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = find(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- site sets

TEST(SiteSet, Validates) {
  expect_code(ErrorCode::InvalidArgument, [] { SiteSet(std::vector<std::string>{}); });
  expect_code(ErrorCode::InvalidArgument, [] { SiteSet({"a", "a"}); });
  expect_code(ErrorCode::InvalidArgument, [] { SiteSet({"a", "b"}, std::vector<Coord>{{0}}); });
  const auto g = SiteSet::grid(3, 2);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.id(4), "1_1");
  EXPECT_EQ(g.coords()[4], (Coord{1, 1}));
}

TEST(SiteSet, PermutationMovesLabels) {
  std::mt19937_64 rng(3);
  const auto s = SiteSet::range(12);
  const auto perm = random_permutation(12, rng);
  const auto p = s.permuted(perm);
  for (std::size_t i = 0; i < 12; ++i) EXPECT_EQ(p.id(perm[i]), s.id(i));
  EXPECT_EQ(p.permuted(invert_permutation(perm)), s);
}

// ---------------------------------------------------------------- decay matrices

TEST(DecayMatrix, ZerosHaveNoThresholds) {
  const auto f = build_decay_matrix(std::vector<double>(4, 0.0), SiteSet::range(2), false);
  EXPECT_TRUE(Filtration(f).thresholds().empty());
}

TEST(DecayMatrix, MaxSymmetrizes) {
  const auto f = build_decay_matrix(std::vector<double>{0, 0.3, 0.1, 0}, SiteSet::range(2), true);
  EXPECT_EQ(f(0, 1), 0.3);
  EXPECT_EQ(f(1, 0), 0.3);
}

TEST(DecayMatrix, ThresholdsAreDistinctDecreasing) {
  const std::vector<std::vector<double>> raw{{1, 0.9, 0.5}, {0.9, 1, 0.1}, {0.5, 0.1, 1}};
  const auto f = build_decay_matrix(raw, SiteSet::range(3), false);
  EXPECT_EQ(Filtration(f).thresholds(), (std::vector<double>{0.9, 0.5, 0.1}));
}

TEST(DecayMatrix, RejectsBadInput) {
  const auto s = SiteSet::range(2);
  expect_code(ErrorCode::NegativeEntry, [&] { build_decay_matrix(std::vector<double>{0, -1, -1, 0}, s, true); });
  expect_code(ErrorCode::NonFinite, [&] { build_decay_matrix(std::vector<double>{0, NAN, 0, 0}, s, true); });
  expect_code(ErrorCode::AsymmetricInput, [&] { build_decay_matrix(std::vector<double>{0, 0.3, 0.1, 0}, s, false); });
  EXPECT_NO_THROW(build_decay_matrix(std::vector<double>{0, 0.3, 0.3 + 1e-13, 0}, s, false));
  expect_code(ErrorCode::DimensionMismatch, [&] { build_decay_matrix(std::vector<double>{0, 1, 1}, s, true); });
}

// ---------------------------------------------------------------- epsilon graphs

TEST(EpsilonGraph, ZeroMatrixIsDiagonal) {
  const auto f = tabulate_decay(SiteSet::range(6), [](auto, auto) { return 0.0; });
  const auto e = epsilon_graph(f, 1e-9);
  EXPECT_EQ(e, Relation::diagonal(f.sites()));
}

TEST(EpsilonGraph, AllOnesIsComplete) {
  const auto f = tabulate_decay(SiteSet::range(6), [](auto, auto) { return 1.0; });
  EXPECT_EQ(epsilon_graph(f, 1.0), Relation::complete(f.sites()));
}

TEST(EpsilonGraph, GeometricDecayGivesPath) {
  const auto f = path_decay(8, [](double d) { return std::pow(2.0, -d); });
  EXPECT_EQ(epsilon_graph(f, 0.5), unite(path_graph(8), inverse(path_graph(8))));
  expect_code(ErrorCode::NonPositiveEpsilon, [&] { epsilon_graph(f, 0.0); });
}

TEST(EpsilonGraph, FiltrationIsNested) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_matrix(24, rng);
    const auto th = Filtration(f).thresholds();
    for (std::size_t k = 1; k < th.size(); k += 7) {
      const auto hi = epsilon_graph(f, th[k - 1]);
      const auto lo = epsilon_graph(f, th[k]);
      ASSERT_TRUE(hi.subset_of(lo));
      const auto dh = path_metric(hi);
      const auto dl = path_metric(lo);
      for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = 0; j < 24; ++j)
          if (reachable(dh(i, j))) ASSERT_LE(dl(i, j), dh(i, j));
    }
  }
}

// ---------------------------------------------------------------- path metrics

TEST(PathMetric, Examples) {
  EXPECT_EQ(path_metric(path_graph(5))(0, 4), 4);
  const auto c = path_metric(Relation::complete(SiteSet::range(5)));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(c(i, j), i == j ? 0 : 1);
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {2, 3}};
  const auto two = path_metric(Relation::from_edges(SiteSet::range(4), edges));
  EXPECT_EQ(two(0, 2), kUnreachable);
  EXPECT_EQ(two(0, 1), 1);
}

TEST(PathMetric, MetricAxiomsOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 40;
    const auto e = random_relation(n, 0.05, rng, trial % 2 == 0);
    const auto d = path_metric(e);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(d(i, i), 0);
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(d(i, j), d(j, i));
        ASSERT_EQ(d(i, j) == 1, i != j && (e.contains(i, j) || e.contains(j, i)));
        for (std::size_t k = 0; k < n; ++k) {
          if (reachable(d(i, j)) && reachable(d(j, k))) {
            ASSERT_TRUE(reachable(d(i, k)));
            ASSERT_LE(d(i, k), d(i, j) + d(j, k));
          }
        }
      }
    }
  }
}

TEST(PathMetric, FromTableValidates) {
  const auto s = SiteSet::range(2);
  expect_code(ErrorCode::AsymmetricInput, [&] { PathMetric::from_table(s, {0, 1, 2, 0}); });
  expect_code(ErrorCode::InvalidArgument, [&] { PathMetric::from_table(s, {0, -2, -2, 0}); });
  expect_code(ErrorCode::InvalidArgument, [&] { PathMetric::from_table(s, {1, 1, 1, 0}); });
  EXPECT_EQ(PathMetric::from_table(s, {0, 2, 2, 0})(0, 1), 2);
}

// ---------------------------------------------------------------- relation algebra

TEST(Relation, AlgebraLaws) {
  std::mt19937_64 rng(17);
  const std::size_t n = 14;
  const auto diag = Relation::diagonal(SiteSet::range(n));
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_relation(n, 0.15, rng, false);
    const auto b = random_relation(n, 0.15, rng, false);
    const auto c = random_relation(n, 0.15, rng, false);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(unite(a, b), unite(b, a));
    ASSERT_EQ(unite(a, a), a);
    ASSERT_EQ(inverse(compose(a, b)), compose(inverse(b), inverse(a)));
    ASSERT_EQ(compose(a, diag), a);
    ASSERT_EQ(compose(diag, a), a);
  }
}

TEST(Relation, Examples) {
  const auto p = unite(path_graph(6), inverse(path_graph(6)));
  EXPECT_EQ(compose(p, p), within_distance(6, 2));
  EXPECT_EQ(inverse(p), p);
  EXPECT_EQ(compose(p, Relation::diagonal(p.sites())), p);
  expect_code(ErrorCode::SiteSetMismatch, [&] { compose(p, Relation::diagonal(SiteSet::range(5))); });
}

TEST(InGenerated, Examples) {
  const auto gen = path_graph(10);
  const std::vector<Relation> gens{gen};
  EXPECT_TRUE(in_generated(within_distance(10, 3), gens, 3));
  EXPECT_FALSE(in_generated(within_distance(10, 3), gens, 2));
  Relation sub(gen.sites());
  sub.insert(3, 4);
  EXPECT_TRUE(in_generated(sub, gens, 1));
  expect_code(ErrorCode::InvalidArgument, [&] { in_generated(sub, gens, 0); });
}

TEST(InGenerated, PathGeneratorMatchesDistanceBound) {
  std::mt19937_64 rng(23);
  for (std::size_t n : {8u, 16u, 32u}) {
    const std::vector<Relation> gens{path_graph(n)};
    std::uniform_int_distribution<std::size_t> site(0, n - 1);
    for (int trial = 0; trial < 12; ++trial) {
      Relation e(SiteSet::range(n));
      std::size_t reach = 0;
      for (int k = 0; k < 3; ++k) {
        const std::size_t i = site(rng), j = site(rng);
        e.insert(i, j);
        reach = std::max(reach, i > j ? i - j : j - i);
      }
      bool previous = false;
      for (std::size_t k = 1; k <= n; ++k) {
        const bool now = in_generated(e, gens, k);
        ASSERT_EQ(now, e.subset_of(within_distance(n, k)));
        ASSERT_EQ(now, reach <= k);
        ASSERT_TRUE(now || !previous);
        previous = now;
      }
    }
  }
}

// ---------------------------------------------------------------- growth

TEST(Growth, Examples) {
  EXPECT_EQ(growth_curve(path_metric(path_graph(21)), 3).gamma[3], 7u);
  EXPECT_EQ(growth_curve(path_metric(Relation::complete(SiteSet::range(9))), 1).gamma[1], 9u);
  // brute-force ball count on the 8 x 8 grid using coordinates only
  const auto s = SiteSet::grid(8, 8);
  std::size_t best = 0;
  for (const auto& c : s.coords()) {
    std::size_t count = 0;
    for (const auto& q : s.coords()) count += (std::abs(c[0] - q[0]) + std::abs(c[1] - q[1]) <= 2);
    best = std::max(best, count);
  }
  EXPECT_EQ(best, 13u);
  EXPECT_EQ(growth_curve(path_metric(lattice_graph(s)), 2).gamma[2], best);
  expect_code(ErrorCode::InvalidArgument, [&] { growth_curve(path_metric(path_graph(3)), 0); });
}

TEST(Growth, PathCurveIsExact) {
  for (std::size_t n : {1u, 2u, 7u, 30u}) {
    const auto g = growth_curve(path_metric(path_graph(n)), 40);
    for (std::size_t r = 0; r <= 40; ++r) ASSERT_EQ(g.gamma[r], std::min<std::size_t>(2 * r + 1, n));
  }
}

TEST(Growth, MonotoneAndBounded) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = path_metric(random_relation(30, 0.06, rng, true));
    const auto g = growth_curve(d, 12);
    ASSERT_EQ(g.gamma[0], 1u);
    for (std::size_t r = 1; r < g.gamma.size(); ++r) {
      ASSERT_GE(g.gamma[r], g.gamma[r - 1]);
      ASSERT_LE(g.gamma[r], 30u);
    }
  }
}

TEST(Asdim, PathGridComplete) {
  const auto dp = path_metric(path_graph(128));
  const auto path = asdim_bound(growth_curve(dp, default_r_max(dp)));
  EXPECT_NEAR(path.fit.slope, 1.0, 0.1);
  EXPECT_EQ(path.k_hat, 1);

  const auto dg = path_metric(lattice_graph(SiteSet::grid(16, 16)));
  const auto grid = asdim_bound(growth_curve(dg, default_r_max(dg)));
  EXPECT_GE(grid.fit.slope, 1.8);
  EXPECT_LE(grid.fit.slope, 2.2);
  EXPECT_EQ(grid.k_hat, 2);

  const auto dc = path_metric(Relation::complete(SiteSet::range(20)));
  const auto complete = asdim_bound(growth_curve(dc, default_r_max(dc)));
  EXPECT_NEAR(complete.fit.slope, 0.0, 1e-12);
  EXPECT_EQ(complete.k_hat, 0);
}

TEST(Asdim, RequiresFourRadii) {
  const auto g = growth_curve(path_metric(path_graph(10)), 5);
  expect_code(ErrorCode::InsufficientData, [&] { asdim_bound(g); });
  expect_code(ErrorCode::InvalidArgument, [&] { asdim_bound(g, {Window{0.6, 0.2}}); });
}

TEST(Asdim, ObstructionIsOneSided) {
  const auto dp = path_metric(path_graph(128));
  const auto dg = path_metric(lattice_graph(SiteSet::grid(16, 16)));
  const auto gp = growth_curve(dp, default_r_max(dp));
  const auto gg = growth_curve(dg, default_r_max(dg));
  EXPECT_TRUE(growth_obstruction(gp, gg));
  EXPECT_FALSE(growth_obstruction(gp, gp));
  EXPECT_FALSE(growth_obstruction(gg, gp));
}

// ---------------------------------------------------------------- comparisons

TEST(Domination, Examples) {
  const auto d = path_metric(path_graph(10));
  for (const auto& step : monotone_domination(d, d)) EXPECT_EQ(step.rho, step.t);

  std::vector<Distance> doubled(d.table());
  for (auto& v : doubled) v *= 2;
  const auto d2 = PathMetric::from_table(d.sites(), doubled);
  for (const auto& step : monotone_domination(d, d2)) EXPECT_EQ(step.rho, 2 * step.t);

  const auto dc = path_metric(Relation::complete(d.sites()));
  const auto steps = monotone_domination(dc, d);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[1].t, 1);
  EXPECT_EQ(steps[1].rho, 9);
}

TEST(Domination, BoundsEveryPair) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto d1 = path_metric(random_relation(25, 0.08, rng, true));
    const auto d2 = path_metric(random_relation(25, 0.08, rng, true));
    const auto steps = monotone_domination(d1, d2);
    for (std::size_t k = 1; k < steps.size(); ++k) {
      ASSERT_LT(steps[k - 1].t, steps[k].t);
      if (reachable(steps[k].rho)) ASSERT_TRUE(reachable(steps[k - 1].rho) && steps[k - 1].rho <= steps[k].rho);
    }
    for (std::size_t i = 0; i < 25; ++i)
      for (std::size_t j = 0; j < 25; ++j) {
        if (!reachable(d1(i, j))) continue;
        const auto it = std::find_if(steps.begin(), steps.end(), [&](auto s) { return s.t == d1(i, j); });
        ASSERT_NE(it, steps.end());
        if (reachable(it->rho)) ASSERT_TRUE(reachable(d2(i, j)) && d2(i, j) <= it->rho);
      }
  }
}

TEST(QuasiIsometry, Examples) {
  const auto d = path_metric(path_graph(12));
  const auto same = quasi_isometry_fit(d, d, 1);
  EXPECT_EQ(same.L, 1.0);
  EXPECT_EQ(same.C, 0.0);
  EXPECT_EQ(same.violation_fraction, 0.0);
  EXPECT_EQ(same.direction, QiDirection::Both);

  const auto f = path_decay(40, [](double t) { return std::pow(2.0, -t); });
  const auto coarse = path_metric(epsilon_graph(f, 0.5));
  const auto fine = path_metric(epsilon_graph(f, 0.2));
  const auto rep = quasi_isometry_fit(fine, coarse, 1);
  EXPECT_LE(rep.L, 2.0);
  EXPECT_EQ(rep.violation_fraction, 0.0);

  for (std::size_t n : {10u, 20u, 40u}) {
    const auto dp = path_metric(path_graph(n));
    const auto dc = path_metric(Relation::complete(dp.sites()));
    EXPECT_EQ(quasi_isometry_fit(dp, dc, 1).L, static_cast<double>(n - 1));
  }
  expect_code(ErrorCode::NoPairsBeyondR0, [&] { quasi_isometry_fit(d, d, 100); });
}

TEST(QuasiIsometry, GivenConstantsAndDirection) {
  const auto dp = path_metric(path_graph(10));
  const auto dc = path_metric(Relation::complete(dp.sites()));
  const auto rep = quasi_isometry_fit(dp, dc, 1, QiConstants{1.0, 0.0});
  // d_complete <= d_path always holds, the lower bound fails for d_path >= 2
  EXPECT_EQ(rep.direction, QiDirection::ForwardOnly);
  EXPECT_NEAR(rep.violation_fraction, 36.0 / 45.0, 1e-15);

  const std::vector<std::pair<std::size_t, std::size_t>> one{{0, 1}};
  const auto split = path_metric(Relation::from_edges(dp.sites(), one));
  const auto cross = quasi_isometry_fit(dp, split, 1);
  EXPECT_EQ(cross.direction, QiDirection::None);
  EXPECT_GT(cross.violation_fraction, 0.0);
  EXPECT_LE(cross.violation_fraction, 1.0);
}

TEST(StableRange, GeometricDecayIsOneInterval) {
  const auto f = path_decay(32, [](double t) { return std::pow(2.0, -t); });
  const auto one = stable_range(f, {0.5, 0.3, 0.15});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].first, 0u);
  EXPECT_EQ(one[0].last, 2u);
  // above the largest entry the graph is the diagonal, which is not
  // comparable to any connected graph
  const auto split = stable_range(f, {0.6, 0.3, 0.15});
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[1].first, 1u);
}

TEST(StableRange, AllOnesAndTwoPlateaus) {
  const auto ones = tabulate_decay(SiteSet::range(8), [](auto, auto) { return 1.0; });
  EXPECT_EQ(stable_range(ones, {1.0, 0.5, 0.1}).size(), 1u);

  const auto plateaus = path_decay(30, [](double t) { return t == 1 ? 0.9 : 0.1; });
  const auto r = stable_range(plateaus, {0.9, 0.5, 0.1});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].eps_hi, 0.9);
  EXPECT_EQ(r[0].eps_lo, 0.5);
  EXPECT_EQ(r[1].eps_hi, 0.1);

  expect_code(ErrorCode::EmptyGrid, [&] { stable_range(ones, {}); });
  expect_code(ErrorCode::InvalidArgument, [&] { stable_range(ones, {0.1, 0.5}); });
}

TEST(Semicontinuity, Examples) {
  std::mt19937_64 rng(37);
  const auto f = random_matrix(20, rng);
  EXPECT_TRUE(semicontinuity_check(f, f, 0.3));
  const auto g = tabulate_decay(f.sites(), [&](auto i, auto j) { return f(i, j) + 0.05; });
  EXPECT_TRUE(semicontinuity_check(f, g, 0.5));
  expect_code(ErrorCode::EpsilonTooSmall, [&] { semicontinuity_check(f, g, 0.05); });
  std::uniform_real_distribution<double> noise(-0.05, 0.05);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = tabulate_decay(f.sites(), [&](auto i, auto j) { return std::max(0.0, f(i, j) + noise(rng)); });
    ASSERT_TRUE(semicontinuity_check(f, h, 0.2));
  }
}

TEST(Sandwich, MatrixLevelInclusions) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_matrix(16, rng);
    const double scale = 0.1 * unit(rng);
    const auto g = tabulate_decay(f.sites(), [&](auto i, auto j) {
      return std::max(0.0, f(i, j) + scale * (2.0 * unit(rng) - 1.0));
    });
    const double delta = sup_distance(f, g);
    const double eps = delta + 0.05 + 0.8 * unit(rng);
    const auto mid = epsilon_graph(g, eps);
    ASSERT_TRUE(epsilon_graph(f, std::nextafter(eps + delta, 2.0)).subset_of(mid));
    ASSERT_TRUE(mid.subset_of(epsilon_graph(f, std::nextafter(eps - delta, 0.0))));
  }
}

// ---------------------------------------------------------------- closure

TEST(Closure, PointDecayReachesGeneratedStructure) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_matrix(12, rng);
    const double eps = 0.75;
    const auto res = higher_order_closure(pointwise_set_decay(f), Relation::diagonal(f.sites()), eps, 50);
    ASSERT_TRUE(res.converged);
    const auto labels = components_uf(epsilon_graph(f, eps));
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) ASSERT_EQ(res.relation.contains(i, j), labels[i] == labels[j]);
  }
}

TEST(Closure, ZeroDecayKeepsSeed) {
  const auto e0 = unite(path_graph(9), inverse(path_graph(9)));
  const auto zero = [](std::span<const std::size_t>, std::span<const std::size_t>) { return 0.0; };
  const auto res = higher_order_closure(zero, e0, 0.1, 10);
  EXPECT_TRUE(res.converged);
  EXPECT_EQ(res.relation, e0);
  EXPECT_EQ(res.iterations, 1u);
}

TEST(Closure, MonotoneAndIdempotent) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_matrix(12, rng);
    const auto ft = pointwise_set_decay(f);
    const auto diag = Relation::diagonal(f.sites());
    const auto hi = higher_order_closure(ft, diag, 0.85, 50).relation;
    const auto lo = higher_order_closure(ft, diag, 0.7, 50).relation;
    ASSERT_TRUE(hi.subset_of(lo));
    const auto again = higher_order_closure(ft, lo, 0.7, 50);
    ASSERT_EQ(again.relation, lo);
    ASSERT_EQ(again.iterations, 1u);
  }
}

TEST(Closure, IterationCapReported) {
  const auto f = path_decay(10, [](double t) { return t == 1 ? 1.0 : 0.0; });
  const auto res = higher_order_closure(pointwise_set_decay(f), Relation::diagonal(f.sites()), 0.5, 1);
  EXPECT_FALSE(res.converged);
  EXPECT_EQ(res.iterations, 1u);
}

// ---------------------------------------------------------------- profiles

TEST(ConnectedProfile, Examples) {
  const auto diag = connected_profile(Relation::diagonal(SiteSet::range(6)));
  EXPECT_EQ(diag.sizes(), std::vector<std::size_t>(6, 1));
  EXPECT_EQ(diag.dust_sites, 6u);

  const auto path = connected_profile(path_graph(10));
  EXPECT_EQ(path.sizes(), std::vector<std::size_t>{10});
  EXPECT_EQ(path.dust_sites, 0u);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < 8; ++i) edges.emplace_back(i, i + 1);
  const auto isolated = connected_profile(Relation::from_edges(SiteSet::range(10), edges));
  EXPECT_EQ(isolated.sizes(), (std::vector<std::size_t>{8, 1, 1}));
  EXPECT_EQ(isolated.dust_sites, 2u);
  EXPECT_EQ(default_dust_cutoff(500), 10u);
}

TEST(CoarseProfile, DiameterOnlyWhenConnected) {
  const auto f = path_decay(20, [](double t) { return std::pow(2.0, -t); });
  const auto p = coarse_profile(f, 0.5);
  ASSERT_TRUE(p.diameter.has_value());
  EXPECT_EQ(*p.diameter, 19);
  const auto empty = coarse_profile(f, 0.9);
  EXPECT_FALSE(empty.diameter.has_value());
  EXPECT_EQ(empty.connected.components.size(), 20u);
}

// ---------------------------------------------------------------- equivariance

TEST(Equivariance, CorePipelineCommutesWithRelabelling) {
  std::mt19937_64 rng(53);
  const auto f = random_matrix(30, rng);
  const double eps = Filtration(f).thresholds()[60];
  const auto e = epsilon_graph(f, eps);
  const auto d = path_metric(e);
  const auto g = growth_curve(d, 10);
  const auto prof = coarse_profile(f, eps);
  const auto fine = path_metric(epsilon_graph(f, eps * 0.8));
  const auto qi = quasi_isometry_fit(d, fine, 1);
  const auto closure = higher_order_closure(pointwise_set_decay(f), Relation::diagonal(f.sites()), eps, 50);
  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = random_permutation(30, rng);
    const auto pf = f.permuted(perm);
    ASSERT_EQ(epsilon_graph(pf, eps), e.permuted(perm));
    const auto pd = path_metric(epsilon_graph(pf, eps));
    ASSERT_EQ(pd, d.permuted(perm));
    ASSERT_EQ(growth_curve(pd, 10), g);
    const auto pprof = coarse_profile(pf, eps);
    ASSERT_EQ(pprof.connected.sizes(), prof.connected.sizes());
    for (std::size_t c = 0; c < prof.connected.components.size(); ++c) {
      auto moved = prof.connected.components[c].sites;
      for (auto& s : moved) s = perm[s];
      std::sort(moved.begin(), moved.end());
      ASSERT_EQ(pprof.connected.components[c].sites, moved);
    }
    ASSERT_EQ(pprof.diameter, prof.diameter);
    ASSERT_EQ(pprof.asdim.has_value(), prof.asdim.has_value());
    if (prof.asdim) ASSERT_EQ(pprof.asdim->fit.slope, prof.asdim->fit.slope);
    const auto pqi = quasi_isometry_fit(pd, path_metric(epsilon_graph(pf, eps * 0.8)), 1);
    ASSERT_EQ(pqi.L, qi.L);
    ASSERT_EQ(pqi.C, qi.C);
    ASSERT_EQ(pqi.violation_fraction, qi.violation_fraction);
    const auto pc = higher_order_closure(pointwise_set_decay(pf), Relation::diagonal(pf.sites()), eps, 50);
    ASSERT_EQ(pc.relation, closure.relation.permuted(perm));
  }
}

// ---------------------------------------------------------------- regression

TEST(Regression, ExactLineAndErrors) {
  const auto fit = fit_line({{0, 1}, {1, 3}, {2, 5}, {3, 7}});
  EXPECT_NEAR(fit.slope, 2.0, 1e-15);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-15);
  EXPECT_NEAR(fit.slope_stderr, 0.0, 1e-15);
  expect_code(ErrorCode::InsufficientData, [] { fit_line({{0, 1}, {1, 2}}); });
  expect_code(ErrorCode::InsufficientData, [] { fit_line({{1, 1}, {1, 2}, {1, 3}}); });
  EXPECT_NEAR(quadratic_curvature({{0, 0}, {1, 1}, {2, 4}, {3, 9}}), 9.0, 1e-12);
}
