#include "bergman/cpoly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace bergman;

namespace {

// Expands prod (z - r_i) with leading coefficient lead.
CPoly from_roots(const std::vector<cplx>& rs, cplx lead = 1.0) {
  std::vector<cplx> c{lead};
  for (const cplx r : rs) {
    std::vector<cplx> next(c.size() + 1, cplx{});
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = next;
  }
  return CPoly(c);
}

bool contains(const std::vector<cplx>& zs, cplx z, double tol) {
  return std::any_of(zs.begin(), zs.end(), [&](cplx w) { return std::abs(w - z) <= tol; });
}

}  // namespace

TEST(CPoly, TrimsTrailingZeros) {
  const CPoly p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading(), cplx(2.0));
  EXPECT_EQ(CPoly({0.0, 0.0}).degree(), -1);
  EXPECT_TRUE(CPoly({0.0}).is_zero());
}

TEST(CPoly, Eval) {
  EXPECT_LT(std::abs(CPoly({1.0, 0.0, 1.0})(cplx(0, 1))), 1e-15);
  EXPECT_EQ(CPoly({1.0})(cplx(5, 2)), cplx(1.0));
  EXPECT_EQ(CPoly({2.0, -3.0, 1.0})(2.0), cplx(0.0));
}

TEST(CPoly, RootsOfSpecExamples) {
  const auto a = roots(CPoly({1.0, 0.0, 1.0}));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(contains(a, cplx(0, 1), 1e-12));
  EXPECT_TRUE(contains(a, cplx(0, -1), 1e-12));

  const double s = 1.0 / std::sqrt(2.0);  // 2t^2 = -1
  const auto b = roots(CPoly({1.0, 0.0, 2.0}));
  EXPECT_TRUE(contains(b, cplx(0, s), 1e-12));
  EXPECT_TRUE(contains(b, cplx(0, -s), 1e-12));

  const auto c = roots(CPoly({2.0, -3.0, 1.0}));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_NEAR(std::abs(c[0] - 1.0), 0.0, 1e-12);  // sorted by modulus
  EXPECT_NEAR(std::abs(c[1] - 2.0), 0.0, 1e-12);
}

TEST(CPoly, RootsWithZeroRootsAndMultiplicity) {
  const auto r = roots(CPoly({0.0, 0.0, 1.0, 1.0}));  // z^2 (1 + z)
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], cplx{});
  EXPECT_EQ(r[1], cplx{});
  EXPECT_NEAR(std::abs(r[2] + 1.0), 0.0, 1e-12);
  const auto d = roots(from_roots({0.5, 0.5, 0.5}));
  for (const cplx z : d) EXPECT_NEAR(std::abs(z - 0.5), 0.0, 1e-4);
}

TEST(CPoly, RootsRecoverPlantedRoots) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<cplx> planted(n);
    for (auto& z : planted) z = {u(rng), u(rng)};
    const auto got = roots(from_roots(planted, cplx(u(rng), 1.0)));
    ASSERT_EQ(static_cast<int>(got.size()), n);
    for (const cplx z : planted) EXPECT_TRUE(contains(got, z, 1e-6)) << "trial " << trial;
  }
}

TEST(CPoly, RootResidualBound) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cplx> c(2 + trial % 8);
    for (auto& x : c) x = {u(rng), u(rng)};
    const CPoly p(c);
    if (p.degree() < 1) continue;
    for (const cplx r : roots(p)) {
      EXPECT_LE(std::abs(p(r)) / std::pow(std::max(1.0, std::abs(r)), p.degree()), 1e-9 * p.scale());
    }
  }
}

TEST(CPoly, RootOrderingIsByModulus) {
  const auto r = roots(from_roots({3.0, cplx(0, 0.5), -1.5}));
  for (std::size_t k = 1; k < r.size(); ++k) EXPECT_LE(std::abs(r[k - 1]), std::abs(r[k]) + 1e-12);
}

TEST(SignVariations, Examples) {
  const std::vector<double> a{1, 3, 9}, b{1, -3, 9}, c{1, 0, -4};
  EXPECT_EQ(sign_variations(a), 0);
  EXPECT_EQ(sign_variations(b), 2);
  EXPECT_EQ(sign_variations(c), 1);
}

TEST(SignVariations, InvariantUnderScalingAndZeroInsertion) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> s(1 + trial % 9);
    for (auto& x : s) x = u(rng);
    const int base = sign_variations(s);
    std::vector<double> scaled = s;
    for (auto& x : scaled) x *= 3.7;
    EXPECT_EQ(sign_variations(scaled), base);
    std::vector<double> padded;
    for (double x : s) {
      padded.push_back(0.0);
      padded.push_back(x);
    }
    EXPECT_EQ(sign_variations(padded), base);
  }
}

TEST(SchurCohn, QuadraticExamples) {
  // 1 + 2t^2: M = (|2|^2 - 1, (4 - 1)^2) = (3, 9), both roots inside.
  const auto a = schur_cohn(CPoly({1.0, 0.0, 2.0}));
  ASSERT_EQ(a.dets.size(), 2u);
  EXPECT_NEAR(a.dets[0], 3.0, 1e-12);
  EXPECT_NEAR(a.dets[1], 9.0, 1e-12);
  EXPECT_EQ(a.variations, 0);
  EXPECT_EQ(a.in_disk_count, 2);

  const auto b = schur_cohn(CPoly({2.0, 0.0, 1.0}));
  EXPECT_LT(b.dets[0], 0.0);
  EXPECT_GT(b.dets[1], 0.0);
  EXPECT_EQ(b.variations, 2);
  EXPECT_EQ(b.in_disk_count, 0);

  EXPECT_TRUE(schur_cohn(CPoly({1.0, 0.0, 1.0})).indeterminate());
}

TEST(SchurCohn, QuadraticDeterminantsMatchClosedForm) {
  // For gamma + beta t + alpha t^2: M1 = |alpha|^2 - |gamma|^2,
  // M2 = M1^2 - |alpha conj(beta) - beta conj(gamma)|^2.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const cplx g(u(rng), u(rng)), b(u(rng), u(rng)), a(u(rng), u(rng));
    const CPoly p{g, b, a};
    const double m1 = std::norm(a) - std::norm(g);
    const double m2 = m1 * m1 - std::norm(a * std::conj(b) - b * std::conj(g));
    const auto r = schur_cohn(p);
    EXPECT_NEAR(r.dets[0], m1, 1e-12);
    EXPECT_NEAR(r.dets[1], m2, 1e-12);
  }
}

TEST(SchurCohn, AgreesWithRootCountOnRandomPolynomials) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int compared = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    std::vector<cplx> c(2 + trial % 8);
    for (auto& x : c) x = {u(rng), u(rng)};
    const CPoly p(c);
    const auto sc = schur_cohn(p);
    const auto direct = count_in_disk(roots(p), 1e-6);
    if (sc.indeterminate() || !direct) continue;
    ++compared;
    EXPECT_EQ(*sc.in_disk_count, *direct) << "trial " << trial;
  }
  EXPECT_GT(compared, 1000);
}

TEST(SchurCohn, InvariantUnderComplexScaling) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<cplx> c(2 + trial % 7);
    for (auto& x : c) x = {u(rng), u(rng)};
    const CPoly p(c);
    const auto base = schur_cohn(p);
    const auto scaled = schur_cohn(p.scaled(cplx(u(rng) * 5.0, 3.0)));
    EXPECT_EQ(base.in_disk_count, scaled.in_disk_count);
  }
}

TEST(DistinctModuli, Examples) {
  const std::vector<cplx> a{cplx(0, 1), cplx(0, -1)}, b{0.5, 2.0}, c{1.0, 1.0000001};
  EXPECT_FALSE(distinct_moduli(a));
  EXPECT_TRUE(distinct_moduli(b));
  EXPECT_FALSE(distinct_moduli(c, 1e-3));
}

TEST(CountInDisk, BandAndGap) {
  const std::vector<cplx> a{0.5, 2.0, cplx(0, -0.9)};
  EXPECT_EQ(count_in_disk(a, 1e-9), 2);
  EXPECT_NEAR(circle_gap(a), 0.1, 1e-15);
  const std::vector<cplx> b{0.5, 1.0 + 1e-12};
  EXPECT_FALSE(count_in_disk(b, 1e-9).has_value());
}
