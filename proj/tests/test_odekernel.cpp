#include "bergman/kernel.hpp"
#include "bergman/linalg.hpp"
#include "bergman/odekernel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace bergman;

namespace {

bool valid(cplx a, cplx b) { return a != cplx{} && 1.0 - std::norm(a) > std::abs(a * std::conj(b) - b); }

}  // namespace

TEST(OdeKernelBasis, RootsAndExponents) {
  const OdeKernelBasis b(1, 0.25, 0.0);
  EXPECT_LT(std::abs(std::abs(b.z0m()) - 2.0), 1e-14);
  EXPECT_LT(std::abs(b.z0m() + b.z1m()), 1e-14);
  const auto e = b.exponents();
  EXPECT_LT(std::abs(e[1] - e[0] - 1.0), 1e-14);
  EXPECT_LT(std::abs(std::abs(e[0].real()) - 0.5), 1e-14);
}

TEST(OdeKernelBasis, FactorisationInvariant) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  int built = 0;
  while (built < 30) {
    const cplx a(u(rng), u(rng)), bb(u(rng), u(rng));
    if (!valid(a, bb)) continue;
    ++built;
    const int m = 1 + built % 3;
    const OdeKernelBasis b(m, a, bb);
    // alpha (t - t0)(t - t1) = alpha t^2 + beta t + 1
    EXPECT_LT(std::abs(-a * (b.z0m() + b.z1m()) - bb), 1e-12);
    EXPECT_LT(std::abs(a * b.z0m() * b.z1m() - 1.0), 1e-12);
    EXPECT_GT(std::abs(b.z0()), 1.0);
    EXPECT_GT(std::abs(b.z1()), 1.0);
    EXPECT_LT(std::abs(std::pow(b.z0(), m) - b.z0m()), 1e-12 * std::abs(b.z0m()));
  }
}

TEST(OdeKernelBasis, RejectsInvalidParameters) {
  EXPECT_THROW(OdeKernelBasis(1, 1.5, 0.0), PreconditionError);
  EXPECT_THROW(OdeKernelBasis(1, 0.0, 0.1), PreconditionError);
  EXPECT_THROW(OdeKernelBasis(0, 0.2, 0.0), PreconditionError);
  EXPECT_THROW(OdeKernelBasis(1, 0.5, 2.0), PreconditionError);  // 0.75 < |1 - 2|
  EXPECT_THROW(OdeKernelBasis(1, 0.25, 1.0), PreconditionError);  // beta^2 = 4 alpha
}

TEST(OdeKernelBasis, G0Examples) {
  const OdeKernelBasis b(1, 0.25, 0.0);
  EXPECT_EQ(b.g0(0.0), cplx(0.0));
  // G0 = z (z^2 + 4)^{-1/2}
  EXPECT_LT(std::abs(b.g0(0.5) - 0.5 / std::sqrt(4.25)), 1e-14);
  const cplx z(0.3, 0.6);
  EXPECT_LT(std::abs(b.g0(z) - z / std::sqrt(z * z + 4.0)), 1e-14);
  EXPECT_THROW(b.g0(1.0), DomainError);
  EXPECT_THROW(g0_eval(b, cplx(0.8, 0.8)), DomainError);
}

TEST(OdeKernelBasis, LogDerivativeIdentity) {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const struct {
    int m;
    cplx a, b;
  } cases[] = {{1, 0.25, 0.0}, {2, cplx(0.3, -0.1), cplx(0.1, 0.2)}, {3, cplx(-0.4, 0.2), cplx(0.05, -0.1)}};
  for (const auto& c : cases) {
    const OdeKernelBasis b(c.m, c.a, c.b);
    for (int i = 0; i < 100; ++i) {
      cplx z(u(rng), u(rng));
      if (std::abs(z) > 0.8) z *= 0.8 / std::abs(z);
      if (std::abs(z) < 0.05) continue;
      const double h = 1e-5;
      const cplx d = (b.g0(z + h) - b.g0(z - h)) / (2.0 * h);
      const cplx s = std::pow(z, c.m);
      const cplx want = static_cast<double>(c.m) / (z * (c.a * s * s + c.b * s + 1.0));
      EXPECT_LT(std::abs(d / b.g0(z) - want), 1e-8 * std::max(1.0, std::abs(want)));
    }
  }
  const OdeKernelBasis b(1, 0.25, 0.0);
  const double h = 1e-5;
  const cplx ld = (b.g0(0.5 + h) - b.g0(0.5 - h)) / (2.0 * h) / b.g0(0.5);
  EXPECT_NEAR(ld.real(), 1.0 / (0.5 * 1.0625), 1e-8);
}

TEST(OdeKernelBasis, G1Examples) {
  const OdeKernelBasis b(1, 0.25, 0.0);
  EXPECT_LT(std::abs(b.eval(1, 0.0) - 0.5), 1e-15);
  const cplx z(0.2, -0.7);
  EXPECT_LT(std::abs(b.eval(1, z) - 4.0 * std::pow(z * z + 4.0, -1.5)), 1e-14);
  EXPECT_THROW(b.eval(2, 0.1), PreconditionError);
  EXPECT_THROW(b.eval(0, 0.1), PreconditionError);
  EXPECT_THROW(kernel_basis_eval(b, 1, 1.0), DomainError);
}

TEST(OdeKernelBasis, TaylorCoefficientsMatchClosedForm) {
  const OdeKernelBasis b(1, 0.25, 0.0);
  const auto d = b.taylor_coefficients(1, 40);
  const auto cf = closed_form_kernel_czn(1, 1, 0.25, 0, 40);
  for (int k = 0; k < 40; ++k) EXPECT_LT(std::abs(d[k] - 0.5 * cf.value(k)), 1e-12) << k;
}

TEST(OdeKernelBasis, HigherBasisFunctionsAtOrigin) {
  // g_2(0) = 1/(m-1); g_j(0) = 0 for j >= 3.
  const OdeKernelBasis b(3, cplx(0.2, 0.1), 0.3);
  EXPECT_LT(std::abs(b.eval(2, 0.0) - 0.5), 1e-14);
  EXPECT_LT(std::abs(b.eval(2, 1e-6) - 0.5), 1e-5);
  EXPECT_EQ(b.eval(3, 0.0), cplx(0.0));
}

TEST(OdeKernelBasis, ResidualExamples) {
  EXPECT_LE(OdeKernelBasis(1, 0.25, 0.0).residual_check(1, 64), 1e-6);
  const OdeKernelBasis b(2, 0.1, 0.1);
  EXPECT_LE(b.residual_check(1, 64), 1e-6);
  EXPECT_LE(b.residual_check(2, 64), 1e-6);
  EXPECT_THROW(b.residual_check(1, 400), IllConditionedError);
  try {
    b.residual_check(1, 400);
  } catch (const IllConditionedError& e) {
    EXPECT_GT(e.condition(), 1e8);
  }
}

TEST(OdeKernelBasis, SpanMatchesRecursionBasis) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  int done = 0;
  while (done < 9) {
    const cplx a(u(rng), u(rng)), bb(u(rng), u(rng));
    if (!valid(a, bb)) continue;
    const int m = 1 + done % 3;
    ++done;
    const OdeKernelBasis b(m, a, bb);
    std::vector<std::vector<cplx>> ode, rec;
    for (int j = 1; j <= m; ++j) ode.push_back(b.taylor_coefficients(j, 50));
    for (int k0 = 0; k0 < m; ++k0) rec.push_back(recursion_special_family(m, a, bb, k0, 60).values(50));
    EXPECT_LT(subspace_angle_sin(columns(ode, 50), columns(rec, 50)), 1e-6);
  }
}

TEST(OdeKernelBasis, BoundedNearTheCircle) {
  const OdeKernelBasis b(2, cplx(0.4, 0.3), cplx(0.1, -0.1));
  for (int j = 1; j <= 2; ++j) {
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) worst = std::max(worst, std::abs(b.eval(j, std::polar(0.99, 0.1 * k))));
    EXPECT_LT(worst, 1e3);
  }
}

TEST(OdeKernelBasis, DeltaCoefficients) {
  const OdeKernelBasis b(3, 0.2, 0.1);
  EXPECT_EQ(b.delta_coeffs(1), std::vector<cplx>(2, cplx{}));
  EXPECT_EQ(b.delta_coeffs(3), (std::vector<cplx>{0.0, 1.0}));
  EXPECT_TRUE(OdeKernelBasis(1, 0.2, 0.1).delta_coeffs(1).empty());
}

TEST(SubspaceAngle, Basics) {
  Eigen::MatrixXcd a(3, 1), b(3, 1);
  a << 1, 0, 0;
  b << 2, 0, 0;
  EXPECT_LT(subspace_angle_sin(a, b), 1e-15);
  b << 0, 1, 0;
  EXPECT_NEAR(subspace_angle_sin(a, b), 1.0, 1e-15);
  b << 1, 1, 0;
  EXPECT_NEAR(subspace_angle_sin(a, b), std::sqrt(0.5), 1e-15);
}
