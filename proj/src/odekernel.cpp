#include "bergman/odekernel.hpp"

#include "bergman/finsect.hpp"
#include "bergman/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bergman {

OdeKernelBasis::OdeKernelBasis(int m, cplx alpha, cplx beta) : m_(m), alpha_(alpha), beta_(beta) {
  if (m < 1) throw PreconditionError("OdeKernelBasis: m must be >= 1");
  if (alpha == cplx{}) throw PreconditionError("OdeKernelBasis: alpha must be nonzero");
  if (std::abs(alpha) >= 1.0) throw PreconditionError("OdeKernelBasis: requires |alpha| < 1");
  if (1.0 - std::norm(alpha) <= std::abs(alpha * std::conj(beta) - beta)) {
    throw PreconditionError("OdeKernelBasis: requires 1 - |alpha|^2 > |alpha conj(beta) - beta|");
  }
  const cplx disc = beta * beta - 4.0 * alpha;
  if (std::abs(disc) <= 1e-14 * std::max(1.0, std::norm(beta))) {
    throw PreconditionError("OdeKernelBasis: repeated root (beta^2 = 4 alpha)");
  }
  // Roots of alpha t^2 + beta t + 1 without cancellation.
  const cplx sq = std::sqrt(disc);
  const cplx q = -0.5 * (beta + (std::real(std::conj(beta) * sq) >= 0.0 ? sq : -sq));
  t_ = {q / alpha, 1.0 / q};
  if (std::abs(t_[0]) > std::abs(t_[1])) std::swap(t_[0], t_[1]);
  for (const cplx t : t_) {
    if (std::abs(t) <= 1.0) throw PreconditionError("OdeKernelBasis: a t-root lies in the closed disk");
  }
  for (int i = 0; i < 2; ++i) z_[i] = std::exp(std::log(t_[i]) / static_cast<double>(m));
  e1_ = t_[1] / (t_[0] - t_[1]);
  e2_ = t_[0] / (t_[0] - t_[1]);
  log_u0_ = e1_ * std::log(-t_[0]) - e2_ * std::log(-t_[1]);
  h0_ = std::exp(-log_u0_);
}

std::vector<cplx> OdeKernelBasis::delta_coeffs(int j) const {
  if (j < 1 || j > m_) throw PreconditionError("delta_coeffs: j out of range");
  std::vector<cplx> d(static_cast<std::size_t>(std::max(m_ - 1, 0)), cplx{});
  if (j >= 2) d[j - 2] = 1.0;
  return d;
}

cplx OdeKernelBasis::log_u(cplx s) const {
  // |s| < 1 < |t_i| keeps 1 - s/t_i in the right half plane, so the principal
  // log1p is the radial continuation.
  return log_u0_ + e1_ * log1p_c(-s / t_[0]) - e2_ * log1p_c(-s / t_[1]);
}

cplx OdeKernelBasis::h_minus_h0(cplx s) const {
  return h0_ * expm1_c(-(e1_ * log1p_c(-s / t_[0]) - e2_ * log1p_c(-s / t_[1])));
}

cplx OdeKernelBasis::g0(cplx z) const {
  if (!(std::abs(z) < 1.0)) throw DomainError("g0_eval: z must lie in the open unit disk");
  const cplx s = std::pow(z, m_);
  return s * std::exp(log_u(s));
}

cplx OdeKernelBasis::eval(int j, cplx z) const {
  if (j < 1 || j > m_) throw PreconditionError("kernel_basis_eval: j must be in 1..m");
  if (!(std::abs(z) < 1.0)) throw DomainError("kernel_basis_eval: z must lie in the open unit disk");
  const cplx s = std::pow(z, m_);
  const cplx p = alpha_ * s * s + beta_ * s + 1.0;
  const cplx u_over_p = std::exp(log_u(s)) / p;  // G0 / (z^m P)
  if (j == 1) return std::pow(z, m_ - 1) * u_over_p;
  // int_0^z t^{j-2}/G0 = h0 z^{j-1-m}/(j-1-m) + z^{j-1-m} int_0^1 u^{j-2-m}(h(zu) - h0) du,
  // and g_j = -z^{m-1} (G0/(z^m P)) times that.
  const int e = j - 2 - m_;
  const auto integrand = [&](double u) -> cplx {
    return std::pow(u, e) * h_minus_h0(std::pow(z * u, m_));
  };
  cplx rem{};
  if (z != cplx{}) {
    QuadratureOptions qo;
    qo.abs_tol = 1e-14;
    qo.rel_tol = 1e-13;
    rem = integrate_gk15(integrand, 0.0, 1.0, qo).value;
  }
  const cplx zj2 = j == 2 ? cplx{1.0} : std::pow(z, j - 2);
  return -u_over_p * zj2 * (h0_ / static_cast<double>(j - 1 - m_) + rem);
}

std::vector<cplx> OdeKernelBasis::taylor_coefficients(int j, int K, double radius, int N) const {
  if (K < 1) throw PreconditionError("taylor_coefficients: K must be >= 1");
  if (!(radius > 0.0 && radius < 1.0)) throw PreconditionError("taylor_coefficients: radius in (0,1)");
  if (N <= 0) N = std::max(4 * K, 256);
  if (N < K) throw PreconditionError("taylor_coefficients: N must be >= K");
  std::vector<cplx> samples(N);
  for (int p = 0; p < N; ++p) {
    samples[p] = eval(j, std::polar(radius, 2.0 * std::numbers::pi * p / N));
  }
  std::vector<cplx> c(K);
  for (int k = 0; k < K; ++k) {
    cplx acc{};
    for (int p = 0; p < N; ++p) {
      const long idx = (static_cast<long>(p) * k) % N;
      acc += samples[p] * std::polar(1.0, -2.0 * std::numbers::pi * idx / N);
    }
    c[k] = acc / (static_cast<double>(N) * std::pow(radius, k));
  }
  return c;
}

double OdeKernelBasis::residual_check(int j, int K, int N, double radius, double max_condition) const {
  if (K <= 2 * m_) throw PreconditionError("residual_check: K must exceed 2m");
  const double condition = std::pow(radius, -(K - 1));
  if (condition > max_condition) {
    throw IllConditionedError("residual_check: coefficient extraction condition " + std::to_string(condition) +
                                  " exceeds the limit",
                              condition);
  }
  const auto d = taylor_coefficients(j, K, radius, N);
  const auto c = apply_symbol(SpecialFamilySymbol(m_, alpha_, beta_).terms(), d);
  double num = 0.0, den = 0.0;
  for (int k = 0; k < K; ++k) den += std::norm(d[k]);
  for (int k = 0; k < K - 2 * m_; ++k) num += std::norm(c[k]);
  return std::sqrt(num / den);
}

}  // namespace bergman
