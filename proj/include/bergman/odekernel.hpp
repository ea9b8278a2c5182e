#pragma once

#include "bergman/symbol.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace bergman {

/// Raised when a Taylor extraction would amplify rounding beyond use.
class IllConditionedError : public std::runtime_error {
 public:
  IllConditionedError(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// Explicit kernel basis of T_phi for phi = conj(z)^m + alpha z^m + beta with
/// alpha t^2 + beta t + 1 = alpha (t - t0)(t - t1), |t0|, |t1| > 1.
///
/// G0(z) = z^m (z^m - t0)^{e1} / (z^m - t1)^{e2}, e1 = t1/(t0 - t1),
/// e2 = t0/(t0 - t1), with each power continued radially from the principal
/// value of log(-t_i) at z = 0.
class OdeKernelBasis {
 public:
  /// Requires m >= 1, alpha != 0, beta^2 != 4 alpha, |alpha| < 1 and
  /// 1 - |alpha|^2 > |alpha conj(beta) - beta|. PreconditionError otherwise.
  OdeKernelBasis(int m, cplx alpha, cplx beta);

  int m() const { return m_; }
  cplx alpha() const { return alpha_; }
  cplx beta() const { return beta_; }
  /// The t-roots z0^m, z1^m, ordered by modulus.
  cplx z0m() const { return t_[0]; }
  cplx z1m() const { return t_[1]; }
  /// Principal m-th roots of z0m and z1m.
  cplx z0() const { return z_[0]; }
  cplx z1() const { return z_[1]; }
  std::array<cplx, 2> exponents() const { return {e1_, e2_}; }
  /// Seed data of g_j: delta(z) = z^{j-2} for j >= 2, delta = 0 for j = 1.
  std::vector<cplx> delta_coeffs(int j) const;

  /// G0(z) for |z| < 1; DomainError otherwise.
  cplx g0(cplx z) const;
  /// g_j(z), 1 <= j <= m, |z| < 1.
  cplx eval(int j, cplx z) const;

  /// Taylor coefficients d_0..d_{K-1} of g_j from N samples on |z| = radius.
  std::vector<cplx> taylor_coefficients(int j, int K, double radius = 0.9, int N = 0) const;

  /// ||T_phi g_j|| / ||g_j|| over the first K - 2m coefficients, with g_j's
  /// coefficients extracted on |z| = radius. Throws IllConditionedError when
  /// radius^-K exceeds max_condition.
  double residual_check(int j, int K, int N = 0, double radius = 0.9, double max_condition = 1e8) const;

 private:
  cplx log_u(cplx s) const;       // log(G0(z)/z^m) at s = z^m
  cplx h_minus_h0(cplx s) const;  // z^m/G0 - its value at 0

  int m_;
  cplx alpha_, beta_;
  std::array<cplx, 2> t_{}, z_{};
  cplx e1_, e2_;
  cplx log_u0_, h0_;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// g0 and eval as free functions.
inline cplx g0_eval(const OdeKernelBasis& b, cplx z) { return b.g0(z); }
inline cplx kernel_basis_eval(const OdeKernelBasis& b, int j, cplx z) { return b.eval(j, z); }

}  // namespace bergman
