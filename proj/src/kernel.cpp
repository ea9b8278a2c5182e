#include "bergman/kernel.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bergman {

namespace {

int last_nonzero(std::span<const cplx> a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != cplx{}) return static_cast<int>(i);
  }
  return -1;
}

void check_seed(int m, std::span<const cplx> seed, int K, const char* who) {
  if (m < 1) throw PreconditionError(std::string(who) + ": m must be >= 1");
  if (static_cast<int>(seed.size()) != m) throw PreconditionError(std::string(who) + ": seed must have m entries");
  if (K < m) throw PreconditionError(std::string(who) + ": K must be >= m");
}

double log_sum_exp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log of sum_{k in [lo, hi)} |d_k|^2 / (k+1)
double log_tail_mass(const CoefficientStream& s, std::size_t lo, std::size_t hi) {
  double acc = -std::numeric_limits<double>::infinity();
  for (std::size_t k = lo; k < hi; ++k) {
    const double la = s.log_abs(k);
    if (la == -std::numeric_limits<double>::infinity()) continue;
    acc = log_sum_exp(acc, 2.0 * la - std::log(static_cast<double>(k + 1)));
  }
  return acc;
}

KernelDimension assemble(std::vector<CoefficientStream> streams, const MembershipOptions& mo) {
  KernelDimension out;
  bool undecided = false;
  int count = 0;
  for (std::size_t j = 0; j < streams.size(); ++j) {
    auto v = l2_membership(streams[j], mo);
    if (v.status == Membership::member) {
      ++count;
      out.member_seeds.push_back(static_cast<int>(j));
    } else if (v.status == Membership::undecided) {
      undecided = true;
    }
    out.per_seed.push_back(v);
  }
  out.streams = std::move(streams);
  if (!undecided) out.dim = count;
  return out;
}

bool supports_overlap(const std::vector<CoefficientStream>& streams, const std::vector<int>& seeds) {
  for (std::size_t a = 0; a < seeds.size(); ++a) {
    for (std::size_t b = a + 1; b < seeds.size(); ++b) {
      const auto& x = streams[seeds[a]];
      const auto& y = streams[seeds[b]];
      for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k) {
        if (x.mantissa(k) != cplx{} && y.mantissa(k) != cplx{}) return true;
      }
    }
  }
  return false;
}

// Growth per m coefficients of the span of the given unit-seed solutions of
// recursion_general, fastest first. The solutions advance together and the
// trailing window is re-orthonormalised every few steps; log |R_ii| between
// the midpoint and the end gives the rates.
std::vector<double> joint_growth_ratios(const HarmonicPolySymbol& sym, const std::vector<int>& seeds, int K) {
  const int m = sym.m(), n = sym.n(), window = m + n;
  const int s = static_cast<int>(seeds.size());
  const auto& anti = sym.anti();
  const auto& ana = sym.ana();
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(K + 1, s);
  for (int c = 0; c < s; ++c) d(seeds[c], c) = 1.0;
  Eigen::VectorXd logs = Eigen::VectorXd::Zero(s), mid = logs;
  int mid_at = -1, last_at = 0;
  constexpr int kPeriod = 8;
  for (int k = 0; k + m <= K; ++k) {
    const int idx = m + k;
    for (int c = 0; c < s; ++c) {
      cplx sum{};
      for (int i = 1; i < m; ++i) {
        if (anti[i - 1] != cplx{}) sum += anti[i - 1] * (static_cast<double>(k + 1) / (m - i + k + 1)) * d(m - i + k, c);
      }
      for (int i = 0; i <= n && i <= k; ++i) {
        if (ana[i] != cplx{}) sum += ana[i] * d(k - i, c);
      }
      d(idx, c) = -static_cast<double>(m + k + 1) / (k + 1) * sum;
    }
    if ((k + 1) % kPeriod != 0 && idx != K) continue;
    const int lo = std::max(0, idx - window + 1), rows = idx - lo + 1;
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(d.block(lo, 0, rows, s));
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, s);
    for (int i = 0; i < s; ++i) logs(i) += std::log(std::max(std::abs(qr.matrixQR()(i, i)), 1e-300));
    d.block(lo, 0, rows, s) = q;
    last_at = idx;
    if (mid_at < 0 && idx >= K / 2) {
      mid = logs;
      mid_at = idx;
    }
  }
  std::vector<double> ratios(s, 1.0);
  if (last_at > mid_at) {
    for (int i = 0; i < s; ++i) ratios[i] = std::exp((logs(i) - mid(i)) / (last_at - mid_at) * m);
  }
  std::sort(ratios.begin(), ratios.end(), std::greater<>());
  return ratios;
}

void add_coupled_dims(KernelDimension& kd, const HarmonicPolySymbol& sym, const KernelOptions& opts) {
  if (!kd.dim) return;
  std::vector<int> divergent;
  for (std::size_t j = 0; j < kd.per_seed.size(); ++j) {
    if (kd.per_seed[j].status == Membership::non_member) divergent.push_back(static_cast<int>(j));
  }
  if (divergent.size() < 2 || !supports_overlap(kd.streams, divergent)) return;
  kd.coupled_ratios = joint_growth_ratios(sym, divergent, opts.K);
  const double tol = opts.membership.ratio_tol;
  for (const double r : kd.coupled_ratios) {
    if (std::abs(r - 1.0) <= tol) {
      kd.dim.reset();
      return;
    }
    if (r < 1.0 - tol) ++kd.coupled_dims;
  }
  *kd.dim += kd.coupled_dims;
}

}  // namespace

std::string to_string(Membership s) {
  switch (s) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::undecided: return "undecided";
  }
  return "?";
}

std::string to_string(Injectivity s) {
  switch (s) {
    case Injectivity::trivial_kernel_certified: return "trivial_kernel_certified";
    case Injectivity::not_applicable: return "not_applicable";
    case Injectivity::undecided: return "undecided";
  }
  return "?";
}

CoefficientStream recursion_analytic_perturbation(int m, std::span<const cplx> f_coeffs,
                                                  std::span<const cplx> seed, int K) {
  check_seed(m, seed, K, "recursion_analytic_perturbation");
  const int deg = std::max(last_nonzero(f_coeffs), 0);
  StreamBuilder b(m, m + deg, K + 1);
  for (const auto& s : seed) b.push(s);
  for (int k = 0; k + m <= K; ++k) {
    cplx sum{};
    for (int i = std::max(0, k - deg); i <= k; ++i) {
      if (k - i >= static_cast<int>(f_coeffs.size())) continue;
      const cplx a = f_coeffs[k - i];
      if (a != cplx{}) sum += a * b.get(i);
    }
    b.push(-static_cast<double>(m + 1 + k) / (k + 1) * sum);
  }
  return std::move(b).finish();
}

CoefficientStream recursion_general(const HarmonicPolySymbol& sym, std::span<const cplx> seed, int K) {
  const int m = sym.m(), n = sym.n();
  check_seed(m, seed, K, "recursion_general");
  const auto& anti = sym.anti();
  const auto& ana = sym.ana();
  StreamBuilder b(m, m + n, K + 1);
  for (const auto& s : seed) b.push(s);
  for (int k = 0; k + m <= K; ++k) {
    cplx sum{};
    for (int i = 1; i < m; ++i) {
      if (anti[i - 1] != cplx{}) {
        sum += anti[i - 1] * (static_cast<double>(k + 1) / (m - i + k + 1)) * b.get(m - i + k);
      }
    }
    for (int i = 0; i <= n && i <= k; ++i) {
      if (ana[i] != cplx{}) sum += ana[i] * b.get(k - i);
    }
    b.push(-static_cast<double>(m + k + 1) / (k + 1) * sum);
  }
  return std::move(b).finish();
}

CoefficientStream recursion_special_family(int m, cplx alpha, cplx beta, int k0, int K) {
  if (m < 1) throw PreconditionError("recursion_special_family: m must be >= 1");
  if (k0 < 0 || k0 >= m) throw PreconditionError("recursion_special_family: k0 must lie in 0..m-1");
  if (K < m) throw PreconditionError("recursion_special_family: K must be >= m");
  StreamBuilder bld(m, 2 * m, K + 1);
  // b values of the last two lattice points, in the builder's working scale
  // (recovered from d = (k+1) b on demand).
  auto b_at = [&](int pos) { return bld.get(pos) / static_cast<double>(pos + 1); };
  for (int k = 0; k <= K; ++k) {
    if (k < k0 || (k - k0) % m != 0) {
      bld.push(cplx{});
      continue;
    }
    const int n = (k - k0) / m;  // k = k0 + n m
    cplx bk;
    if (n == 0) {
      bk = 1.0;
    } else if (n == 1) {
      bk = -beta * b_at(k0);
    } else {
      const int p1 = k - m, p2 = k - 2 * m;
      bk = -beta * b_at(p1) - alpha * (static_cast<double>(p2 + 1) / (p1 + 1)) * b_at(p2);
    }
    bld.push(static_cast<double>(k + 1) * bk);
  }
  return std::move(bld).finish();
}

CoefficientStream closed_form_kernel_czn(int m, int n, cplx c, int j, int K) {
  if (m < 1 || n < 0) throw PreconditionError("closed_form_kernel_czn: need m >= 1, n >= 0");
  if (j < 0 || j >= m) throw PreconditionError("closed_form_kernel_czn: j must lie in 0..m-1");
  if (K < 1) throw PreconditionError("closed_form_kernel_czn: K must be >= 1");
  const int period = m + n;
  StreamBuilder bld(m, period, K + 1);
  int prev = -1;
  for (int pos = 0; pos <= K; ++pos) {
    if (pos < j || (pos - j) % period != 0) {
      bld.push(cplx{});
      continue;
    }
    const int k = (pos - j) / period;
    if (k == 0) {
      bld.push(1.0);
    } else {
      const double num = static_cast<double>(k * period + 1 + j);
      const double den = static_cast<double>(k * n + (k - 1) * m + 1 + j);
      bld.push(-c * (num / den) * bld.get(prev));
    }
    prev = pos;
  }
  return std::move(bld).finish();
}

MembershipVerdict l2_membership(const CoefficientStream& s, const MembershipOptions& opts) {
  MembershipVerdict v;
  const std::size_t size = s.size();
  v.terms_used = static_cast<int>(size);
  const std::size_t o = s.first_nonzero();
  const std::size_t L = static_cast<std::size_t>(s.block_length());
  if (o == size) {
    v.status = Membership::member;
    v.method = "finite";
    return v;
  }
  std::size_t last = size;
  while (last-- > 0 && s.mantissa(last) == cplx{}) {}
  if (last + L < size) {
    v.status = Membership::member;
    v.method = "finite";
    return v;
  }

  // Ratio test on block maxima.
  const std::size_t W = static_cast<std::size_t>(std::max(opts.tail_window, 2));
  const std::size_t nb = (size - o) / L;
  if (nb >= W + 1) {
    std::vector<double> lmax;
    bool gap = false;
    for (std::size_t blk = nb - (W + 1); blk < nb; ++blk) {
      double mx = -std::numeric_limits<double>::infinity();
      for (std::size_t k = o + blk * L; k < o + (blk + 1) * L; ++k) mx = std::max(mx, s.log_abs(k));
      if (mx == -std::numeric_limits<double>::infinity()) gap = true;
      lmax.push_back(mx);
    }
    if (!gap) {
      const double per_m = static_cast<double>(s.stride()) / static_cast<double>(L);
      double lo = std::numeric_limits<double>::infinity(), hi = -lo, mean = 0.0;
      for (std::size_t b = 0; b < W; ++b) {
        const double rate = per_m * (lmax[b + 1] - lmax[b]);
        mean += rate;
        lo = std::min(lo, rate);
        hi = std::max(hi, rate);
      }
      mean /= static_cast<double>(W);
      const double rho = std::exp(mean);
      v.estimated_ratio_modulus = rho;
      const double spread = (std::exp(hi) - std::exp(lo)) / rho;
      if (spread < opts.ratio_tol) {
        if (rho < 1.0 - opts.ratio_tol) {
          v.status = Membership::member;
          v.method = "ratio";
          return v;
        }
        if (rho > 1.0 + opts.ratio_tol) {
          v.status = Membership::non_member;
          v.method = "ratio";
          return v;
        }
      }
    }
  }

  // Partial-sum test against the harmonic profile.
  const std::size_t k1 = static_cast<std::size_t>(std::floor((1.0 - opts.tail_fraction) * size));
  const std::size_t span = size - k1;
  const std::size_t w = std::max(L, span / 16);
  v.method = "none";
  if (span < 2 * w || k1 == 0) return v;
  const double first = log_tail_mass(s, k1, k1 + w);
  const double lastm = log_tail_mass(s, size - w, size);
  if (first == -std::numeric_limits<double>::infinity() || lastm == -std::numeric_limits<double>::infinity()) {
    return v;
  }
  const double kmid1 = static_cast<double>(k1) + 0.5 * w;
  const double kmid2 = static_cast<double>(size) - 0.5 * w;
  const double p = -(lastm - first) / std::log(kmid2 / kmid1);
  v.tail_exponent = p;
  if (p <= opts.divergent_exponent) {
    v.status = Membership::non_member;
    v.method = "tail";
  } else if (p >= opts.convergent_exponent) {
    v.status = Membership::member;
    v.method = "tail";
  }
  return v;
}

KernelDimension kernel_dimension(const HarmonicPolySymbol& sym, const KernelOptions& opts) {
  std::vector<CoefficientStream> streams;
  for (int j = 0; j < sym.m(); ++j) {
    std::vector<cplx> seed(sym.m(), cplx{});
    seed[j] = 1.0;
    streams.push_back(recursion_general(sym, seed, opts.K));
  }
  auto kd = assemble(std::move(streams), opts.membership);
  add_coupled_dims(kd, sym, opts);
  return kd;
}

KernelDimension kernel_dimension(int m, std::span<const cplx> f_coeffs, const KernelOptions& opts) {
  std::vector<CoefficientStream> streams;
  for (int j = 0; j < m; ++j) {
    std::vector<cplx> seed(m, cplx{});
    seed[j] = 1.0;
    streams.push_back(recursion_analytic_perturbation(m, f_coeffs, seed, opts.K));
  }
  auto kd = assemble(std::move(streams), opts.membership);
  const int deg = last_nonzero(f_coeffs);
  if (m >= 2 && deg >= 0) {
    add_coupled_dims(kd, HarmonicPolySymbol(m, std::vector<cplx>(m - 1), {f_coeffs.begin(), f_coeffs.begin() + deg + 1}),
                     opts);
  }
  return kd;
}

KernelDimension kernel_dimension(const SpecialFamilySymbol& sym, const KernelOptions& opts) {
  if (sym.gamma == cplx{}) {
    // Multiplication by a nonzero analytic polynomial is injective.
    KernelDimension out;
    out.dim = 0;
    return out;
  }
  const cplx alpha = sym.alpha / sym.gamma, beta = sym.beta / sym.gamma;
  std::vector<CoefficientStream> streams;
  for (int k0 = 0; k0 < sym.m; ++k0) streams.push_back(recursion_special_family(sym.m, alpha, beta, k0, opts.K));
  return assemble(std::move(streams), opts.membership);
}

CoburnVerdict coburn_classify(int m, int n, cplx c) {
  if (m < 1 || n < 0) throw PreconditionError("coburn_classify: need m >= 1, n >= 0");
  CoburnVerdict v;
  if (std::abs(c) < 1.0) {
    v.dim_ker = m;
    v.dim_coker = 0;
  } else {
    v.dim_ker = 0;
    v.dim_coker = n;
  }
  v.coburn = v.dim_ker == 0 || v.dim_coker == 0;
  return v;
}

CoefficientStream range_solve(int m, std::span<const cplx> f_coeffs, std::span<const cplx> h_coeffs,
                              std::span<const cplx> seed) {
  if (m < 1) throw PreconditionError("range_solve: m must be >= 1");
  if (static_cast<int>(seed.size()) != m) throw PreconditionError("range_solve: seed must have m entries");
  const int K = static_cast<int>(h_coeffs.size()) - 1;
  const int deg = std::max(last_nonzero(f_coeffs), 0);
  StreamBuilder b(m, m + deg, std::max(K + 1, m), 0);
  for (int j = 0; j < m && j <= K; ++j) b.push(seed[j]);
  for (int k = 0; k + m <= K; ++k) {
    cplx sum{};
    for (int i = std::max(0, k - deg); i <= k; ++i) {
      if (k - i < static_cast<int>(f_coeffs.size())) sum += f_coeffs[k - i] * b.get(i);
    }
    b.push(static_cast<double>(m + k + 1) / (k + 1) * (h_coeffs[k] - sum));
  }
  return std::move(b).finish();
}

InjectivityVerdict injectivity_test(const HarmonicPolySymbol& sym, const InjectivityOptions& opts) {
  InjectivityVerdict v;
  const auto ev = poincare_condition(sym, cplx{}, opts.moduli_rel_tol);
  v.poincare = ev.poincare;
  v.roots = ev.roots;
  v.zeros_in_disk = count_in_disk(ev.roots, opts.circle_band);
  if (!ev.poincare) {
    v.status = Injectivity::not_applicable;
    v.reason = "zeros of phi_0 do not have distinct moduli";
    return v;
  }
  if (!v.zeros_in_disk) {
    v.status = Injectivity::undecided;
    v.reason = "a zero of phi_0 lies on the unit circle within tolerance";
    return v;
  }
  const int z = *v.zeros_in_disk;
  if (z == 0) {
    v.status = Injectivity::not_applicable;
    v.reason = "phi_0 has no zero inside the disk";
  } else if (z < sym.m()) {
    v.status = Injectivity::not_applicable;
    v.reason = "phi_0 has fewer than m zeros inside the disk, so the Fredholm index m - " + std::to_string(z) +
               " is positive and the kernel is nontrivial";
  } else {
    v.status = Injectivity::trivial_kernel_certified;
    v.reason = "phi_0 has distinct-moduli zeros, " + std::to_string(z) + " of them inside the disk";
  }
  return v;
}

}  // namespace bergman
