#include "bergman/cpoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bergman {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  cplx value;
  cplx deriv;
  double bound;  // running error bound sum |a_k| |z|^k
};

HornerResult horner(std::span<const cplx> a, cplx z) {
  cplx v{}, dv{};
  double bound = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    dv = dv * z + v;
    v = v * z + a[k];
    bound = bound * az + std::abs(a[k]);
  }
  return {v, dv, bound};
}

// Initial guesses from the upper convex hull of (k, log|a_k|) (Bini's
// Newton-polygon start), one circle per hull edge.
std::vector<cplx> initial_guesses(std::span<const cplx> a) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<int> idx;
  std::vector<double> lg;
  for (int k = 0; k <= n; ++k) {
    if (std::abs(a[k]) > 0.0) {
      idx.push_back(k);
      lg.push_back(std::log(std::abs(a[k])));
    }
  }
  std::vector<int> hull;  // positions into idx
  for (int p = 0; p < static_cast<int>(idx.size()); ++p) {
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2], j = hull.back();
      const double cross = (idx[j] - idx[i]) * (lg[p] - lg[i]) - (lg[j] - lg[i]) * (idx[p] - idx[i]);
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<cplx> z;
  z.reserve(n);
  const double sigma = 0.7;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const int i = idx[hull[e]], j = idx[hull[e + 1]];
    const int cnt = j - i;
    const double u = std::exp((lg[hull[e]] - lg[hull[e + 1]]) / cnt);
    for (int l = 0; l < cnt; ++l) {
      const double ang = 2.0 * std::numbers::pi * (l + 0.25) / cnt + 2.0 * std::numbers::pi * i / n + sigma;
      z.push_back(std::polar(u, ang));
    }
  }
  return z;
}

bool aberth(std::span<const cplx> a, std::vector<cplx>& z, int max_iter) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iter; ++it) {
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto h = horner(a, z[i]);
      if (std::abs(h.value) <= 4.0 * kEps * h.bound) {
        done[i] = true;
        continue;
      }
      ++active;
      const cplx ratio = h.value / h.deriv;
      cplx s{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[i] - z[j]);
      }
      const cplx w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (active == 0) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

std::vector<cplx> companion_roots(std::span<const cplx> a) {
  const int n = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -a[i] / a[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  if (es.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solver failed");
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = es.eigenvalues()[i];
  return z;
}

void newton_polish(std::span<const cplx> a, std::vector<cplx>& z) {
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      const auto h = horner(a, r);
      if (h.deriv == cplx{}) break;
      const cplx cand = r - h.value / h.deriv;
      if (std::abs(horner(a, cand).value) < std::abs(h.value)) {
        r = cand;
      } else {
        break;
      }
    }
  }
}

}  // namespace

CPoly::CPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CPoly::CPoly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim(); }

void CPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

cplx CPoly::leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }

double CPoly::scale() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

cplx CPoly::eval(cplx z) const {
  cplx v{};
  for (std::size_t k = coeffs_.size(); k-- > 0;) v = v * z + coeffs_[k];
  return v;
}

CPoly CPoly::derivative() const {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(static_cast<double>(k) * coeffs_[k]);
  return CPoly(std::move(d));
}

CPoly CPoly::scaled(cplx c) const {
  std::vector<cplx> d(coeffs_.begin(), coeffs_.end());
  for (auto& x : d) x *= c;
  return CPoly(std::move(d));
}

double scaled_residual(const CPoly& p, cplx r) {
  const double s = p.scale();
  if (s == 0.0) return 0.0;
  const double denom = std::pow(std::max(1.0, std::abs(r)), p.degree());
  return std::abs(p.eval(r)) / (denom * s);
}

void sort_by_modulus(std::vector<cplx>& zs) {
  std::sort(zs.begin(), zs.end(), [](cplx a, cplx b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-12 * std::max({ma, mb, 1e-300})) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
}

std::vector<cplx> roots(const CPoly& p, double tol) {
  RootOptions opts;
  opts.tol = tol;
  return roots(p, opts);
}

std::vector<cplx> roots(const CPoly& p, const RootOptions& opts) {
  if (p.degree() < 1) throw PreconditionError("roots: polynomial degree must be >= 1");
  const auto all = p.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == cplx{}) ++zeros;
  std::vector<cplx> out(zeros, cplx{});
  const std::span<const cplx> a = all.subspan(zeros);
  const int n = static_cast<int>(a.size()) - 1;

  if (n == 1) {
    out.push_back(-a[0] / a[1]);
  } else if (n > 1) {
    auto check = [&](const std::vector<cplx>& z) {
      for (const auto& r : z) {
        if (!(scaled_residual(p, r) <= opts.tol)) return false;
      }
      return true;
    };
    auto z = initial_guesses(a);
    const bool converged = aberth(a, z, opts.max_iterations);
    newton_polish(a, z);
    if (!converged || !check(z)) {
      z = companion_roots(a);
      newton_polish(a, z);
      if (!check(z)) throw ConvergenceError("roots: residual bound not met after companion fallback");
    }
    out.insert(out.end(), z.begin(), z.end());
  }
  sort_by_modulus(out);
  return out;
}

int sign_variations(std::span<const double> seq) {
  int count = 0;
  int last = 0;
  for (double v : seq) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

SchurCohnReport schur_cohn(const CPoly& p, double degeneracy_tol) {
  const int n = p.degree();
  if (n < 1) throw PreconditionError("schur_cohn: degree must be >= 1");
  const double s = p.scale();
  std::vector<cplx> a(n + 1);
  for (int k = 0; k <= n; ++k) a[k] = p[k] / s;

  SchurCohnReport rep;
  bool degenerate = false;
  for (int k = 1; k <= n; ++k) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(k, k);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = r; c < k; ++c) {
        A(r, c) = a[c - r];
        B(r, c) = std::conj(a[n - (c - r)]);
      }
    }
    const Eigen::MatrixXcd H = B.adjoint() * B - A.adjoint() * A;
    const cplx det = H.partialPivLu().determinant();
    if (std::abs(det.imag()) > 1e-9 * std::abs(det) + 1e-12) {
      throw NumericIntegrityError("schur_cohn: determinant M_" + std::to_string(k) +
                                  " has a non-negligible imaginary part");
    }
    if (std::abs(det.real()) <= degeneracy_tol) degenerate = true;
    rep.dets.push_back(det.real() * std::pow(s, 2 * k));  // undo the normalisation
  }
  std::vector<double> seq{1.0};
  seq.insert(seq.end(), rep.dets.begin(), rep.dets.end());
  rep.variations = sign_variations(seq);
  if (!degenerate) rep.in_disk_count = n - rep.variations;
  return rep;
}

bool distinct_moduli(std::span<const cplx> zs, double rel_tol) {
  if (zs.size() < 2) return true;
  std::vector<double> mod;
  mod.reserve(zs.size());
  for (const auto& z : zs) mod.push_back(std::abs(z));
  std::sort(mod.begin(), mod.end());
  const double gap = rel_tol * mod.back();
  for (std::size_t i = 1; i < mod.size(); ++i) {
    if (mod[i] - mod[i - 1] <= gap) return false;
  }
  return true;
}

std::optional<int> count_in_disk(std::span<const cplx> zs, double band) {
  int count = 0;
  for (const auto& z : zs) {
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= band) return std::nullopt;
    if (r < 1.0) ++count;
  }
  return count;
}

double circle_gap(std::span<const cplx> zs) {
  double g = std::numeric_limits<double>::infinity();
  for (const auto& z : zs) g = std::min(g, std::abs(std::abs(z) - 1.0));
  return g;
}

}  // namespace bergman
