#include "bergman/finsect.hpp"

#include "bergman/io.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace bergman {

std::vector<cplx> apply_symbol(const HarmonicTerms& t, std::span<const cplx> d) {
  const int K = static_cast<int>(d.size()) - 1;
  std::vector<cplx> c(d.size(), cplx{});
  for (int k = 0; k <= K; ++k) {
    cplx acc{};
    for (std::size_t s = 1; s < t.conj_part.size(); ++s) {
      const int idx = k + static_cast<int>(s);
      if (t.conj_part[s] == cplx{} || idx > K) continue;
      acc += t.conj_part[s] * (static_cast<double>(k + 1) / (idx + 1)) * d[idx];
    }
    for (std::size_t i = 0; i < t.analytic.size() && static_cast<int>(i) <= k; ++i) {
      if (t.analytic[i] != cplx{}) acc += t.analytic[i] * d[k - i];
    }
    c[k] = acc;
  }
  return c;
}

std::vector<cplx> apply_symbol(const Symbol& sym, std::span<const cplx> d) {
  return apply_symbol(terms_of(sym), d);
}

namespace {

void require_m_fold_zero(int m, std::span<const cplx> g) {
  if (m < 1) throw PreconditionError("tstar_zm: m must be >= 1");
  for (int k = 0; k < m && k < static_cast<int>(g.size()); ++k) {
    if (g[k] != cplx{}) throw PreconditionError("tstar_zm: g must vanish to order m at 0");
  }
}

// Polynomial helpers on ascending coefficient vectors.
std::vector<cplx> integrate(std::span<const cplx> p) {
  std::vector<cplx> out(p.size() + 1, cplx{});
  for (std::size_t j = 0; j < p.size(); ++j) out[j + 1] = p[j] / static_cast<double>(j + 1);
  return out;
}

std::vector<cplx> differentiate(std::span<const cplx> p) {
  std::vector<cplx> out(p.empty() ? 0 : p.size() - 1, cplx{});
  for (std::size_t j = 1; j < p.size(); ++j) out[j - 1] = static_cast<double>(j) * p[j];
  return out;
}

// Divide by z^s; the low coefficients must vanish (they do by construction).
std::vector<cplx> shift_down(std::span<const cplx> p, std::size_t s) {
  if (p.size() <= s) return {};
  return {p.begin() + s, p.end()};
}

}  // namespace

std::vector<cplx> tstar_zm_projection(int m, std::span<const cplx> g) {
  require_m_fold_zero(m, g);
  const int K = static_cast<int>(g.size()) - 1;
  std::vector<cplx> c;
  for (int k = 0; k + m <= K; ++k) c.push_back(static_cast<double>(k + 1) / (m + k + 1) * g[m + k]);
  return c;
}

std::vector<cplx> tstar_zm_integral_form1(int m, std::span<const cplx> g) {
  require_m_fold_zero(m, g);
  // w g'(w) - (m-1) g(w)
  const auto dg = differentiate(g);
  std::vector<cplx> integrand(g.size(), cplx{});
  for (std::size_t j = 0; j < g.size(); ++j) {
    const cplx wdg = j >= 1 ? dg[j - 1] : cplx{};
    integrand[j] = wdg - static_cast<double>(m - 1) * g[j];
  }
  return shift_down(integrate(integrand), m + 1);
}

std::vector<cplx> tstar_zm_integral_form2(int m, std::span<const cplx> g) {
  require_m_fold_zero(m, g);
  auto first = shift_down(g, m);
  const auto second = shift_down(integrate(g), m + 1);
  first.resize(std::max(first.size(), second.size()), cplx{});
  for (std::size_t k = 0; k < second.size(); ++k) first[k] -= static_cast<double>(m) * second[k];
  return first;
}

double tstar_zm_check(int m, std::span<const cplx> g) {
  const auto a = tstar_zm_projection(m, g);
  const auto b = tstar_zm_integral_form1(m, g);
  const auto c = tstar_zm_integral_form2(m, g);
  const std::size_t n = std::max({a.size(), b.size(), c.size()});
  auto at = [](const std::vector<cplx>& v, std::size_t k) { return k < v.size() ? v[k] : cplx{}; };
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    worst = std::max({worst, std::abs(at(a, k) - at(b, k)), std::abs(at(a, k) - at(c, k)),
                      std::abs(at(b, k) - at(c, k))});
  }
  return worst;
}

Eigen::MatrixXcd rectangular_section(const HarmonicTerms& t, int n, int rows_extra) {
  const int rows = n + std::max(rows_extra, 0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, n);
  for (int k = 0; k < n; ++k) {
    for (std::size_t s = 0; s < t.analytic.size(); ++s) {
      const int r = k + static_cast<int>(s);
      if (t.analytic[s] == cplx{} || r >= rows) continue;
      a(r, k) += t.analytic[s] * std::sqrt(static_cast<double>(k + 1) / (r + 1));
    }
    for (std::size_t s = 1; s < t.conj_part.size(); ++s) {
      const int r = k - static_cast<int>(s);
      if (t.conj_part[s] == cplx{} || r < 0) continue;
      a(r, k) += t.conj_part[s] * std::sqrt(static_cast<double>(r + 1) / (k + 1));
    }
  }
  return a;
}

ToeplitzTruncation truncation(const HarmonicTerms& t, int n) {
  if (n < 1) throw PreconditionError("truncation: n must be >= 1");
  return {n, rectangular_section(t, n, 0)};
}

ToeplitzTruncation truncation(const Symbol& sym, int n) { return truncation(terms_of(sym), n); }

double min_singular_value(const ToeplitzTruncation& T, cplx lambda) {
  Eigen::MatrixXcd a = T.entries;
  a.diagonal().array() -= lambda;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  if (svd.info() != Eigen::Success) throw ConvergenceError("min_singular_value: SVD failed");
  return svd.singularValues().minCoeff();
}

double injectivity_modulus(const HarmonicTerms& t, int n, cplx lambda) {
  Eigen::MatrixXcd a = rectangular_section(t, n, t.analytic_degree());
  for (int k = 0; k < n; ++k) a(k, k) -= lambda;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  if (svd.info() != Eigen::Success) throw ConvergenceError("injectivity_modulus: SVD failed");
  return svd.singularValues().minCoeff();
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& a) {
  os << "row,col,re,im\n";
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c) == cplx{}) continue;
      os << r << ',' << c << ',' << io::fmt(a(r, c).real()) << ',' << io::fmt(a(r, c).imag()) << '\n';
    }
  }
}

void write_matrix_binary(std::ostream& os, const Eigen::MatrixXcd& a) {
  std::vector<cplx> row_major;
  row_major.reserve(static_cast<std::size_t>(a.size()));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) row_major.push_back(a(r, c));
  }
  io::write_complex_binary(os, row_major);
}

}  // namespace bergman
