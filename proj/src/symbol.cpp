#include "bergman/symbol.hpp"

#include <cmath>
#include <type_traits>
#include <numbers>
#include <string>

namespace bergman {

cplx HarmonicTerms::eval(cplx z) const {
  const cplx zb = std::conj(z);
  cplx v{};
  for (std::size_t s = conj_part.size(); s-- > 0;) v = v * zb + conj_part[s];
  cplx w{};
  for (std::size_t s = analytic.size(); s-- > 0;) w = w * z + analytic[s];
  return v + w;
}

int HarmonicTerms::conj_degree() const {
  for (std::size_t s = conj_part.size(); s-- > 1;) {
    if (conj_part[s] != cplx{}) return static_cast<int>(s);
  }
  return 0;
}

int HarmonicTerms::analytic_degree() const {
  for (std::size_t s = analytic.size(); s-- > 0;) {
    if (analytic[s] != cplx{}) return static_cast<int>(s);
  }
  return 0;
}

HarmonicPolySymbol::HarmonicPolySymbol(int m, std::vector<cplx> anti, std::vector<cplx> ana)
    : m_(m), anti_(std::move(anti)), ana_(std::move(ana)) {
  if (m_ < 1) throw PreconditionError("HarmonicPolySymbol: m must be >= 1");
  if (static_cast<int>(anti_.size()) != m_ - 1) {
    throw PreconditionError("HarmonicPolySymbol: expected " + std::to_string(m_ - 1) +
                            " coefficients for the conjugate-analytic part, got " +
                            std::to_string(anti_.size()));
  }
  while (ana_.size() > 1 && ana_.back() == cplx{}) ana_.pop_back();
  if (ana_.empty()) ana_.push_back(cplx{});
}

HarmonicTerms HarmonicPolySymbol::terms() const {
  HarmonicTerms t;
  t.conj_part.assign(m_ + 1, cplx{});
  t.conj_part[m_] = 1.0;
  for (int i = 1; i < m_; ++i) t.conj_part[m_ - i] = anti_[i - 1];
  t.analytic = ana_;
  return t;
}

SpecialFamilySymbol::SpecialFamilySymbol(int m_, cplx alpha_, cplx beta_, cplx gamma_)
    : m(m_), alpha(alpha_), beta(beta_), gamma(gamma_) {
  if (m < 1) throw PreconditionError("SpecialFamilySymbol: m must be >= 1");
  if (alpha == cplx{} && beta == cplx{} && gamma == cplx{}) {
    throw PreconditionError("SpecialFamilySymbol: alpha, beta, gamma all zero");
  }
}

HarmonicTerms SpecialFamilySymbol::terms() const {
  HarmonicTerms t;
  t.conj_part.assign(m + 1, cplx{});
  t.conj_part[m] = gamma;
  t.analytic.assign(m + 1, cplx{});
  t.analytic[m] = alpha;
  t.analytic[0] += beta;
  return t;
}

HarmonicTerms terms_of(const Symbol& sym) {
  return std::visit([](const auto& s) { return s.terms(); }, sym);
}

int conj_order(const Symbol& sym) {
  return std::visit([](const auto& s) -> int {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HarmonicPolySymbol>) {
      return s.m();
    } else {
      return s.m;
    }
  }, sym);
}

HarmonicPolySymbol to_harmonic(const SpecialFamilySymbol& fam) {
  if (fam.gamma != cplx{1.0, 0.0}) throw PreconditionError("to_harmonic: gamma must be 1");
  std::vector<cplx> ana(fam.m + 1, cplx{});
  ana[0] = fam.beta;
  ana[fam.m] += fam.alpha;
  return HarmonicPolySymbol(fam.m, std::vector<cplx>(fam.m - 1, cplx{}), std::move(ana));
}

std::vector<cplx> boundary_curve(const HarmonicTerms& t, int samples) {
  if (samples < 16) throw PreconditionError("boundary_curve: samples must be >= 16");
  std::vector<cplx> out(samples);
  for (int k = 0; k < samples; ++k) {
    out[k] = t.eval(std::polar(1.0, 2.0 * std::numbers::pi * k / samples));
  }
  return out;
}

std::vector<cplx> boundary_curve(const Symbol& sym, int samples) {
  return boundary_curve(terms_of(sym), samples);
}

AssociatedPoly associated_poly(const HarmonicPolySymbol& sym, cplx lambda) {
  const int m = sym.m(), n = sym.n();
  std::vector<cplx> c(m + n + 1, cplx{});
  c[0] = 1.0;
  for (int i = 1; i < m; ++i) c[i] = sym.anti()[i - 1];
  for (int i = 0; i <= n; ++i) c[m + i] = sym.ana()[i];
  c[m] -= lambda;
  return {CPoly(std::move(c)), lambda};
}

CPoly special_to_quadratic(const SpecialFamilySymbol& sym, cplx lambda) {
  CPoly q{sym.gamma, sym.beta - lambda, sym.alpha};
  if (q.is_zero()) throw DegenerateSymbolError("special_to_quadratic: polynomial is identically zero");
  return q;
}

PoincareEvidence poincare_condition(const HarmonicPolySymbol& sym, cplx lambda, double rel_tol) {
  PoincareEvidence ev;
  const auto ap = associated_poly(sym, lambda);
  if (ap.poly.degree() >= 1) ev.roots = roots(ap.poly);
  for (const auto& r : ev.roots) ev.moduli.push_back(std::abs(r));
  ev.poincare = distinct_moduli(ev.roots, rel_tol);
  return ev;
}

}  // namespace bergman
