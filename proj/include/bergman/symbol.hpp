#pragma once

#include "bergman/cpoly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace bergman {

/// A harmonic polynomial sum_s conj_part[s] * conj(z)^s + sum_s analytic[s] * z^s.
///
/// conj_part[0] is always zero; constants live in analytic[0]. This is the
/// common currency between symbol types and the operator-level code.
struct HarmonicTerms {
  std::vector<cplx> conj_part;
  std::vector<cplx> analytic;

  cplx eval(cplx z) const;
  int conj_degree() const;
  int analytic_degree() const;
};

/// phi = conj(q) + p with q monic of degree m.
///
/// q(z) = z^m + sum_{i=1}^{m-1} conj(anti[i-1]) z^{m-i}, so anti[i-1] is the
/// coefficient of conj(z)^{m-i} in phi. p(z) = sum_i ana[i] z^i.
class HarmonicPolySymbol {
 public:
  HarmonicPolySymbol(int m, std::vector<cplx> anti, std::vector<cplx> ana);

  int m() const { return m_; }
  /// Degree of p; 0 when p is constant (including p = 0).
  int n() const { return ana_.empty() ? 0 : static_cast<int>(ana_.size()) - 1; }
  const std::vector<cplx>& anti() const { return anti_; }
  const std::vector<cplx>& ana() const { return ana_; }

  HarmonicTerms terms() const;
  cplx eval(cplx z) const { return terms().eval(z); }

 private:
  int m_;
  std::vector<cplx> anti_;
  std::vector<cplx> ana_;
};

/// phi = gamma conj(z)^m + alpha z^m + beta.
struct SpecialFamilySymbol {
  int m = 1;
  cplx alpha{};
  cplx beta{};
  cplx gamma{1.0, 0.0};

  SpecialFamilySymbol() = default;
  SpecialFamilySymbol(int m, cplx alpha, cplx beta, cplx gamma = {1.0, 0.0});

  HarmonicTerms terms() const;
  cplx eval(cplx z) const { return terms().eval(z); }
};

using Symbol = std::variant<HarmonicPolySymbol, SpecialFamilySymbol>;

HarmonicTerms terms_of(const Symbol& sym);
int conj_order(const Symbol& sym);

/// The gamma = 1 family as a general harmonic symbol (q = z^m, p = alpha z^m + beta).
/// Throws PreconditionError unless gamma == 1.
HarmonicPolySymbol to_harmonic(const SpecialFamilySymbol& fam);

/// phi(e^{2 pi i k / samples}), k = 0..samples-1. Requires samples >= 16.
std::vector<cplx> boundary_curve(const HarmonicTerms& t, int samples);
std::vector<cplx> boundary_curve(const Symbol& sym, int samples);

struct AssociatedPoly {
  CPoly poly;
  std::optional<cplx> lambda;
};

/// phi_lambda(z) = 1 + sum_{i=1}^{m+n} a_{i-m} z^i - lambda z^m, where a_{i-m}
/// is anti[i-1] for i < m and ana[i-m] for i >= m. lambda = 0 gives phi_0.
/// On the unit circle phi(z) - lambda = phi_lambda(z) / z^m.
AssociatedPoly associated_poly(const HarmonicPolySymbol& sym, cplx lambda);

/// Raised when a symbol-derived polynomial is identically zero.
class DegenerateSymbolError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// alpha t^2 + (beta - lambda) t + gamma; its roots t_i give the zeros of
/// z^m (phi(z) - lambda) as the m-th roots of each t_i.
CPoly special_to_quadratic(const SpecialFamilySymbol& sym, cplx lambda);

struct PoincareEvidence {
  bool poincare = true;
  std::vector<cplx> roots;     // of phi_lambda, ordered by modulus
  std::vector<double> moduli;
};

/// Whether phi_lambda has zeros of pairwise distinct moduli.
PoincareEvidence poincare_condition(const HarmonicPolySymbol& sym, cplx lambda, double rel_tol = 1e-6);

}  // namespace bergman
