#include "bergman/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bergman {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx eval_on_circle(const HarmonicTerms& t, double theta) { return t.eval(std::polar(1.0, theta)); }

// Returns the winding sum / 2 pi, or nullopt if some increment reaches pi/2.
std::optional<double> raw_winding(std::span<const cplx> curve, cplx lambda) {
  double total = 0.0;
  const std::size_t n = curve.size();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = curve[k] - lambda;
    const cplx b = curve[(k + 1) % n] - lambda;
    const double step = std::arg(b / a);
    if (std::abs(step) >= 0.5 * std::numbers::pi) return std::nullopt;
    total += step;
  }
  return total / kTwoPi;
}

double min_sample_distance(std::span<const cplx> curve, cplx lambda) {
  double d = std::numeric_limits<double>::infinity();
  for (const cplx c : curve) d = std::min(d, std::abs(c - lambda));
  return d;
}

WindingResult finish(double w, double dist) {
  const double r = std::round(w);
  if (std::abs(w - r) > 0.1) throw ConvergenceError("winding_number: total argument is not near a multiple of 2 pi");
  return {static_cast<int>(r), dist};
}

}  // namespace

WindingResult winding_number(std::span<const cplx> curve, cplx lambda, double on_curve_tol) {
  if (curve.size() < 64) throw PreconditionError("winding_number: need at least 64 samples");
  const double dist = min_sample_distance(curve, lambda);
  if (dist <= on_curve_tol) throw NotFredholmError("winding_number: lambda lies on the curve");
  const auto w = raw_winding(curve, lambda);
  if (!w) throw PreconditionError("winding_number: curve under-resolved (argument increment >= pi/2)");
  return finish(*w, dist);
}

WindingResult winding_number(const HarmonicTerms& t, cplx lambda, int samples, int max_samples) {
  samples = std::max(samples, 64);
  const double dist = distance_to_curve(t, lambda);
  if (dist <= 1e-9) throw NotFredholmError("winding_number: lambda lies on phi(T)");
  for (int n = samples; n <= max_samples; n *= 2) {
    const auto curve = boundary_curve(t, n);
    if (const auto w = raw_winding(curve, lambda)) return finish(*w, dist);
  }
  throw ConvergenceError("winding_number: refinement cap reached");
}

WindingResult winding_number(const Symbol& sym, cplx lambda, int samples) {
  return winding_number(terms_of(sym), lambda, samples);
}

double distance_to_curve(const HarmonicTerms& t, cplx lambda) {
  constexpr int coarse = 512, fine = 4096;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int k = 0; k < coarse; ++k) {
    const double th = kTwoPi * k / coarse;
    const double d = std::abs(eval_on_circle(t, th) - lambda);
    if (d < best) best = d, best_theta = th;
  }
  double half_width = kTwoPi / coarse;
  for (int pass = 0; pass < 2; ++pass) {
    const double lo = best_theta - half_width;
    const double step = 2.0 * half_width / fine;
    for (int k = 0; k <= fine; ++k) {
      const double th = lo + step * k;
      const double d = std::abs(eval_on_circle(t, th) - lambda);
      if (d < best) best = d, best_theta = th;
    }
    half_width = step;
  }
  return best;
}

SpecialFamilySymbol adjoint_symbol(const SpecialFamilySymbol& fam) {
  return {fam.m, std::conj(fam.gamma), std::conj(fam.beta), std::conj(fam.alpha)};
}

int family_index_by_zero_count(const SpecialFamilySymbol& fam, cplx lambda, double band) {
  const CPoly q = special_to_quadratic(fam, lambda);
  const auto rts = q.degree() >= 1 ? roots(q) : std::vector<cplx>{};
  if (!count_in_disk(rts, band)) throw NotFredholmError("family index: a t-root lies on the unit circle");
  std::optional<int> zt;
  if (q.degree() >= 1 && q[0] != cplx{}) zt = schur_cohn(q).in_disk_count;
  if (!zt) zt = count_in_disk(rts, band);
  return fam.m - fam.m * *zt;
}

int fredholm_index(const Symbol& sym, cplx lambda, double curve_tol) {
  const HarmonicTerms t = terms_of(sym);
  const double dist = distance_to_curve(t, lambda);
  if (dist <= curve_tol) throw NotFredholmError("fredholm_index: lambda lies on phi(T)");
  const int index = -winding_number(t, lambda).winding;
  if (const auto* fam = std::get_if<SpecialFamilySymbol>(&sym)) {
    const int other = family_index_by_zero_count(*fam, lambda);
    if (other != index) {
      throw NumericIntegrityError("fredholm_index: winding route " + std::to_string(index) +
                                  " disagrees with zero-count route " + std::to_string(other));
    }
  }
  return index;
}

std::string to_string(SpectrumStatus s) {
  switch (s) {
    case SpectrumStatus::in_essential: return "in_essential";
    case SpectrumStatus::in_by_index: return "in_by_index";
    case SpectrumStatus::out_certified: return "out_certified";
    case SpectrumStatus::in_by_eigenvalue_unresolved: return "in_by_eigenvalue_unresolved";
    case SpectrumStatus::assumption_failed: return "assumption_failed";
  }
  return "?";
}

SpectrumVerdict spectrum_membership(const HarmonicPolySymbol& sym, cplx lambda, const SpectrumTolerances& tols) {
  SpectrumVerdict v;
  const HarmonicTerms t = sym.terms();
  v.distance_to_curve = distance_to_curve(t, lambda);
  if (v.distance_to_curve <= tols.curve_tol) {
    v.status = SpectrumStatus::in_essential;
    v.detail = "lambda on phi(T)";
    return v;
  }
  v.winding = winding_number(t, lambda).winding;
  v.index = -*v.winding;
  if (*v.winding != 0) {
    v.status = SpectrumStatus::in_by_index;
    v.detail = "nonzero winding";
    return v;
  }
  const auto ev = poincare_condition(sym, lambda, tols.moduli_rel_tol);
  v.phi_lambda_moduli = ev.moduli;
  if (ev.poincare) {
    v.status = SpectrumStatus::out_certified;
    v.detail = "index 0 and phi_lambda has zeros of distinct moduli";
  } else {
    v.status = SpectrumStatus::assumption_failed;
    v.detail = "index 0 but phi_lambda has zeros of equal modulus; no verdict";
  }
  return v;
}

std::string to_string(EllipseRegion r) {
  switch (r) {
    case EllipseRegion::interior: return "interior";
    case EllipseRegion::boundary: return "boundary";
    case EllipseRegion::exterior: return "exterior";
  }
  return "?";
}

namespace {

cplx rotate(cplx alpha, cplx beta, cplx lambda) {
  const double tau = alpha == cplx{} ? 0.0 : std::arg(alpha);
  return std::polar(1.0, -0.5 * tau) * (lambda - beta);
}

}  // namespace

double ellipse_value(cplx alpha, cplx beta, cplx lambda) {
  const double a = std::abs(alpha);
  if (a == 1.0) return std::numeric_limits<double>::quiet_NaN();
  const cplx zeta = rotate(alpha, beta, lambda);
  const double x = zeta.real() / (1.0 + a), y = zeta.imag() / (1.0 - a);
  return x * x + y * y;
}

EllipseRegion special_family_region(int m, cplx alpha, cplx beta, cplx lambda, double tol) {
  if (m < 1) throw PreconditionError("special_family_region: m must be >= 1");
  const double a = std::abs(alpha);
  if (std::abs(a - 1.0) <= tol) {
    const cplx zeta = rotate(alpha, beta, lambda);
    const bool on = std::abs(zeta.imag()) <= tol && std::abs(zeta.real()) <= 2.0 + tol;
    return on ? EllipseRegion::boundary : EllipseRegion::exterior;
  }
  const double v = ellipse_value(alpha, beta, lambda);
  if (std::abs(v - 1.0) <= tol) return EllipseRegion::boundary;
  return v < 1.0 ? EllipseRegion::interior : EllipseRegion::exterior;
}

EllipseRegion special_family_region(const SpecialFamilySymbol& fam, cplx lambda, double tol) {
  if (fam.gamma != cplx{}) {
    return special_family_region(fam.m, fam.alpha / fam.gamma, fam.beta / fam.gamma, lambda / fam.gamma, tol);
  }
  // Analytic symbol alpha z^m + beta: the closed disk |lambda - beta| <= |alpha|.
  const double d = std::abs(lambda - fam.beta), r = std::abs(fam.alpha);
  if (std::abs(d - r) <= tol) return EllipseRegion::boundary;
  return d < r ? EllipseRegion::interior : EllipseRegion::exterior;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Omega0: return "Omega0";
    case Region::Omega1: return "Omega1";
    case Region::Omega2: return "Omega2";
    case Region::NotFredholm: return "NotFredholm";
  }
  return "?";
}

InequalityChecks region_inequalities(cplx alpha, cplx beta, cplx gamma, double margin) {
  InequalityChecks c;
  const double s = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
  if (s == 0.0) {
    c.predicted = Region::NotFredholm;
    c.decisive = true;
    return c;
  }
  alpha /= s, beta /= s, gamma /= s;
  c.d = std::norm(gamma) - std::norm(alpha);
  c.e = std::abs(alpha * std::conj(beta) - beta * std::conj(gamma));
  c.q = std::norm(beta) * std::norm(beta) - 4.0 * alpha * gamma * std::conj(beta) * std::conj(beta);
  c.q_margin = c.q.real() <= 0.0 ? std::abs(c.q.imag()) : std::abs(c.q);
  if (c.d - c.e > margin) {
    c.predicted = Region::Omega0;
    c.decisive = true;
  } else if (-c.d - c.e > margin) {
    c.predicted = Region::Omega2;
    c.decisive = true;
  } else if (std::abs(c.d) > margin && c.e - std::abs(c.d) > margin) {
    c.predicted = Region::Omega1;
    c.decisive = true;
  } else if (std::abs(c.d) <= margin) {
    // |alpha| = |gamma|: one root inside unless both sit on the circle, which
    // happens exactly when Q is a nonpositive real number.
    const bool q_decisive = c.q_margin > margin;
    c.predicted = q_decisive ? Region::Omega1 : Region::NotFredholm;
    c.decisive = q_decisive && std::abs(std::abs(c.d) - c.e) > margin;
  } else {
    // (|alpha|^2 - |gamma|^2)^2 = |alpha conj(beta) - beta conj(gamma)|^2.
    c.predicted = Region::Omega1;
    c.decisive = false;
  }
  return c;
}

RegionVerdict classify_projective(int m, cplx alpha, cplx beta, cplx gamma, const RegionTolerances& tols) {
  if (m < 1) throw PreconditionError("classify_projective: m must be >= 1");
  RegionVerdict v;
  v.root_moduli = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  v.inequality_checks = region_inequalities(alpha, beta, gamma, tols.margin);
  const double s = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
  if (s == 0.0) {
    v.region = Region::NotFredholm;
    return v;
  }
  const CPoly q{gamma / s, beta / s, alpha / s};
  const auto rts = q.degree() >= 1 ? roots(q) : std::vector<cplx>{};
  for (std::size_t i = 0; i < rts.size() && i < 2; ++i) v.root_moduli[i] = std::abs(rts[i]);
  const auto count = count_in_disk(rts, tols.circle_band);
  if (!count) {
    v.region = Region::NotFredholm;
  } else {
    static constexpr Region by_count[] = {Region::Omega0, Region::Omega1, Region::Omega2};
    v.region = by_count[*count];
    v.index = m * (1 - *count);
  }
  auto& c = v.inequality_checks;
  c.agrees = !c.decisive || c.predicted == v.region;
  return v;
}

std::string to_string(Invertibility v) {
  switch (v) {
    case Invertibility::invertible: return "invertible";
    case Invertibility::not_invertible: return "not_invertible";
    case Invertibility::not_fredholm: return "not_fredholm";
    case Invertibility::not_applicable: return "not_applicable";
  }
  return "?";
}

InvertibilityVerdict invertibility_criterion(const HarmonicPolySymbol& sym, double circle_tol, double moduli_rel_tol) {
  InvertibilityVerdict v;
  const auto ev = poincare_condition(sym, cplx{}, moduli_rel_tol);
  v.roots = ev.roots;
  v.circle_gap = circle_gap(v.roots);
  const auto count = count_in_disk(v.roots, circle_tol);
  if (!count) {
    v.status = Invertibility::not_fredholm;
    return v;
  }
  if (!ev.poincare) {
    v.status = Invertibility::not_applicable;
    return v;
  }
  v.zeros_in_disk = *count;
  v.status = *count == sym.m() ? Invertibility::invertible : Invertibility::not_invertible;
  return v;
}

}  // namespace bergman
