#pragma once

#include "bergman/symbol.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman {

/// lambda lies (numerically) on the essential spectrum, so T_phi - lambda is
/// not Fredholm and no index exists.
class NotFredholmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WindingResult {
  int winding = 0;
  double min_distance_to_curve = 0.0;
};

/// Winding number of a closed sampled curve (last point joins the first)
/// around lambda. Requires >= 64 samples and argument increments below pi/2
/// (PreconditionError otherwise). NotFredholmError when lambda is within
/// on_curve_tol of a sample; ConvergenceError when the total is more than 0.1
/// away from an integer.
WindingResult winding_number(std::span<const cplx> curve, cplx lambda, double on_curve_tol = 1e-9);

/// Winding of phi(T) around lambda, resampling phi until every increment is
/// below pi/2 (ConvergenceError past max_samples).
WindingResult winding_number(const HarmonicTerms& t, cplx lambda, int samples = 512, int max_samples = 1 << 20);
WindingResult winding_number(const Symbol& sym, cplx lambda, int samples = 512);

/// dist(lambda, phi(T)): 512 samples, then two local passes of 4096 samples
/// around the best one.
double distance_to_curve(const HarmonicTerms& t, cplx lambda);

/// Index of T_phi - lambda = -wind(phi(T), lambda). For the special family it
/// is cross-checked against m - m * #{t in D : gamma + (beta - lambda) t + alpha t^2 = 0}
/// (NumericIntegrityError on disagreement). NotFredholmError when lambda is
/// within curve_tol of phi(T).
int fredholm_index(const Symbol& sym, cplx lambda, double curve_tol = 1e-6);

/// The zero-count route alone: m - m * (t-roots in D), Schur-Cohn first and
/// the root finder when Schur-Cohn is indeterminate.
int family_index_by_zero_count(const SpecialFamilySymbol& fam, cplx lambda, double band = 1e-9);

/// gamma conj(z)^m + alpha z^m + beta  ->  conj(alpha) conj(z)^m + conj(gamma) z^m + conj(beta).
SpecialFamilySymbol adjoint_symbol(const SpecialFamilySymbol& fam);

enum class SpectrumStatus { in_essential, in_by_index, out_certified, in_by_eigenvalue_unresolved, assumption_failed };
std::string to_string(SpectrumStatus s);

struct SpectrumTolerances {
  double curve_tol = 1e-6;
  double moduli_rel_tol = 1e-6;
};

struct SpectrumVerdict {
  SpectrumStatus status = SpectrumStatus::assumption_failed;
  double distance_to_curve = 0.0;
  std::optional<int> winding;
  std::optional<int> index;
  std::vector<double> phi_lambda_moduli;  // zeros of phi_lambda, when examined
  std::string detail;

  bool in_spectrum() const {
    return status == SpectrumStatus::in_essential || status == SpectrumStatus::in_by_index;
  }
};

/// Membership of lambda in sigma(T_phi): on phi(T) -> in_essential; nonzero
/// winding -> in_by_index; zero winding with phi_lambda Poincare ->
/// out_certified; zero winding otherwise -> assumption_failed.
SpectrumVerdict spectrum_membership(const HarmonicPolySymbol& sym, cplx lambda, const SpectrumTolerances& tols = {});

enum class EllipseRegion { interior, boundary, exterior };
std::string to_string(EllipseRegion r);

/// Position of lambda relative to the closure of phi(D) for
/// phi = conj(z)^m + alpha z^m + beta (independent of m). With
/// alpha = |alpha| e^{i tau} and zeta = e^{-i tau/2}(lambda - beta) the image
/// is (Re zeta)^2/(1+|alpha|)^2 + (Im zeta)^2/(1-|alpha|)^2 < 1; for
/// |alpha| = 1 it flattens to the segment Im zeta = 0, |Re zeta| <= 2, whose
/// points are reported as boundary.
EllipseRegion special_family_region(int m, cplx alpha, cplx beta, cplx lambda, double tol = 1e-9);
/// Any gamma: gamma != 0 rescales to the case above, gamma = 0 gives the disk
/// |lambda - beta| <= |alpha|.
EllipseRegion special_family_region(const SpecialFamilySymbol& fam, cplx lambda, double tol = 1e-9);
/// Ellipse quadratic form value (< 1 inside); NaN when |alpha| = 1.
double ellipse_value(cplx alpha, cplx beta, cplx lambda);

enum class Region { Omega0, Omega1, Omega2, NotFredholm };
std::string to_string(Region r);

/// Inequality-side evaluation on (alpha, beta, gamma) scaled to max modulus 1.
/// D = |gamma|^2 - |alpha|^2, E = |alpha conj(beta) - beta conj(gamma)|,
/// Q = |beta|^4 - 4 alpha gamma conj(beta)^2.
struct InequalityChecks {
  double d = 0.0;
  double e = 0.0;
  cplx q{};
  double q_margin = 0.0;  // distance of Q from the ray (-inf, 0]
  std::optional<Region> predicted;
  bool decisive = false;  // every margin used exceeds the tolerance
  bool agrees = true;     // predicted matches the root path (when decisive)
};

struct RegionVerdict {
  Region region = Region::NotFredholm;
  std::optional<int> index;
  std::array<double, 2> root_moduli{};  // +inf for roots lost to a degree drop
  InequalityChecks inequality_checks;
};

struct RegionTolerances {
  double circle_band = 1e-9;
  double margin = 1e-9;
};

/// Region of gamma T_{conj(z)^m} + alpha T_{z^m} + beta I from the roots of
/// alpha t^2 + beta t + gamma (0, 1, 2 in D -> Omega0, Omega1, Omega2 with
/// index m, 0, -m), with the inequality predicates recorded alongside.
RegionVerdict classify_projective(int m, cplx alpha, cplx beta, cplx gamma, const RegionTolerances& tols = {});

/// Inequality predicates alone.
InequalityChecks region_inequalities(cplx alpha, cplx beta, cplx gamma, double margin = 1e-9);

enum class Invertibility { invertible, not_invertible, not_fredholm, not_applicable };
std::string to_string(Invertibility v);

struct InvertibilityVerdict {
  Invertibility status = Invertibility::not_applicable;
  std::optional<int> zeros_in_disk;
  double circle_gap = 0.0;
  std::vector<cplx> roots;
};

/// T_phi is invertible iff phi_0 has exactly m zeros in D and none on T,
/// provided phi_0 has zeros of distinct moduli (not_applicable otherwise).
InvertibilityVerdict invertibility_criterion(const HarmonicPolySymbol& sym, double circle_tol = 1e-9,
                                             double moduli_rel_tol = 1e-6);

}  // namespace bergman
