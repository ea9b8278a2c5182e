#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative method fails to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a quantity that is real (or finite) in exact arithmetic is not,
/// beyond the allowed round-off.
class NumericIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense complex polynomial a_0 + a_1 z + ... + a_n z^n (ascending powers).
///
/// Trailing exact zeros are trimmed on construction, so the last stored
/// coefficient is nonzero unless the polynomial is identically zero, in which
/// case coeffs() is empty and degree() is -1.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<cplx> coeffs);
  CPoly(std::initializer_list<cplx> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero beyond the degree.
  cplx operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
  cplx leading() const;

  /// max_k |a_k|, zero for the zero polynomial.
  double scale() const;

  /// Horner evaluation.
  cplx eval(cplx z) const;
  cplx operator()(cplx z) const { return eval(z); }

  CPoly derivative() const;
  CPoly scaled(cplx c) const;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

/// Options for the simultaneous-iteration root finder.
struct RootOptions {
  double tol = 1e-9;      // residual bound, relative to CPoly::scale()
  int max_iterations = 500;
};

/// All roots of p with multiplicity, ordered by (modulus, argument).
///
/// Aberth-Ehrlich iteration, falling back to the companion-matrix eigenvalues
/// when the iteration stalls. Every root r satisfies
/// |p(r)| / max(1, |r|)^n <= tol * p.scale(); ConvergenceError otherwise.
std::vector<cplx> roots(const CPoly& p, const RootOptions& opts = {});
std::vector<cplx> roots(const CPoly& p, double tol);

/// Backward-error residual used by roots(): |p(r)| / (max(1,|r|)^n * scale).
double scaled_residual(const CPoly& p, cplx r);

/// Sort by modulus, then argument; moduli within 1e-12 relative count as tied.
void sort_by_modulus(std::vector<cplx>& zs);

/// Number of sign changes in seq once zero entries are removed.
int sign_variations(std::span<const double> seq);

struct SchurCohnReport {
  std::vector<double> dets;            // M_1 ... M_n of p as given
  int variations = 0;                  // N(1, M_1, ..., M_n)
  std::optional<int> in_disk_count;    // empty when some |M_k| <= degeneracy tolerance

  bool indeterminate() const { return !in_disk_count.has_value(); }
};

/// Zeros of p inside the open unit disk counted from the determinants
/// M_k = det(B_k^* B_k - A_k^* A_k), A_k/B_k the upper-triangular Toeplitz
/// matrices built from (a_0..a_{k-1}) and (conj a_n .. conj a_{n-k+1}).
///
/// The polynomial is normalised by its largest coefficient first, so
/// degeneracy_tol is absolute on that scale.
SchurCohnReport schur_cohn(const CPoly& p, double degeneracy_tol = 1e-10);

/// True iff all pairwise modulus gaps exceed rel_tol * max modulus.
bool distinct_moduli(std::span<const cplx> zs, double rel_tol = 1e-6);

/// Number of roots with |r| < 1; empty when some root lies within band of
/// the unit circle.
std::optional<int> count_in_disk(std::span<const cplx> zs, double band);

/// Smallest | |r| - 1 | over the roots; +inf for an empty list.
double circle_gap(std::span<const cplx> zs);

}  // namespace bergman
