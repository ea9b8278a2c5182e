#pragma once

#include "bergman/stream.hpp"
#include "bergman/symbol.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bergman {

// Kernel recursions. A kernel element g = sum d_k z^k of T_phi is fixed by its
// seed block d_0..d_{m-1}; every later coefficient follows from the
// coefficient form of T_phi g = 0.

/// T_{conj(z)^m + f} g = 0 with f = sum a_i z^i:
/// d_{m+k} = -((m+1+k)/(k+1)) sum_{i=0}^k a_{k-i} d_i, k = 0..K-m.
CoefficientStream recursion_analytic_perturbation(int m, std::span<const cplx> f_coeffs,
                                                  std::span<const cplx> seed, int K);

/// T_phi g = 0 for phi = conj(q) + p, solved for d_{m+k} from
/// (k+1)/(m+k+1) d_{m+k} + sum_{i=1}^{m-1} a_{i-m} (k+1)/(m-i+k+1) d_{m-i+k}
///   + sum_{i=0}^n a_i d_{k-i} = 0   (d_j = 0 for j < 0).
CoefficientStream recursion_general(const HarmonicPolySymbol& sym, std::span<const cplx> seed, int K);

/// conj(z)^m + alpha z^m + beta through b_k = d_k/(k+1): starting from
/// b_{k0} = 1, b_{k0+m} = -beta, then for n >= 1
/// b_{k0+(n+1)m} = -beta b_{k0+nm} - alpha (k0+(n-1)m+1)/(k0+nm+1) b_{k0+(n-1)m}.
/// Coefficients off the k0 + m N lattice are zero.
CoefficientStream recursion_special_family(int m, cplx alpha, cplx beta, int k0, int K);

/// The j-th basis candidate of ker T_{conj(z)^m + c z^n}: 1 at z^j and
/// (-c)^k prod_{i=1}^k (i(m+n)+1+j)/(in+(i-1)m+1+j) at z^{k(m+n)+j}.
CoefficientStream closed_form_kernel_czn(int m, int n, cplx c, int j, int K);

enum class Membership { member, non_member, undecided };
std::string to_string(Membership s);

struct MembershipVerdict {
  Membership status = Membership::undecided;
  std::optional<double> estimated_ratio_modulus;  // growth per m coefficients
  int terms_used = 0;
  std::string method;  // "finite", "ratio", "tail" or "none"
  std::optional<double> tail_exponent;             // fitted decay exponent of |d_k|^2/(k+1)
};

struct MembershipOptions {
  double ratio_tol = 1e-3;        // stabilisation spread and the band around rho = 1
  int tail_window = 32;           // trailing blocks inspected by the ratio test
  double tail_fraction = 0.25;    // share of the stream used by the partial-sum test
  double divergent_exponent = 1.02;  // terms decaying no faster than k^-p, p <= this: divergent
  double convergent_exponent = 1.5;  // p >= this: summable
};

/// Decides whether sum |d_k|^2/(k+1) converges.
///
/// Ratio test: block maxima over blocks of block_length() coefficients give a
/// geometric growth rate rho (per m coefficients). If the last tail_window
/// block ratios agree to ratio_tol, rho < 1 - ratio_tol is a member and
/// rho > 1 + ratio_tol a non-member. Otherwise the decay exponent p of the
/// terms over the final tail_fraction of the stream is compared with the
/// harmonic profile 1/k.
MembershipVerdict l2_membership(const CoefficientStream& s, const MembershipOptions& opts = {});

struct KernelOptions {
  int K = 20000;
  MembershipOptions membership;
};

struct KernelDimension {
  std::optional<int> dim;                    // empty when any seed is undecided
  std::vector<MembershipVerdict> per_seed;   // seed e_0 .. e_{m-1}
  std::vector<CoefficientStream> streams;    // one per seed
  std::vector<int> member_seeds;
  // When non-member seed streams overlap, combinations of them can still be
  // square summable. Growth per m coefficients of that span, fastest first,
  // and how many of those rates lie below 1 (added to dim).
  std::vector<double> coupled_ratios;
  int coupled_dims = 0;

  bool undecided() const { return !dim.has_value(); }
};

/// Runs the recursion from each unit seed and counts members. If two or more
/// seeds diverge with overlapping supports, the growth rates of their span are
/// measured jointly (periodic QR re-orthonormalisation); rates below
/// 1 - ratio_tol count as extra kernel dimensions, rates inside the band leave
/// the verdict undecided. Streams are returned per seed only.
KernelDimension kernel_dimension(const HarmonicPolySymbol& sym, const KernelOptions& opts = {});
KernelDimension kernel_dimension(int m, std::span<const cplx> f_coeffs, const KernelOptions& opts = {});
KernelDimension kernel_dimension(const SpecialFamilySymbol& sym, const KernelOptions& opts = {});

struct CoburnVerdict {
  int dim_ker = 0;
  int dim_coker = 0;
  bool coburn = true;
};

/// Kernel and cokernel dimensions of T_{conj(z)^m + c z^n}.
CoburnVerdict coburn_classify(int m, int n, cplx c);

/// Formal solution of T_{conj(z)^m + f} g = h from a free seed block:
/// d_{m+k} = ((m+k+1)/(k+1)) (c_k - sum_{i=0}^k a_{k-i} d_i), k = 0..K-m,
/// K = h_coeffs.size() - 1. No rescaling is applied.
CoefficientStream range_solve(int m, std::span<const cplx> f_coeffs, std::span<const cplx> h_coeffs,
                              std::span<const cplx> seed);

enum class Injectivity { trivial_kernel_certified, not_applicable, undecided };
std::string to_string(Injectivity s);

struct InjectivityVerdict {
  Injectivity status = Injectivity::undecided;
  bool poincare = false;
  std::optional<int> zeros_in_disk;   // of phi_0
  std::vector<cplx> roots;
  std::string reason;
};

struct InjectivityOptions {
  double moduli_rel_tol = 1e-6;
  double circle_band = 1e-9;
};

/// Trivial-kernel certificate from phi_0: zeros of distinct moduli, at least
/// one of them (and at least m of them, see README) inside the disk.
InjectivityVerdict injectivity_test(const HarmonicPolySymbol& sym, const InjectivityOptions& opts = {});

}  // namespace bergman
