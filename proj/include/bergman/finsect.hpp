#pragma once

#include "bergman/symbol.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <span>
#include <vector>

namespace bergman {

/// Exact coefficient action of T_phi on g = sum d_k z^k (raw monomial basis):
/// c_k = sum_s conj_part[s] (k+1)/(s+k+1) d_{s+k} + sum_i analytic[i] d_{k-i},
/// k = 0..K with K = d.size() - 1. Coefficients beyond K are taken as zero,
/// so c_k is exact for k <= K - conj_degree().
std::vector<cplx> apply_symbol(const HarmonicTerms& t, std::span<const cplx> d);
std::vector<cplx> apply_symbol(const Symbol& sym, std::span<const cplx> d);

/// Max coefficient discrepancy between three evaluations of T*_{z^m} g for g
/// with an m-fold zero at the origin: the projection formula, and the two
/// integral forms z^{-(m+1)} int_0^z [w g' - (m-1) g] dw and
/// g/z^m - m z^{-(m+1)} int_0^z g, each carried out on polynomial coefficients.
/// Throws PreconditionError if one of d_0..d_{m-1} is nonzero.
double tstar_zm_check(int m, std::span<const cplx> g_coeffs);

/// The three routes individually, for inspection.
std::vector<cplx> tstar_zm_projection(int m, std::span<const cplx> g_coeffs);
std::vector<cplx> tstar_zm_integral_form1(int m, std::span<const cplx> g_coeffs);
std::vector<cplx> tstar_zm_integral_form2(int m, std::span<const cplx> g_coeffs);

/// n x n section of T_phi in the orthonormal basis e_k = sqrt(k+1) z^k.
/// z^s contributes sqrt(k+1)/sqrt(k+s+1) at (k+s, k); conj(z)^s contributes
/// sqrt(k-s+1)/sqrt(k+1) at (k-s, k).
struct ToeplitzTruncation {
  int n = 0;
  Eigen::MatrixXcd entries;
};

ToeplitzTruncation truncation(const HarmonicTerms& t, int n);
ToeplitzTruncation truncation(const Symbol& sym, int n);

/// Rectangular section: rows 0..n+rows_extra-1, columns 0..n-1. With
/// rows_extra >= the analytic degree this is T_phi restricted to polynomials
/// of degree < n, without truncation error.
Eigen::MatrixXcd rectangular_section(const HarmonicTerms& t, int n, int rows_extra);

/// sigma_min(T - lambda I) by dense SVD.
double min_singular_value(const ToeplitzTruncation& T, cplx lambda);

/// sigma_min of the rectangular section of T_phi - lambda: the infimum of
/// ||(T_phi - lambda) g|| / ||g|| over polynomials g of degree < n. It
/// decreases in n and tends to the lower bound of T_phi - lambda, so a
/// kernel shows up as collapse towards zero.
double injectivity_modulus(const HarmonicTerms& t, int n, cplx lambda);

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& a);
void write_matrix_binary(std::ostream& os, const Eigen::MatrixXcd& a);

}  // namespace bergman
