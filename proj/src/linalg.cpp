#include "bergman/linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>

namespace bergman {

Eigen::MatrixXcd columns(const std::vector<std::vector<cplx>>& vs, int rows) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(rows, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t c = 0; c < vs.size(); ++c) {
    for (int r = 0; r < rows && r < static_cast<int>(vs[c].size()); ++r) a(r, c) = vs[c][r];
  }
  return a;
}

namespace {

// Orthonormal basis of the column span, or an empty matrix on rank deficit.
Eigen::MatrixXcd orthonormal_basis(Eigen::MatrixXcd a, double rank_tol) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    const double nrm = a.col(c).norm();
    if (nrm == 0.0) return {};
    a.col(c) /= nrm;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  qr.setThreshold(rank_tol);
  if (qr.rank() < a.cols()) return {};
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  return q;
}

double residual_norm(const Eigen::MatrixXcd& qa, const Eigen::MatrixXcd& qb) {
  const Eigen::MatrixXcd r = qb - qa * (qa.adjoint() * qb);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

double subspace_angle_sin(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double rank_tol) {
  if (a.rows() != b.rows()) throw PreconditionError("subspace_angle_sin: row counts differ");
  if (a.cols() == 0 && b.cols() == 0) return 0.0;
  const Eigen::MatrixXcd qa = orthonormal_basis(a, rank_tol);
  const Eigen::MatrixXcd qb = orthonormal_basis(b, rank_tol);
  if (qa.size() == 0 || qb.size() == 0 || a.cols() != b.cols()) return 1.0;
  return std::min(1.0, std::max(residual_norm(qa, qb), residual_norm(qb, qa)));
}

}  // namespace bergman
