#pragma once

#include "bergman/cpoly.hpp"

#include <Eigen/Dense>

#include <vector>

namespace bergman {

/// Columns from a list of equally long coefficient vectors (truncated to rows).
Eigen::MatrixXcd columns(const std::vector<std::vector<cplx>>& vs, int rows);

/// Sine of the largest principal angle between the column spans of a and b:
/// the larger of ||(I - Qa Qa*) Qb|| and ||(I - Qb Qb*) Qa||. Both must have
/// full column rank; a rank deficit counts as angle pi/2 (returns 1).
double subspace_angle_sin(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double rank_tol = 1e-10);

}  // namespace bergman
