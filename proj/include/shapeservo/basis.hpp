#pragma once

#include <Eigen/Dense>

#include "shapeservo/types.hpp"

namespace shapeservo {

// Evaluates the j-th regression function B_{j,n} of the given family at rho.
// Curves use rho in [0,1]; surface fits pass raw planar coordinates, which
// every family accepts (the formulas extend off the unit interval).
double basis_eval(const BasisSpec& spec, int j, double rho);

// Scalar design row [B_{0,n}(rho), ..., B_{n,n}(rho)].
Eigen::RowVectorXd basis_row(const BasisSpec& spec, double rho);

// N x (n+1) scalar regression matrix with one row per parameter value.
Eigen::MatrixXd basis_matrix(const BasisSpec& spec, const Eigen::VectorXd& rhos);

// Surface design row: products B_{j,nx}(x) B_{l,ny}(y) ordered with j outer
// and l inner, matching the feature layout q_00, q_01, ..., q_{nx ny}.
Eigen::RowVectorXd surface_basis_row(const BasisSpec& spec, double x, double y);

// N x (nx+1)(ny+1) surface regression matrix.
Eigen::MatrixXd surface_basis_matrix(const BasisSpec& spec, const Eigen::Matrix2Xd& xy);

double binomial_coefficient(int n, int k);

}  // namespace shapeservo
