#include "shapeservo/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shapeservo {

double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return c;
}

namespace {

double eval_polynomial(int j, double rho) {
  // rho^j with the 0^0 = 1 convention for the constant term
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= rho;
  return v;
}

double eval_bernstein(int n, int j, double rho) {
  return binomial_coefficient(n, j) * std::pow(1.0 - rho, n - j) * eval_polynomial(j, rho);
}

double eval_cox_deboor(int n, int j, double rho) {
  // Truncated-power form of the cardinal B-spline: terms with a negative
  // base contribute zero.
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  double sum = 0.0;
  double sign = 1.0;
  for (int l = 0; l <= n - j; ++l, sign = -sign) {
    const double base = rho + static_cast<double>(n - j - l);
    if (base >= 0.0) {
      sum += sign * binomial_coefficient(n + 1, l) * std::pow(base, n);
    }
  }
  return sum / factorial;
}

double eval_trigonometric(int j, double rho) {
  if (j == 0) return 1.0;
  if (j % 2 == 1) return std::cos(0.5 * (j + 1) * rho);
  return std::sin(0.5 * j * rho);
}

}  // namespace

double basis_eval(const BasisSpec& spec, int j, double rho) {
  const int n = spec.order_n;
  if (j < 0 || j > n) {
    throw std::domain_error("basis_eval: index j=" + std::to_string(j) +
                            " outside [0," + std::to_string(n) + "]");
  }
  switch (spec.family) {
    case BasisFamily::Polynomial: return eval_polynomial(j, rho);
    case BasisFamily::Bernstein: return eval_bernstein(n, j, rho);
    case BasisFamily::CoxDeBoor: return eval_cox_deboor(n, j, rho);
    case BasisFamily::Trigonometric: return eval_trigonometric(j, rho);
  }
  throw std::logic_error("basis_eval: unreachable family");
}

Eigen::RowVectorXd basis_row(const BasisSpec& spec, double rho) {
  Eigen::RowVectorXd row(spec.order_n + 1);
  for (int j = 0; j <= spec.order_n; ++j) row[j] = basis_eval(spec, j, rho);
  return row;
}

Eigen::MatrixXd basis_matrix(const BasisSpec& spec, const Eigen::VectorXd& rhos) {
  Eigen::MatrixXd B(rhos.size(), spec.order_n + 1);
  for (Eigen::Index i = 0; i < rhos.size(); ++i) B.row(i) = basis_row(spec, rhos[i]);
  return B;
}

Eigen::RowVectorXd surface_basis_row(const BasisSpec& spec, double x, double y) {
  BasisSpec bx = spec;
  bx.order_n = spec.order_nx;
  BasisSpec by = spec;
  by.order_n = spec.order_ny;
  Eigen::RowVectorXd row((spec.order_nx + 1) * (spec.order_ny + 1));
  int col = 0;
  for (int j = 0; j <= spec.order_nx; ++j) {
    const double bxj = basis_eval(bx, j, x);
    for (int l = 0; l <= spec.order_ny; ++l) {
      row[col++] = bxj * basis_eval(by, l, y);
    }
  }
  return row;
}

Eigen::MatrixXd surface_basis_matrix(const BasisSpec& spec, const Eigen::Matrix2Xd& xy) {
  Eigen::MatrixXd D(xy.cols(), (spec.order_nx + 1) * (spec.order_ny + 1));
  for (Eigen::Index i = 0; i < xy.cols(); ++i) {
    D.row(i) = surface_basis_row(spec, xy(0, i), xy(1, i));
  }
  return D;
}

}  // namespace shapeservo
