#include "shapeservo/types.hpp"

#include <stdexcept>

namespace shapeservo {

Eigen::VectorXd chord_length_params(const Eigen::Matrix3Xd& points) {
  const Eigen::Index n = points.cols();
  if (n < 2) throw std::invalid_argument("chord_length_params: need at least 2 points");
  Eigen::VectorXd rho(n);
  rho[0] = 0.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    rho[i] = rho[i - 1] + (points.col(i) - points.col(i - 1)).norm();
  }
  const double total = rho[n - 1];
  if (total <= 0.0) {
    throw std::invalid_argument("chord_length_params: degenerate curve (all points coincide)");
  }
  rho /= total;
  rho[n - 1] = 1.0;
  return rho;
}

ShapeSample make_sample(const Eigen::Matrix3Xd& points, Kind kind) {
  ShapeSample sample;
  sample.points = points;
  sample.kind = kind;
  if (kind != Kind::Surface) sample.arc_params = chord_length_params(points);
  return sample;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Centerline: return "centerline";
    case Kind::Contour: return "contour";
    case Kind::Surface: return "surface";
  }
  return "?";
}

std::string to_string(BasisFamily f) {
  switch (f) {
    case BasisFamily::Polynomial: return "polynomial";
    case BasisFamily::Bernstein: return "bernstein";
    case BasisFamily::CoxDeBoor: return "coxdeboor";
    case BasisFamily::Trigonometric: return "trigonometric";
  }
  return "?";
}

std::string to_string(FitMethod m) {
  return m == FitMethod::Lsm ? "lsm" : "mls";
}

Kind kind_from_string(const std::string& s) {
  if (s == "centerline") return Kind::Centerline;
  if (s == "contour") return Kind::Contour;
  if (s == "surface") return Kind::Surface;
  throw std::invalid_argument("unknown shape kind: " + s);
}

BasisFamily family_from_string(const std::string& s) {
  if (s == "polynomial") return BasisFamily::Polynomial;
  if (s == "bernstein") return BasisFamily::Bernstein;
  if (s == "coxdeboor") return BasisFamily::CoxDeBoor;
  if (s == "trigonometric") return BasisFamily::Trigonometric;
  throw std::invalid_argument("unknown basis family: " + s);
}

FitMethod method_from_string(const std::string& s) {
  if (s == "lsm") return FitMethod::Lsm;
  if (s == "mls") return FitMethod::Mls;
  throw std::invalid_argument("unknown fit method: " + s);
}

}  // namespace shapeservo
