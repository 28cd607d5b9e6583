#pragma once

#include <Eigen/Dense>
#include <string>

namespace shapeservo {

enum class Kind { Centerline, Contour, Surface };
enum class BasisFamily { Polynomial, Bernstein, CoxDeBoor, Trigonometric };
enum class FitMethod { Lsm, Mls };
enum class Provenance { LsmCurve, LsmSurface, MlsCurve, MlsSurface };

// Kernels ship in two flavors: a plain serial loop kept as the reference,
// and the OpenMP version used everywhere else. Both produce identical
// results; tests compare them directly.
enum class ExecPolicy { Serial, Parallel };

struct BasisSpec {
  BasisFamily family = BasisFamily::Polynomial;
  int order_n = 1;   // curves
  int order_nx = 1;  // surfaces, x direction
  int order_ny = 1;  // surfaces, y direction
};

struct MlsConfig {
  double support_radius = 0.2;  // normalized arc-length units for curves, meters for surfaces
  int pca_rank = 1;
};

// Ordered, fixed-cardinality point set observed from the plant.
// Curves carry normalized arc-length parameters; surfaces leave them empty.
struct ShapeSample {
  Eigen::Matrix3Xd points;  // one column per point
  Kind kind = Kind::Centerline;
  Eigen::VectorXd arc_params;

  Eigen::Index size() const { return points.cols(); }
  bool is_curve() const { return kind != Kind::Surface; }

  // Stacked 3N view (x1,y1,z1,x2,...) matching the fitting stage's layout.
  Eigen::VectorXd stacked() const {
    return Eigen::Map<const Eigen::VectorXd>(points.data(), points.size());
  }
};

// Compact shape descriptor. For MLS provenance the vector holds the
// vectorized principal block of the coefficient field; the remaining
// members carry the frozen context needed to map values back to a shape.
struct FeatureVector {
  Eigen::VectorXd values;
  Provenance provenance = Provenance::LsmCurve;
  BasisSpec basis;
  MlsConfig mls;

  // MLS-only reconstruction context.
  Eigen::VectorXd pca_mean;        // column mean of the coefficient field
  Eigen::MatrixXd pca_loadings;    // per-node loadings, N x m
  Eigen::VectorXd singular_values; // of the centered field, nonincreasing

  // Fit-node parameters: rho for curves, (x,y) columns for surfaces.
  Eigen::VectorXd node_rho;
  Eigen::Matrix2Xd node_xy;

  Eigen::Index length() const { return values.size(); }
  bool is_mls() const {
    return provenance == Provenance::MlsCurve || provenance == Provenance::MlsSurface;
  }
  bool is_curve() const {
    return provenance == Provenance::LsmCurve || provenance == Provenance::MlsCurve;
  }
};

// Cumulative chord length normalized to [0,1]; rho_1 = 0, rho_N = 1.
Eigen::VectorXd chord_length_params(const Eigen::Matrix3Xd& points);

// Convenience constructor computing arc parameters for curve kinds.
ShapeSample make_sample(const Eigen::Matrix3Xd& points, Kind kind);

std::string to_string(Kind k);
std::string to_string(BasisFamily f);
std::string to_string(FitMethod m);
Kind kind_from_string(const std::string& s);
BasisFamily family_from_string(const std::string& s);
FitMethod method_from_string(const std::string& s);

}  // namespace shapeservo
