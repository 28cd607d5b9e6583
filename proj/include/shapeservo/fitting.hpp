#pragma once

#include <Eigen/Dense>

#include "shapeservo/basis.hpp"
#include "shapeservo/errors.hpp"
#include "shapeservo/pca.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

// Compact-support cubic weight; continuous at 0.5 and 1, zero beyond 1.
double mls_weight(double epsilon);

// Full experiment-level fitting choice.
struct FitSpec {
  FitMethod method = FitMethod::Lsm;
  BasisSpec basis;
  MlsConfig mls;
};

// One-shot least-squares curve fit; feature layout [p_0; p_1; ...; p_n] with
// each p_j a 3-vector, so p = 3(n+1).
FeatureVector fit_curve_lsm(const ShapeSample& sample, const BasisSpec& spec);

// Depth-over-plane least-squares surface fit; p = (nx+1)(ny+1).
FeatureVector fit_surface_lsm(const ShapeSample& sample, const BasisSpec& spec);

// Per-node weighted coefficient solves, one column per node. This is the
// data-parallel kernel behind both MLS fits.
Eigen::MatrixXd mls_curve_coefficient_field(const ShapeSample& sample, const BasisSpec& spec,
                                            const MlsConfig& cfg,
                                            ExecPolicy exec = ExecPolicy::Parallel);
Eigen::MatrixXd mls_surface_coefficient_field(const ShapeSample& sample, const BasisSpec& spec,
                                              const MlsConfig& cfg,
                                              ExecPolicy exec = ExecPolicy::Parallel);

// MLS fit = coefficient field + rank-m PCA compression; p = 3m(n+1).
FeatureVector fit_curve_mls(const ShapeSample& sample, const BasisSpec& spec, const MlsConfig& cfg,
                            ExecPolicy exec = ExecPolicy::Parallel);

// Surface variant; p = m(nx+1)(ny+1).
FeatureVector fit_surface_mls(const ShapeSample& sample, const BasisSpec& spec,
                              const MlsConfig& cfg, ExecPolicy exec = ExecPolicy::Parallel);

// Evaluates the fitted curve at the given parameters (each in [0,1]).
// MLS features back-project the PCA block and use the nearest fit node's
// coefficients at each query.
Eigen::Matrix3Xd reconstruct_curve(const FeatureVector& feature, const Eigen::VectorXd& rhos);

// Evaluates the fitted depth field at the given planar coordinates.
Eigen::VectorXd reconstruct_surface(const FeatureVector& feature, const Eigen::Matrix2Xd& xy);

// Full predicted sample at the reference sample's parameters (curves) or
// planar coordinates (surfaces; x,y are copied through).
ShapeSample reconstruct_shape(const FeatureVector& feature, const ShapeSample& reference);

// Sum over points of the pointwise reconstruction distance.
double reconstruction_error(const ShapeSample& sample, const FeatureVector& feature);

// Kind/method dispatch used by the servo loop and the benchmarks.
FeatureVector fit_shape(const ShapeSample& sample, const FitSpec& spec,
                        ExecPolicy exec = ExecPolicy::Parallel);

// Feature dimension for a given configuration without running a fit.
int feature_length(Kind kind, const FitSpec& spec);

}  // namespace shapeservo
