#include "shapeservo/fitting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapeservo {

namespace {

constexpr double kNormalConditionLimit = 1e12;

// Least squares through a rank-revealing SVD rather than explicit normal
// equations; the condition test is applied to A^T A, i.e. squared ratio.
Eigen::MatrixXd svd_least_squares(const Eigen::MatrixXd& A, const Eigen::MatrixXd& rhs,
                                  const char* context) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sigma = svd.singularValues();
  const double smax = sigma[0];
  const double smin = sigma[sigma.size() - 1];
  if (!(smin > 0.0) || (smax / smin) * (smax / smin) > kNormalConditionLimit) {
    throw singular_fit_error(std::string(context) +
                             ": normal matrix condition exceeds 1e12 (over-parameterized fit)");
  }
  return svd.solve(rhs);
}

void require_curve(const ShapeSample& sample, const char* context) {
  if (sample.kind == Kind::Surface) {
    throw std::invalid_argument(std::string(context) + ": expected a curve sample");
  }
  if (sample.arc_params.size() != sample.size()) {
    throw std::invalid_argument(std::string(context) + ": arc parameters missing or wrong length");
  }
}

void require_surface(const ShapeSample& sample, const char* context) {
  if (sample.kind != Kind::Surface) {
    throw std::invalid_argument(std::string(context) + ": expected a surface sample");
  }
}

Eigen::Matrix2Xd surface_xy(const ShapeSample& sample) {
  return sample.points.topRows<2>();
}

// Weighted least squares restricted to positive-weight rows. Throws
// support_coverage_error when fewer support rows than unknowns remain.
Eigen::MatrixXd weighted_local_solve(const Eigen::MatrixXd& design, const Eigen::MatrixXd& rhs,
                                     const Eigen::VectorXd& weights, double node_parameter,
                                     const char* context) {
  const Eigen::Index cols = design.cols();
  std::vector<Eigen::Index> support;
  support.reserve(weights.size());
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0) support.push_back(i);
  }
  if (static_cast<Eigen::Index>(support.size()) < cols) {
    throw support_coverage_error(
        std::string(context) + ": only " + std::to_string(support.size()) +
            " support nodes for " + std::to_string(cols) +
            " unknowns at parameter " + std::to_string(node_parameter),
        node_parameter);
  }
  Eigen::MatrixXd Aw(support.size(), cols);
  Eigen::MatrixXd bw(support.size(), rhs.cols());
  for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(support.size()); ++r) {
    const double sw = std::sqrt(weights[support[r]]);
    Aw.row(r) = sw * design.row(support[r]);
    bw.row(r) = sw * rhs.row(support[r]);
  }
  return svd_least_squares(Aw, bw, context);
}

// Interleaves a per-axis coefficient matrix (n+1 x 3) into [p_0;...;p_n].
Eigen::VectorXd interleave_axes(const Eigen::MatrixXd& per_axis) {
  Eigen::VectorXd out(per_axis.size());
  for (Eigen::Index j = 0; j < per_axis.rows(); ++j) {
    out.segment<3>(3 * j) = per_axis.row(j).transpose();
  }
  return out;
}

FeatureVector compress_field(Eigen::MatrixXd field, Provenance provenance,
                             const BasisSpec& spec, const MlsConfig& cfg) {
  PcaReduction pca = pca_reduce(field, cfg.pca_rank);
  FeatureVector f;
  f.provenance = provenance;
  f.basis = spec;
  f.mls = cfg;
  f.values = Eigen::Map<const Eigen::VectorXd>(pca.principal.data(), pca.principal.size());
  f.pca_mean = std::move(pca.mean);
  f.pca_loadings = std::move(pca.loadings);
  f.singular_values = std::move(pca.singular_values);
  return f;
}

// Runs fn(i) for every node, serial or OpenMP; the first thrown error (by
// node index) is rethrown after the loop so both policies fail identically.
template <typename Fn>
void for_each_node(Eigen::Index n, ExecPolicy exec, Fn&& fn) {
  if (exec == ExecPolicy::Serial) {
    for (Eigen::Index i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

double mls_weight(double epsilon) {
  if (epsilon <= 0.5) {
    return 2.0 / 3.0 - 4.0 * epsilon * epsilon + 4.0 * epsilon * epsilon * epsilon;
  }
  if (epsilon <= 1.0) {
    return 4.0 / 3.0 - 4.0 * epsilon + 4.0 * epsilon * epsilon -
           4.0 / 3.0 * epsilon * epsilon * epsilon;
  }
  return 0.0;
}

FeatureVector fit_curve_lsm(const ShapeSample& sample, const BasisSpec& spec) {
  require_curve(sample, "fit_curve_lsm");
  const Eigen::Index n_points = sample.size();
  const int n = spec.order_n;
  if (n_points < 2 * (n + 1)) {
    throw std::invalid_argument("fit_curve_lsm: need N >= 2(n+1), got N=" +
                                std::to_string(n_points) + " for n=" + std::to_string(n));
  }
  const Eigen::MatrixXd B = basis_matrix(spec, sample.arc_params);
  // B kron E_3 decouples per axis; solving xyz against the scalar matrix
  // gives the same minimizer as the stacked system.
  const Eigen::MatrixXd coeffs =
      svd_least_squares(B, sample.points.transpose(), "fit_curve_lsm");

  FeatureVector f;
  f.provenance = Provenance::LsmCurve;
  f.basis = spec;
  f.values = interleave_axes(coeffs);
  f.node_rho = sample.arc_params;
  return f;
}

FeatureVector fit_surface_lsm(const ShapeSample& sample, const BasisSpec& spec) {
  require_surface(sample, "fit_surface_lsm");
  const Eigen::Index n_points = sample.size();
  const Eigen::Index n_terms =
      static_cast<Eigen::Index>(spec.order_nx + 1) * (spec.order_ny + 1);
  if (n_points < 2 * n_terms) {
    throw std::invalid_argument("fit_surface_lsm: need N >= 2(nx+1)(ny+1), got N=" +
                                std::to_string(n_points) + " for " + std::to_string(n_terms) +
                                " terms");
  }
  const Eigen::Matrix2Xd xy = surface_xy(sample);
  const Eigen::MatrixXd D = surface_basis_matrix(spec, xy);
  const Eigen::VectorXd z = sample.points.row(2).transpose();
  FeatureVector f;
  f.provenance = Provenance::LsmSurface;
  f.basis = spec;
  f.values = svd_least_squares(D, z, "fit_surface_lsm");
  f.node_xy = xy;
  return f;
}

Eigen::MatrixXd mls_curve_coefficient_field(const ShapeSample& sample, const BasisSpec& spec,
                                            const MlsConfig& cfg, ExecPolicy exec) {
  require_curve(sample, "fit_curve_mls");
  if (cfg.support_radius <= 0.0) {
    throw std::invalid_argument("fit_curve_mls: support radius must be positive");
  }
  const Eigen::Index n_points = sample.size();
  const int n = spec.order_n;
  const Eigen::MatrixXd B = basis_matrix(spec, sample.arc_params);
  const Eigen::MatrixXd rhs = sample.points.transpose();

  Eigen::MatrixXd field(3 * (n + 1), n_points);
  for_each_node(n_points, exec, [&](Eigen::Index i) {
    const double rho_i = sample.arc_params[i];
    Eigen::VectorXd w(n_points);
    for (Eigen::Index l = 0; l < n_points; ++l) {
      w[l] = mls_weight(std::abs(rho_i - sample.arc_params[l]) / cfg.support_radius);
    }
    const Eigen::MatrixXd coeffs = weighted_local_solve(B, rhs, w, rho_i, "fit_curve_mls");
    field.col(i) = interleave_axes(coeffs);
  });
  return field;
}

Eigen::MatrixXd mls_surface_coefficient_field(const ShapeSample& sample, const BasisSpec& spec,
                                              const MlsConfig& cfg, ExecPolicy exec) {
  require_surface(sample, "fit_surface_mls");
  if (cfg.support_radius <= 0.0) {
    throw std::invalid_argument("fit_surface_mls: support radius must be positive");
  }
  const Eigen::Index n_points = sample.size();
  const Eigen::Matrix2Xd xy = surface_xy(sample);
  const Eigen::MatrixXd D = surface_basis_matrix(spec, xy);
  const Eigen::VectorXd z = sample.points.row(2).transpose();

  Eigen::MatrixXd field(D.cols(), n_points);
  for_each_node(n_points, exec, [&](Eigen::Index i) {
    Eigen::VectorXd w(n_points);
    for (Eigen::Index l = 0; l < n_points; ++l) {
      w[l] = mls_weight((xy.col(l) - xy.col(i)).norm() / cfg.support_radius);
    }
    field.col(i) =
        weighted_local_solve(D, z, w, sample.points(0, i), "fit_surface_mls");
  });
  return field;
}

FeatureVector fit_curve_mls(const ShapeSample& sample, const BasisSpec& spec, const MlsConfig& cfg,
                            ExecPolicy exec) {
  FeatureVector f = compress_field(mls_curve_coefficient_field(sample, spec, cfg, exec),
                                   Provenance::MlsCurve, spec, cfg);
  f.node_rho = sample.arc_params;
  return f;
}

FeatureVector fit_surface_mls(const ShapeSample& sample, const BasisSpec& spec,
                              const MlsConfig& cfg, ExecPolicy exec) {
  FeatureVector f = compress_field(mls_surface_coefficient_field(sample, spec, cfg, exec),
                                   Provenance::MlsSurface, spec, cfg);
  f.node_xy = surface_xy(sample);
  return f;
}

namespace {

Eigen::Index nearest_index(const Eigen::VectorXd& params, double value) {
  Eigen::Index best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < params.size(); ++i) {
    const double d = std::abs(params[i] - value);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

Eigen::Index nearest_index_xy(const Eigen::Matrix2Xd& xy, const Eigen::Vector2d& q) {
  Eigen::Index best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < xy.cols(); ++i) {
    const double d = (xy.col(i) - q).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

Eigen::MatrixXd mls_backprojection(const FeatureVector& f, Eigen::Index coeff_len) {
  if (f.values.size() % coeff_len != 0) {
    throw contract_error("reconstruct: MLS feature length inconsistent with basis order");
  }
  const Eigen::Index m = f.values.size() / coeff_len;
  const Eigen::Map<const Eigen::MatrixXd> principal(f.values.data(), coeff_len, m);
  return pca_reconstruct(principal, f.pca_loadings, f.pca_mean);
}

}  // namespace

Eigen::Matrix3Xd reconstruct_curve(const FeatureVector& feature, const Eigen::VectorXd& rhos) {
  if (!feature.is_curve()) {
    throw contract_error("reconstruct_curve: feature has surface provenance");
  }
  for (Eigen::Index t = 0; t < rhos.size(); ++t) {
    if (rhos[t] < 0.0 || rhos[t] > 1.0) {
      throw std::domain_error("reconstruct_curve: rho outside [0,1]");
    }
  }
  const int n = feature.basis.order_n;
  const Eigen::Index coeff_len = 3 * (n + 1);
  Eigen::Matrix3Xd out(3, rhos.size());

  if (feature.provenance == Provenance::LsmCurve) {
    const Eigen::Map<const Eigen::MatrixXd> coeffs(feature.values.data(), 3, n + 1);
    for (Eigen::Index t = 0; t < rhos.size(); ++t) {
      out.col(t) = coeffs * basis_row(feature.basis, rhos[t]).transpose();
    }
    return out;
  }

  const Eigen::MatrixXd field = mls_backprojection(feature, coeff_len);
  for (Eigen::Index t = 0; t < rhos.size(); ++t) {
    const Eigen::Index i = nearest_index(feature.node_rho, rhos[t]);
    const Eigen::Map<const Eigen::MatrixXd> coeffs(field.col(i).data(), 3, n + 1);
    out.col(t) = coeffs * basis_row(feature.basis, rhos[t]).transpose();
  }
  return out;
}

Eigen::VectorXd reconstruct_surface(const FeatureVector& feature, const Eigen::Matrix2Xd& xy) {
  if (feature.is_curve()) {
    throw contract_error("reconstruct_surface: feature has curve provenance");
  }
  const Eigen::Index coeff_len =
      static_cast<Eigen::Index>(feature.basis.order_nx + 1) * (feature.basis.order_ny + 1);
  Eigen::VectorXd z(xy.cols());

  if (feature.provenance == Provenance::LsmSurface) {
    for (Eigen::Index t = 0; t < xy.cols(); ++t) {
      z[t] = surface_basis_row(feature.basis, xy(0, t), xy(1, t)).dot(feature.values);
    }
    return z;
  }

  const Eigen::MatrixXd field = mls_backprojection(feature, coeff_len);
  for (Eigen::Index t = 0; t < xy.cols(); ++t) {
    const Eigen::Index i = nearest_index_xy(feature.node_xy, xy.col(t));
    z[t] = surface_basis_row(feature.basis, xy(0, t), xy(1, t)).dot(field.col(i));
  }
  return z;
}

ShapeSample reconstruct_shape(const FeatureVector& feature, const ShapeSample& reference) {
  ShapeSample out = reference;
  if (feature.is_curve()) {
    if (reference.kind == Kind::Surface) {
      throw contract_error("reconstruct_shape: curve feature vs surface reference");
    }
    out.points = reconstruct_curve(feature, reference.arc_params);
  } else {
    if (reference.kind != Kind::Surface) {
      throw contract_error("reconstruct_shape: surface feature vs curve reference");
    }
    out.points.row(2) = reconstruct_surface(feature, surface_xy(reference)).transpose();
  }
  return out;
}

double reconstruction_error(const ShapeSample& sample, const FeatureVector& feature) {
  const ShapeSample rebuilt = reconstruct_shape(feature, sample);
  return (sample.points - rebuilt.points).colwise().norm().sum();
}

FeatureVector fit_shape(const ShapeSample& sample, const FitSpec& spec, ExecPolicy exec) {
  if (sample.kind == Kind::Surface) {
    return spec.method == FitMethod::Lsm ? fit_surface_lsm(sample, spec.basis)
                                         : fit_surface_mls(sample, spec.basis, spec.mls, exec);
  }
  return spec.method == FitMethod::Lsm ? fit_curve_lsm(sample, spec.basis)
                                       : fit_curve_mls(sample, spec.basis, spec.mls, exec);
}

int feature_length(Kind kind, const FitSpec& spec) {
  if (kind == Kind::Surface) {
    const int terms = (spec.basis.order_nx + 1) * (spec.basis.order_ny + 1);
    return spec.method == FitMethod::Lsm ? terms : spec.mls.pca_rank * terms;
  }
  const int terms = 3 * (spec.basis.order_n + 1);
  return spec.method == FitMethod::Lsm ? terms : spec.mls.pca_rank * terms;
}

}  // namespace shapeservo
