#include "shapeservo/pca.hpp"

#include <stdexcept>

namespace shapeservo {

PcaReduction pca_reduce(const Eigen::MatrixXd& columns, int m) {
  if (m < 1) throw std::invalid_argument("pca_reduce: rank m must be >= 1");
  if (m > columns.cols()) {
    throw std::invalid_argument("pca_reduce: rank m exceeds the number of columns");
  }
  const Eigen::Index d = columns.rows();
  const Eigen::Index n = columns.cols();

  PcaReduction out;
  out.mean = columns.rowwise().mean();
  Eigen::MatrixXd centered = columns.colwise() - out.mean;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::Index rank_cap = std::min<Eigen::Index>(m, svd.singularValues().size());

  out.principal = Eigen::MatrixXd::Zero(d, m);
  out.loadings = Eigen::MatrixXd::Zero(n, m);
  out.singular_values = Eigen::VectorXd::Zero(m);

  for (Eigen::Index k = 0; k < rank_cap; ++k) {
    Eigen::VectorXd direction = svd.matrixU().col(k);
    Eigen::VectorXd loading = svd.matrixV().col(k);
    Eigen::Index peak;
    direction.cwiseAbs().maxCoeff(&peak);
    if (direction[peak] < 0.0) {
      direction = -direction;
      loading = -loading;
    }
    const double sigma = svd.singularValues()[k];
    out.principal.col(k) = direction * sigma;
    out.loadings.col(k) = loading;
    out.singular_values[k] = sigma;
  }
  return out;
}

Eigen::MatrixXd pca_reconstruct(const Eigen::MatrixXd& principal,
                                const Eigen::MatrixXd& loadings,
                                const Eigen::VectorXd& mean) {
  return (principal * loadings.transpose()).colwise() + mean;
}

}  // namespace shapeservo
