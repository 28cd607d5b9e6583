#pragma once

#include <Eigen/Dense>

namespace shapeservo {

// Rank-m principal component reduction of a column-sample matrix.
// Columns are mean-centered before the SVD; each principal direction is
// sign-fixed so its largest-magnitude entry is positive, which keeps the
// reduction deterministic across runs and platforms.
struct PcaReduction {
  Eigen::MatrixXd principal;       // U_m * diag(sigma_1..m), d x m
  Eigen::MatrixXd loadings;        // V_m, N x m
  Eigen::VectorXd mean;            // column mean, d
  Eigen::VectorXd singular_values; // first m, nonincreasing
};

// m may exceed the numerical rank; trailing components are zero-padded.
PcaReduction pca_reduce(const Eigen::MatrixXd& columns, int m);

// Back-projection mean*1^T + principal * loadings^T.
Eigen::MatrixXd pca_reconstruct(const Eigen::MatrixXd& principal,
                                const Eigen::MatrixXd& loadings,
                                const Eigen::VectorXd& mean);

}  // namespace shapeservo
