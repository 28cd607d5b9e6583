#include "shapeservo/fps.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace shapeservo {

std::vector<int> fps_downsample(const Eigen::Matrix3Xd& points, int k, int seed_index,
                                ExecPolicy exec) {
  const int n = static_cast<int>(points.cols());
  if (k < 1 || k > n) {
    throw std::domain_error("fps_downsample: k=" + std::to_string(k) +
                            " outside [1," + std::to_string(n) + "]");
  }
  if (seed_index < 0 || seed_index >= n) {
    throw std::domain_error("fps_downsample: seed_index out of range");
  }

  std::vector<int> chosen;
  chosen.reserve(k);
  chosen.push_back(seed_index);

  Eigen::VectorXd min_dist2(n);
  const Eigen::Vector3d seed = points.col(seed_index);

  auto update = [&](int latest) {
    const Eigen::Vector3d p = points.col(latest);
    if (exec == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
      for (int i = 0; i < n; ++i) {
        const double d2 = (points.col(i) - p).squaredNorm();
        if (d2 < min_dist2[i]) min_dist2[i] = d2;
      }
    } else {
      for (int i = 0; i < n; ++i) {
        const double d2 = (points.col(i) - p).squaredNorm();
        if (d2 < min_dist2[i]) min_dist2[i] = d2;
      }
    }
  };

  for (int i = 0; i < n; ++i) min_dist2[i] = (points.col(i) - seed).squaredNorm();

  while (static_cast<int>(chosen.size()) < k) {
    int best = 0;
    double best_d2 = -1.0;
    for (int i = 0; i < n; ++i) {
      if (min_dist2[i] > best_d2) {
        best_d2 = min_dist2[i];
        best = i;
      }
    }
    chosen.push_back(best);
    update(best);
  }
  return chosen;
}

}  // namespace shapeservo
