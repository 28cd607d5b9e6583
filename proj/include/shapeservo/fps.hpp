#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shapeservo/types.hpp"

namespace shapeservo {

// Farthest point sampling: greedy max-min-distance subset selection.
// Deterministic given seed_index; distance ties resolve to the lowest index.
// The distance-update sweep is the parallel kernel; candidate selection is a
// serial scan so thread count never changes the result.
std::vector<int> fps_downsample(const Eigen::Matrix3Xd& points, int k, int seed_index,
                                ExecPolicy exec = ExecPolicy::Parallel);

}  // namespace shapeservo
