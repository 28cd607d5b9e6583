#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "shapeservo/errors.hpp"
#include "shapeservo/types.hpp"

namespace shapeservo {

enum class Topology { Chain, Loop, Grid };

struct Stiffness {
  double stretch = 20.0;  // N/m
  double bend = 2e-3;     // bending modulus for the discrete Laplacian proxy
};

// Quasi-static elastic plant: a node set with stretch springs and a
// Laplacian bending penalty, pinned at the grasped node and at fixed nodes.
struct PlantState {
  Eigen::Matrix3Xd nodes;
  int grasp_index = 0;
  std::vector<int> fixed_indices;
  Topology topology = Topology::Chain;
  int rows = 0, cols = 0;  // grid only
  Stiffness stiffness;

  // Connectivity, derived once at construction.
  std::vector<std::array<int, 2>> springs;
  Eigen::VectorXd rest_lengths;
  std::vector<std::array<int, 3>> bend_triples;

  Eigen::Vector3d grasp() const { return nodes.col(grasp_index); }
  Eigen::Index size() const { return nodes.cols(); }
  Kind observation_kind() const {
    switch (topology) {
      case Topology::Chain: return Kind::Centerline;
      case Topology::Loop: return Kind::Contour;
      case Topology::Grid: return Kind::Surface;
    }
    return Kind::Centerline;
  }
};

// Straight cable along +x, fixed at node 0, grasped at the far end.
PlantState make_cable(int n_nodes, double spacing, Stiffness stiffness = {});

// Closed elastic band in the xy plane, fixed at node 0, grasped opposite.
PlantState make_loop(int n_nodes, double radius, Stiffness stiffness = {});

// rows x cols sheet in the xy plane (row-major node order), fixed along the
// x=0 edge, grasped at the middle of the far edge.
PlantState make_sheet(int rows, int cols, double spacing, Stiffness stiffness = {});

double elastic_energy(const PlantState& state);

struct SettleOptions {
  double displacement_tol = 1e-7;  // meters, per iteration
  int max_iterations = 10000;
};

// Moves the grasped node and relaxes to the elastic energy minimum by damped
// gradient descent with backtracking. Pure: returns the settled state.
PlantState settle(const PlantState& state, const Eigen::Vector3d& new_grasp,
                  const SettleOptions& opts = {});

// ----- synthetic occlusions -----

enum class MaskKind { IndexRange, Halfspace, Fraction };

struct OcclusionInterval {
  int start_step = 0;
  int end_step = 0;  // inclusive
  MaskKind kind = MaskKind::IndexRange;
  int index_a = 0, index_b = 0;                         // IndexRange, inclusive
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();    // Halfspace
  double offset = 0.0;
  double fraction = 0.0;                                // Fraction
  std::uint64_t seed = 0;
};

struct OcclusionSchedule {
  std::vector<OcclusionInterval> intervals;
  const OcclusionInterval* active(int step) const;
  void validate() const;  // non-overlapping intervals, fractions in [0,1)
};

// Visibility mask for one step; true = visible.
std::vector<bool> evaluate_mask(const OcclusionSchedule& schedule, int step,
                                const Eigen::Matrix3Xd& points);

// Emits ordered samples; occluded points repeat their last seen position so
// cardinality stays constant, and the mask flags them invisible.
class Observer {
 public:
  explicit Observer(OcclusionSchedule schedule);
  std::pair<ShapeSample, std::vector<bool>> observe(const PlantState& state, int step);

 private:
  OcclusionSchedule schedule_;
  Eigen::Matrix3Xd last_seen_;
  bool primed_ = false;
};

// ----- motor babbling -----

struct Transition {
  int step = 0;
  Eigen::Vector3d r = Eigen::Vector3d::Zero();  // grasp before the command
  Eigen::Vector3d u = Eigen::Vector3d::Zero();
  Eigen::VectorXd shape;       // stacked 3N before
  Eigen::VectorXd next_shape;  // stacked 3N after
};

// Random bounded grasp motions, settled and observed each step. Components
// reflect at a confinement box around the starting grasp so long runs stay
// bounded. Deterministic per seed.
std::vector<Transition> babble(PlantState& state, int n_steps, double amplitude,
                               std::uint64_t seed, double saturation_bound = 0.01,
                               double confine_halfwidth = 0.15);

}  // namespace shapeservo
