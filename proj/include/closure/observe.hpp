#pragma once

#include "closure/dynamics.hpp"
#include "closure/grid.hpp"
#include "closure/rng.hpp"

#include <Eigen/Dense>
#include <vector>

namespace closure {

// Linear observation geometry: H selects rows of the state, R = gamma I.
struct ObservationModel {
    std::vector<int> indices;   // strictly increasing, within [0, N_x)
    double gamma = 0.0;         // observation-noise variance
    std::vector<double> times;  // strictly increasing observation times

    int num_locations() const { return static_cast<int>(indices.size()); }
};

struct ObservationRecord {
    double time = 0.0;
    Eigen::VectorXd values;
    std::vector<int> indices;
};

// N_obs equally spaced indices into a length-N_x state, endpoint-inclusive:
// index_j = round(j (N_x - 1) / (N_obs - 1)).
std::vector<int> build_subsample_operator(int num_points, int num_obs);

// Per-axis equispaced indices, tensorized over a 2D grid. num_per_axis^2 total.
std::vector<int> build_subsample_operator_2d(const SpatialGrid& grid, int num_per_axis);

// H u: gather at indices.
Eigen::VectorXd apply_H(const Field& u, const std::vector<int>& indices);

// [H 0] z: the coefficient block is never observed.
Eigen::VectorXd apply_G(const AugmentedState& z, const std::vector<int>& indices);

// y_i = H u(t_i) + eps, eps ~ N(0, gamma I), independent across times and entries.
std::vector<ObservationRecord> generate_observations(const Trajectory& truth,
                                                     const ObservationModel& model,
                                                     RngStream& noise_stream);

}  // namespace closure
