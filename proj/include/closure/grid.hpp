#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace closure {

using Field = Eigen::VectorXd;

enum class BoundaryCondition {
    NeumannZeroFlux,  // mirrored ghost values, d u / d n = 0
    DirichletZero,    // boundary values pinned to 0
};

// Regular 1D/2D grid on [0, L_d] per axis, N_d points per axis including both
// endpoints. Flattened enumeration is row-major with axis 0 as the outer index:
// index(i, j) = i * count[1] + j.
struct SpatialGrid {
    int dim = 1;
    std::array<double, 2> extent = {1.0, 0.0};
    std::array<int, 2> count = {2, 1};

    static SpatialGrid make_1d(double length, int n);
    static SpatialGrid make_2d(double length_x, double length_y, int nx, int ny);

    int num_points() const { return count[0] * count[1]; }
    double spacing(int axis) const { return extent[axis] / (count[axis] - 1); }
    double min_spacing() const;
    bool is_boundary(int flat_index) const;
};

// Coordinates of every grid point, one row per point, dim columns, in the
// flattened enumeration order.
Eigen::MatrixXd grid_points(const SpatialGrid& grid);

// Central second difference (3-point in 1D, 5-point in 2D). DirichletZero
// returns 0 at boundary points; NeumannZeroFlux uses mirrored ghosts.
Field laplacian(const Field& field, const SpatialGrid& grid, BoundaryCondition bc);

// +div(c u) with constant velocity, central first differences per axis.
// Ghost values: 0 outside for DirichletZero, mirrored for NeumannZeroFlux.
Field advective_divergence(const Field& field, const SpatialGrid& grid,
                           const std::vector<double>& velocity, BoundaryCondition bc);

}  // namespace closure
