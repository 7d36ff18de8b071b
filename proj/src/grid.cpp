#include "closure/grid.hpp"

#include "closure/errors.hpp"

#include <string>

namespace closure {

SpatialGrid SpatialGrid::make_1d(double length, int n) {
    if (n < 2) throw ConfigError("grid needs at least 2 points per axis, got " + std::to_string(n));
    if (length <= 0.0) throw ConfigError("grid extent must be positive");
    SpatialGrid g;
    g.dim = 1;
    g.extent = {length, 0.0};
    g.count = {n, 1};
    return g;
}

SpatialGrid SpatialGrid::make_2d(double length_x, double length_y, int nx, int ny) {
    if (nx < 2 || ny < 2) throw ConfigError("grid needs at least 2 points per axis");
    if (length_x <= 0.0 || length_y <= 0.0) throw ConfigError("grid extent must be positive");
    SpatialGrid g;
    g.dim = 2;
    g.extent = {length_x, length_y};
    g.count = {nx, ny};
    return g;
}

double SpatialGrid::min_spacing() const {
    double h = spacing(0);
    if (dim == 2) h = std::min(h, spacing(1));
    return h;
}

bool SpatialGrid::is_boundary(int flat_index) const {
    const int i = flat_index / count[1];
    const int j = flat_index % count[1];
    if (i == 0 || i == count[0] - 1) return true;
    if (dim == 2 && (j == 0 || j == count[1] - 1)) return true;
    return false;
}

Eigen::MatrixXd grid_points(const SpatialGrid& grid) {
    const int n = grid.num_points();
    Eigen::MatrixXd pts(n, grid.dim);
    if (grid.dim == 1) {
        const double h = grid.spacing(0);
        for (int i = 0; i < n; ++i) pts(i, 0) = i * h;
    } else {
        const double hx = grid.spacing(0);
        const double hy = grid.spacing(1);
        int r = 0;
        for (int i = 0; i < grid.count[0]; ++i)
            for (int j = 0; j < grid.count[1]; ++j, ++r) {
                pts(r, 0) = i * hx;
                pts(r, 1) = j * hy;
            }
    }
    return pts;
}

namespace {

void check_length(const Field& field, const SpatialGrid& grid, const char* op) {
    if (field.size() != grid.num_points())
        throw DimensionError(std::string(op) + ": field length " + std::to_string(field.size()) +
                             " != grid point count " + std::to_string(grid.num_points()));
}

}  // namespace

Field laplacian(const Field& field, const SpatialGrid& grid, BoundaryCondition bc) {
    check_length(field, grid, "laplacian");
    const int nx = grid.count[0];
    const int ny = grid.count[1];
    Field out = Field::Zero(field.size());

    auto second_diff = [&](int center, int stride, int i, int n, double inv_h2) {
        double left, right;
        if (i == 0)
            left = bc == BoundaryCondition::NeumannZeroFlux ? field[center + stride] : 0.0;
        else
            left = field[center - stride];
        if (i == n - 1)
            right = bc == BoundaryCondition::NeumannZeroFlux ? field[center - stride] : 0.0;
        else
            right = field[center + stride];
        return (left + right - 2.0 * field[center]) * inv_h2;
    };

    if (grid.dim == 1) {
        const double inv_h2 = 1.0 / (grid.spacing(0) * grid.spacing(0));
        for (int i = 0; i < nx; ++i) out[i] = second_diff(i, 1, i, nx, inv_h2);
    } else {
        const double inv_hx2 = 1.0 / (grid.spacing(0) * grid.spacing(0));
        const double inv_hy2 = 1.0 / (grid.spacing(1) * grid.spacing(1));
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) {
                const int c = i * ny + j;
                out[c] = second_diff(c, ny, i, nx, inv_hx2) + second_diff(c, 1, j, ny, inv_hy2);
            }
    }

    if (bc == BoundaryCondition::DirichletZero) {
        for (int r = 0; r < grid.num_points(); ++r)
            if (grid.is_boundary(r)) out[r] = 0.0;
    }
    return out;
}

Field advective_divergence(const Field& field, const SpatialGrid& grid,
                           const std::vector<double>& velocity, BoundaryCondition bc) {
    check_length(field, grid, "advective_divergence");
    if (static_cast<int>(velocity.size()) != grid.dim)
        throw DimensionError("advective_divergence: velocity length " +
                             std::to_string(velocity.size()) + " != grid dim " +
                             std::to_string(grid.dim));
    const int nx = grid.count[0];
    const int ny = grid.count[1];
    Field out = Field::Zero(field.size());

    auto central_diff = [&](int center, int stride, int i, int n, double inv_2h) {
        double left, right;
        if (i == 0)
            left = bc == BoundaryCondition::NeumannZeroFlux ? field[center + stride] : 0.0;
        else
            left = field[center - stride];
        if (i == n - 1)
            right = bc == BoundaryCondition::NeumannZeroFlux ? field[center - stride] : 0.0;
        else
            right = field[center + stride];
        return (right - left) * inv_2h;
    };

    if (grid.dim == 1) {
        const double inv_2h = 1.0 / (2.0 * grid.spacing(0));
        for (int i = 0; i < nx; ++i) out[i] = velocity[0] * central_diff(i, 1, i, nx, inv_2h);
    } else {
        const double inv_2hx = 1.0 / (2.0 * grid.spacing(0));
        const double inv_2hy = 1.0 / (2.0 * grid.spacing(1));
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) {
                const int c = i * ny + j;
                out[c] = velocity[0] * central_diff(c, ny, i, nx, inv_2hx) +
                         velocity[1] * central_diff(c, 1, j, ny, inv_2hy);
            }
    }
    return out;
}

}  // namespace closure
