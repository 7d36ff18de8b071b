#pragma once

#include "closure/basis.hpp"
#include "closure/grid.hpp"
#include "closure/rng.hpp"

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace closure {

// The incomplete right-hand side F(u) plus enough context to integrate it.
struct EvolutionModel {
    std::function<Field(const Field&)> incomplete_rhs;
    SpatialGrid grid;
    BoundaryCondition bc = BoundaryCondition::NeumannZeroFlux;
    double stable_dt = 0.0;  // explicit-Euler step from the stability rule
};

struct TrueClosure {
    std::function<Field(const Field&)> apply;
    std::string label;
};

struct AugmentedState {
    Field u;
    Eigen::VectorXd eta;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Field> fields;

    const Field& at_time(double t) const;
};

// D lap(u) + u (1 - u), Neumann BC.
Field kpp_incomplete_rhs(const Field& u, double diffusivity, const SpatialGrid& grid);

// (1 - 1/K) u^2, the reaction-term misspecification.
Field kpp_true_closure(const Field& u, double carrying_capacity);

// D lap(u), Dirichlet-zero BC (boundary entries of the RHS are zero).
Field advdiff_incomplete_rhs(const Field& u, double diffusivity, const SpatialGrid& grid);

// -div(c u) with the given constant velocity vector.
Field advdiff_true_closure(const Field& u, const SpatialGrid& grid,
                           const std::vector<double>& velocity, BoundaryCondition bc);

// Explicit-Euler step size: 0.5 * min_h^2 / (2 dim D), halved until the
// advective Courant number |c| dt / min_h drops to 0.5 or below.
double stable_time_step(const SpatialGrid& grid, double diffusivity, double speed);

// Forward-Euler integration of complete_rhs = F(u) + phi(u) from t = 0 to T,
// saving the field nearest each requested time. Dirichlet boundary points are
// held at their initial values (zero for the presets).
Trajectory solve_truth(const std::function<Field(const Field&)>& complete_rhs,
                       const SpatialGrid& grid, BoundaryCondition bc, const Field& initial,
                       double final_time, double dt, const std::vector<double>& save_times);

// One Euler-Maruyama step of the augmented system:
//   u'   = u + dt (F(u) + B (sigma .* eta))
//   eta' = eta + sqrt(dt) noise
AugmentedState step_augmented(const AugmentedState& z, double dt, const EvolutionModel& model,
                              const BasisSet& basis, const Eigen::VectorXd& sigma,
                              const Eigen::VectorXd& noise);

// Repeated step_augmented from t_from to t_to with the model's stable dt; the
// final step is shortened to land exactly on t_to. Coefficient k consumes its
// Brownian increments from coeff_streams[k].
AugmentedState forecast_substeps(const AugmentedState& z, double t_from, double t_to,
                                 const EvolutionModel& model, const BasisSet& basis,
                                 const Eigen::VectorXd& sigma, std::span<RngStream> coeff_streams);

}  // namespace closure
