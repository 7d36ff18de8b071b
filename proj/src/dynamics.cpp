#include "closure/dynamics.hpp"

#include "closure/errors.hpp"

#include <cmath>
#include <string>

namespace closure {

const Field& Trajectory::at_time(double t) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) < 1e-9) return fields[i];
    throw ConfigError("trajectory has no field at time " + std::to_string(t));
}

Field kpp_incomplete_rhs(const Field& u, double diffusivity, const SpatialGrid& grid) {
    if (diffusivity <= 0.0) throw ConfigError("kpp_incomplete_rhs: D must be positive");
    Field out = diffusivity * laplacian(u, grid, BoundaryCondition::NeumannZeroFlux);
    out.array() += u.array() * (1.0 - u.array());
    return out;
}

Field kpp_true_closure(const Field& u, double carrying_capacity) {
    if (carrying_capacity == 0.0) throw ConfigError("kpp_true_closure: K must be nonzero");
    return (1.0 - 1.0 / carrying_capacity) * u.array().square();
}

Field advdiff_incomplete_rhs(const Field& u, double diffusivity, const SpatialGrid& grid) {
    if (diffusivity <= 0.0) throw ConfigError("advdiff_incomplete_rhs: D must be positive");
    return diffusivity * laplacian(u, grid, BoundaryCondition::DirichletZero);
}

Field advdiff_true_closure(const Field& u, const SpatialGrid& grid,
                           const std::vector<double>& velocity, BoundaryCondition bc) {
    return -advective_divergence(u, grid, velocity, bc);
}

double stable_time_step(const SpatialGrid& grid, double diffusivity, double speed) {
    const double h = grid.min_spacing();
    double dt = 0.5 * h * h / (2.0 * grid.dim * diffusivity);
    while (std::abs(speed) * dt / h > 0.5) dt *= 0.5;
    return dt;
}

namespace {

void pin_dirichlet(Field& rhs, const SpatialGrid& grid, BoundaryCondition bc) {
    if (bc != BoundaryCondition::DirichletZero) return;
    for (int r = 0; r < grid.num_points(); ++r)
        if (grid.is_boundary(r)) rhs[r] = 0.0;
}

}  // namespace

Trajectory solve_truth(const std::function<Field(const Field&)>& complete_rhs,
                       const SpatialGrid& grid, BoundaryCondition bc, const Field& initial,
                       double final_time, double dt, const std::vector<double>& save_times) {
    if (initial.size() != grid.num_points())
        throw DimensionError("solve_truth: initial field length != grid point count");
    if (dt <= 0.0 || final_time <= 0.0) throw ConfigError("solve_truth: dt and T must be positive");
    for (double t : save_times)
        if (t < 0.0 || t > final_time + 1e-12)
            throw ConfigError("solve_truth: save time outside [0, T]");

    const long num_steps = static_cast<long>(std::llround(final_time / dt));
    std::vector<long> save_steps;
    save_steps.reserve(save_times.size());
    for (double t : save_times)
        save_steps.push_back(std::min(num_steps, static_cast<long>(std::llround(t / dt))));

    Trajectory traj;
    traj.times = save_times;
    traj.fields.resize(save_times.size());

    Field u = initial;
    for (std::size_t s = 0; s < save_steps.size(); ++s)
        if (save_steps[s] == 0) traj.fields[s] = u;
    for (long step = 1; step <= num_steps; ++step) {
        Field rhs = complete_rhs(u);
        pin_dirichlet(rhs, grid, bc);
        u += dt * rhs;
        if (!u.allFinite())
            throw NumericError("solve_truth: non-finite state at step " + std::to_string(step));
        for (std::size_t s = 0; s < save_steps.size(); ++s)
            if (save_steps[s] == step) traj.fields[s] = u;
    }
    return traj;
}

AugmentedState step_augmented(const AugmentedState& z, double dt, const EvolutionModel& model,
                              const BasisSet& basis, const Eigen::VectorXd& sigma,
                              const Eigen::VectorXd& noise) {
    if (noise.size() != basis.num_bases() || z.eta.size() != basis.num_bases())
        throw DimensionError("step_augmented: coefficient/noise length != basis count");
    AugmentedState next;
    Field rhs = model.incomplete_rhs(z.u);
    if (basis.num_bases() > 0)
        rhs += synthesize_field(basis, {z.eta, sigma});
    pin_dirichlet(rhs, model.grid, model.bc);
    next.u = z.u + dt * rhs;
    next.eta = z.eta + std::sqrt(dt) * noise;
    return next;
}

AugmentedState forecast_substeps(const AugmentedState& z, double t_from, double t_to,
                                 const EvolutionModel& model, const BasisSet& basis,
                                 const Eigen::VectorXd& sigma,
                                 std::span<RngStream> coeff_streams) {
    if (t_to < t_from) throw ConfigError("forecast_substeps: t_to < t_from");
    AugmentedState state = z;
    double t = t_from;
    Eigen::VectorXd noise(basis.num_bases());
    while (t < t_to - 1e-14) {
        const double dt = std::min(model.stable_dt, t_to - t);
        for (int k = 0; k < basis.num_bases(); ++k) noise[k] = coeff_streams[k].normal();
        state = step_augmented(state, dt, model, basis, sigma, noise);
        t += dt;
    }
    return state;
}

}  // namespace closure
