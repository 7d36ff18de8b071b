#include "closure/observe.hpp"

#include "closure/errors.hpp"

#include <cmath>
#include <string>

namespace closure {

std::vector<int> build_subsample_operator(int num_points, int num_obs) {
    if (num_obs < 1 || num_obs > num_points)
        throw ConfigError("build_subsample_operator: need 1 <= N_obs <= N_x, got N_obs = " +
                          std::to_string(num_obs) + ", N_x = " + std::to_string(num_points));
    std::vector<int> indices(num_obs);
    if (num_obs == 1) {
        indices[0] = 0;
        return indices;
    }
    for (int j = 0; j < num_obs; ++j)
        indices[j] = static_cast<int>(
            std::llround(static_cast<double>(j) * (num_points - 1) / (num_obs - 1)));
    return indices;
}

std::vector<int> build_subsample_operator_2d(const SpatialGrid& grid, int num_per_axis) {
    if (grid.dim != 2) throw ConfigError("build_subsample_operator_2d: grid is not 2D");
    const auto ix = build_subsample_operator(grid.count[0], num_per_axis);
    const auto iy = build_subsample_operator(grid.count[1], num_per_axis);
    std::vector<int> indices;
    indices.reserve(ix.size() * iy.size());
    for (int i : ix)
        for (int j : iy) indices.push_back(i * grid.count[1] + j);
    return indices;
}

Eigen::VectorXd apply_H(const Field& u, const std::vector<int>& indices) {
    Eigen::VectorXd out(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] < 0 || indices[j] >= u.size())
            throw DimensionError("apply_H: index " + std::to_string(indices[j]) +
                                 " out of range for state of length " + std::to_string(u.size()));
        out[j] = u[indices[j]];
    }
    return out;
}

Eigen::VectorXd apply_G(const AugmentedState& z, const std::vector<int>& indices) {
    return apply_H(z.u, indices);
}

std::vector<ObservationRecord> generate_observations(const Trajectory& truth,
                                                     const ObservationModel& model,
                                                     RngStream& noise_stream) {
    if (model.gamma < 0.0) throw ConfigError("generate_observations: gamma must be non-negative");
    const double noise_std = std::sqrt(model.gamma);
    std::vector<ObservationRecord> records;
    records.reserve(model.times.size());
    for (double t : model.times) {
        const Field& u = truth.at_time(t);  // throws ConfigError when missing
        ObservationRecord rec;
        rec.time = t;
        rec.indices = model.indices;
        rec.values = apply_H(u, model.indices);
        for (int j = 0; j < rec.values.size(); ++j) rec.values[j] += noise_std * noise_stream.normal();
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace closure
