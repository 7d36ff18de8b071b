#pragma once

#include "closure/basis.hpp"
#include "closure/dynamics.hpp"
#include "closure/estimate.hpp"
#include "closure/filter.hpp"
#include "closure/grid.hpp"
#include "closure/observe.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace closure {

enum class ModelKind { FisherKPP, AdvectionDiffusion };

// Full declarative run specification. The M field follows the basis-size
// convention of the experiments: a spline basis has M+1 functions, an RBF
// basis has M kernels.
struct ExperimentConfig {
    std::string name;
    ModelKind model = ModelKind::FisherKPP;
    int dim = 1;
    std::string scale = "full";  // "full" | "desk"

    std::vector<double> extent = {1.0};
    std::vector<int> count = {1000};
    std::string bc = "neumann";  // "neumann" | "dirichlet"

    double diffusivity = 0.01;        // D
    double carrying_capacity = 1.0;   // K, Fisher-KPP only
    double velocity = 0.0;            // c, advection-diffusion only
    std::vector<double> velocity_direction = {1.0};  // unit vector
    std::string initial_condition = "kpp_sine";
    double state_prior_std = 0.0;

    double final_time = 1.0;
    int num_obs_times = 25;

    int num_obs_locations = 200;
    double gamma = 0.01;
    bool gamma_is_std = false;

    std::string basis_kind = "bspline";  // "bspline" | "gaussian_rbf"
    int basis_m = 11;
    std::string bandwidth_rule = "lowe";  // "lowe" | "paper_literal" | "fixed"
    double fixed_bandwidth = 0.0;
    std::uint64_t basis_seed = 1;

    double sigma = 0.1;
    int ensemble_size = 1000;

    std::string prior_centering = "truth_projection";  // "truth_projection" | "zero"
    double prior_tau = 0.1;

    bool paper_literal_objective = false;

    std::vector<double> search_sigma_grid = {0.025, 0.1, 0.4};
    std::vector<int> search_m_grid = {7, 11, 19};
};

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

std::vector<std::string> preset_names();
ExperimentConfig preset(const std::string& name);

// Deterministic reduction for fast runs: 1D grids shrink to 200 points, 2D to
// 25x25 with 625 observation locations, ensembles to 200 members. Physics
// constants are untouched. Idempotent.
ExperimentConfig desk_scale(ExperimentConfig config);

// Applies "dotted.key=value" onto the config's JSON form. Unknown keys and
// type mismatches raise ConfigError.
ExperimentConfig apply_override(const ExperimentConfig& config, const std::string& dotted_key,
                                const std::string& value);

// Component builders shared by the run pipeline and the test suites.
SpatialGrid make_grid(const ExperimentConfig& config);
BoundaryCondition make_bc(const ExperimentConfig& config);
Field make_initial_condition(const ExperimentConfig& config, const SpatialGrid& grid);
std::vector<double> make_velocity(const ExperimentConfig& config);
EvolutionModel make_model(const ExperimentConfig& config, const SpatialGrid& grid);
std::function<Field(const Field&)> make_true_closure(const ExperimentConfig& config,
                                                     const SpatialGrid& grid);
int basis_function_count(const ExperimentConfig& config, int m);
BasisSet make_basis(const ExperimentConfig& config, const SpatialGrid& grid, int m_override = -1);
ObservationModel make_observation_model(const ExperimentConfig& config, const SpatialGrid& grid);
double noise_variance(const ExperimentConfig& config);
// Maps the configured per-observation-interval random-walk scale (config.sigma
// unless sigma >= 0 overrides it) to the per-unit-time scale vector consumed by
// the filter and closure synthesis.
Eigen::VectorXd make_sigma_vector(const ExperimentConfig& config, const BasisSet& basis,
                                  double sigma = -1.0);
CoefficientPrior make_prior(const ExperimentConfig& config, const BasisSet& basis,
                            const Eigen::VectorXd& sigma_vec, const Field& initial_closure);

enum class RunStage { Truth, Observe, Filter, Search, Experiment };

struct RunSummary {
    nlohmann::json document;  // what summary.json contains
    double nll = 0.0;
    double l2_error = 0.0;
    std::vector<double> coverage;  // per analysis time
};

// Truth generation -> observation synthesis -> filtering -> diagnostics, with
// artifacts written under out_dir up to the requested stage. Deterministic
// given (config, seed) apart from the recorded wall-clock.
RunSummary run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                          std::uint64_t seed, int threads = 1,
                          RunStage stage = RunStage::Experiment);

}  // namespace closure
