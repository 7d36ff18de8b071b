#pragma once

#include "closure/basis.hpp"
#include "closure/dynamics.hpp"
#include "closure/observe.hpp"
#include "closure/rng.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

namespace closure {

enum class EnsemblePhase { Forecast, Analysis };

// Ensemble of augmented states z = [u; eta], one member per column.
struct AugmentedEnsemble {
    Eigen::MatrixXd members;  // (N_x + M+1) x N_ens
    int state_size = 0;       // N_x
    double time = 0.0;
    EnsemblePhase phase = EnsemblePhase::Forecast;

    int ensemble_size() const { return static_cast<int>(members.cols()); }
    int num_coeffs() const { return static_cast<int>(members.rows()) - state_size; }
};

// Isotropic Gaussian prior N(mean, tau^2 I) on the coefficient block.
struct CoefficientPrior {
    Eigen::VectorXd mean;
    double tau2 = 0.01;
};

struct FilterTimeRecord {
    double time = 0.0;
    Eigen::VectorXd analysis_mean_u;
    Eigen::VectorXd analysis_mean_eta;
    Eigen::VectorXd closure_mean;
    Eigen::VectorXd closure_std;
    Eigen::VectorXd innovation;          // y - G m_f
    Eigen::VectorXd obs_forecast_mean;   // G m_f
    Eigen::MatrixXd obs_anomaly;         // N_obs x N_ens, pre-scaled by 1/sqrt(N_ens - 1)
};

struct FilterResult {
    std::vector<FilterTimeRecord> records;
    int state_size = 0;
    int num_coeffs = 0;
    int ensemble_size = 0;
    double gamma = 0.0;
};

// Every member's state block equals u0 exactly (point-mass state prior) unless
// state_prior_std > 0, in which case u ~ N(u0, std^2 I). Coefficient blocks
// are i.i.d. N(prior.mean, prior.tau2 I).
AugmentedEnsemble init_ensemble(const Field& u0, const CoefficientPrior& prior, int ensemble_size,
                                std::uint64_t master_seed, double state_prior_std = 0.0);

// Sample mean and sample covariance (1/(N_ens - 1) outer-product form).
std::pair<Eigen::VectorXd, Eigen::MatrixXd> ensemble_moments(const AugmentedEnsemble& ens);

// K = P G^T (G P G^T + gamma I)^{-1}, with G applied as an index gather and the
// symmetric system solved rather than inverted.
Eigen::MatrixXd kalman_gain(const Eigen::MatrixXd& covariance, const std::vector<int>& indices,
                            double gamma);

// Stochastic analysis update z <- z + K (y - G z + e), e ~ N(0, gamma I) drawn
// per member from perturb_streams. The gain is formed from ensemble anomaly
// cross-products; the full covariance is never materialized.
void analysis_update(AugmentedEnsemble& ens, const ObservationRecord& record, double gamma,
                     std::span<RngStream> perturb_streams);

// Per-member closure field synthesis followed by pointwise sample mean/stddev.
std::pair<Eigen::VectorXd, Eigen::VectorXd> closure_estimate(const AugmentedEnsemble& ens,
                                                             const BasisSet& basis,
                                                             const Eigen::VectorXd& sigma);

// mean +- z_{(1+level)/2} * std.
std::pair<Eigen::VectorXd, Eigen::VectorXd> credible_band(const Eigen::VectorXd& mean,
                                                          const Eigen::VectorXd& std_dev,
                                                          double level = 0.95);

double normal_quantile(double p);

struct FilterSettings {
    int ensemble_size = 100;
    double gamma = 0.01;
    double state_prior_std = 0.0;
    std::uint64_t master_seed = 42;
    int threads = 1;
};

// Full forecast/analysis loop over the observation sequence. Deterministic
// given the master seed regardless of thread count.
FilterResult run_filter(const FilterSettings& settings,
                        const std::vector<ObservationRecord>& observations,
                        const EvolutionModel& model, const BasisSet& basis,
                        const Eigen::VectorXd& sigma, const CoefficientPrior& prior,
                        const Field& u0);

}  // namespace closure
