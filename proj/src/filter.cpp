#include "closure/filter.hpp"

#include "closure/errors.hpp"

#include <cmath>
#include <string>
#include <thread>

namespace closure {

AugmentedEnsemble init_ensemble(const Field& u0, const CoefficientPrior& prior, int ensemble_size,
                                std::uint64_t master_seed, double state_prior_std) {
    if (ensemble_size < 2) throw ConfigError("init_ensemble: need at least 2 members");
    if (prior.tau2 <= 0.0) throw ConfigError("init_ensemble: tau^2 must be positive");
    const int n_x = static_cast<int>(u0.size());
    const int n_coef = static_cast<int>(prior.mean.size());
    const double tau = std::sqrt(prior.tau2);

    AugmentedEnsemble ens;
    ens.state_size = n_x;
    ens.members.resize(n_x + n_coef, ensemble_size);
    for (int l = 0; l < ensemble_size; ++l) {
        ens.members.col(l).head(n_x) = u0;
        if (state_prior_std > 0.0) {
            RngStream s(master_seed, "ens-init-state", static_cast<std::uint64_t>(l));
            for (int i = 0; i < n_x; ++i) ens.members(i, l) += state_prior_std * s.normal();
        }
        for (int k = 0; k < n_coef; ++k) {
            RngStream s(master_seed, "ens-init", static_cast<std::uint64_t>(l),
                        static_cast<std::uint64_t>(k));
            ens.members(n_x + k, l) = prior.mean[k] + tau * s.normal();
        }
    }
    return ens;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> ensemble_moments(const AugmentedEnsemble& ens) {
    const int n = ens.ensemble_size();
    if (n < 2) throw ConfigError("ensemble_moments: need at least 2 members");
    Eigen::VectorXd mean = ens.members.rowwise().mean();
    Eigen::MatrixXd anomalies = ens.members.colwise() - mean;
    Eigen::MatrixXd cov = anomalies * anomalies.transpose() / (n - 1);
    return {std::move(mean), std::move(cov)};
}

Eigen::MatrixXd kalman_gain(const Eigen::MatrixXd& covariance, const std::vector<int>& indices,
                            double gamma) {
    if (!covariance.allFinite()) throw NumericError("kalman_gain: non-finite covariance");
    const int n_obs = static_cast<int>(indices.size());
    Eigen::MatrixXd cross(covariance.rows(), n_obs);  // P G^T
    for (int j = 0; j < n_obs; ++j) cross.col(j) = covariance.col(indices[j]);
    Eigen::MatrixXd innov_cov(n_obs, n_obs);          // G P G^T + gamma I
    for (int i = 0; i < n_obs; ++i)
        for (int j = 0; j < n_obs; ++j) innov_cov(i, j) = covariance(indices[i], indices[j]);
    innov_cov.diagonal().array() += gamma;
    return innov_cov.llt().solve(cross.transpose()).transpose();
}

void analysis_update(AugmentedEnsemble& ens, const ObservationRecord& record, double gamma,
                     std::span<RngStream> perturb_streams) {
    if (ens.phase != EnsemblePhase::Forecast)
        throw ConfigError("analysis_update: ensemble is not in the forecast phase");
    const int n_ens = ens.ensemble_size();
    const int n_obs = static_cast<int>(record.indices.size());
    if (static_cast<int>(perturb_streams.size()) != n_ens)
        throw DimensionError("analysis_update: one perturbation stream per member required");

    const Eigen::VectorXd mean = ens.members.rowwise().mean();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_ens - 1));
    Eigen::MatrixXd anomalies = (ens.members.colwise() - mean) * scale;
    Eigen::MatrixXd obs_anom(n_obs, n_ens);  // G A
    for (int j = 0; j < n_obs; ++j) obs_anom.row(j) = anomalies.row(record.indices[j]);

    Eigen::MatrixXd innov_cov = obs_anom * obs_anom.transpose();
    innov_cov.diagonal().array() += gamma;
    Eigen::MatrixXd cross = anomalies * obs_anom.transpose();  // A (G A)^T = P G^T
    Eigen::MatrixXd gain = innov_cov.llt().solve(cross.transpose()).transpose();

    // Perturbed innovations, one column per member, draws in fixed member order.
    const double noise_std = std::sqrt(gamma);
    Eigen::MatrixXd innovations(n_obs, n_ens);
    for (int l = 0; l < n_ens; ++l) {
        for (int j = 0; j < n_obs; ++j)
            innovations(j, l) = record.values[j] - ens.members(record.indices[j], l) +
                                noise_std * perturb_streams[l].normal();
    }
    ens.members.noalias() += gain * innovations;
    ens.phase = EnsemblePhase::Analysis;

    if (!ens.members.allFinite()) {
        for (int l = 0; l < n_ens; ++l)
            if (!ens.members.col(l).allFinite())
                throw NumericError("analysis_update: non-finite member " + std::to_string(l) +
                                   " at time " + std::to_string(record.time));
    }
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> closure_estimate(const AugmentedEnsemble& ens,
                                                             const BasisSet& basis,
                                                             const Eigen::VectorXd& sigma) {
    const int n_ens = ens.ensemble_size();
    if (n_ens < 2) throw ConfigError("closure_estimate: need at least 2 members");
    const int n_x = ens.state_size;
    if (basis.num_bases() != ens.num_coeffs())
        throw DimensionError("closure_estimate: basis count != coefficient block size");
    if (basis.num_bases() == 0)
        return {Eigen::VectorXd::Zero(n_x), Eigen::VectorXd::Zero(n_x)};

    const Eigen::MatrixXd eta = ens.members.bottomRows(ens.num_coeffs());
    const Eigen::MatrixXd fields = basis.eval * (sigma.asDiagonal() * eta);  // N_x x N_ens
    Eigen::VectorXd mean = fields.rowwise().mean();
    Eigen::VectorXd var =
        (fields.colwise() - mean).array().square().rowwise().sum() / (n_ens - 1);
    return {std::move(mean), var.cwiseSqrt()};
}

double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) throw ConfigError("normal_quantile: p must be in (0, 1)");
    // Acklam's rational approximation, then one Halley refinement.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> credible_band(const Eigen::VectorXd& mean,
                                                          const Eigen::VectorXd& std_dev,
                                                          double level) {
    const double z = normal_quantile(0.5 * (1.0 + level));
    return {mean - z * std_dev, mean + z * std_dev};
}

namespace {

void parallel_for_members(int n_members, int threads, const std::function<void(int)>& body) {
    if (threads <= 1) {
        for (int l = 0; l < n_members; ++l) body(l);
        return;
    }
    std::vector<std::thread> pool;
    const int chunk = (n_members + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int begin = t * chunk;
        const int end = std::min(n_members, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            for (int l = begin; l < end; ++l) body(l);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

FilterResult run_filter(const FilterSettings& settings,
                        const std::vector<ObservationRecord>& observations,
                        const EvolutionModel& model, const BasisSet& basis,
                        const Eigen::VectorXd& sigma, const CoefficientPrior& prior,
                        const Field& u0) {
    const int n_ens = settings.ensemble_size;
    const int n_coef = basis.num_bases();
    if (prior.mean.size() != n_coef)
        throw DimensionError("run_filter: prior mean length != basis count");
    if (sigma.size() != n_coef) throw DimensionError("run_filter: sigma length != basis count");

    AugmentedEnsemble ens =
        init_ensemble(u0, prior, n_ens, settings.master_seed, settings.state_prior_std);

    // Per-member forecast streams, one per coefficient so runs with fewer
    // coefficients consume a prefix of the larger run's noise (common random
    // numbers across hyperparameter cells).
    std::vector<std::vector<RngStream>> forecast_streams(n_ens);
    std::vector<RngStream> perturb_streams(n_ens);
    for (int l = 0; l < n_ens; ++l) {
        forecast_streams[l].reserve(n_coef);
        for (int k = 0; k < n_coef; ++k)
            forecast_streams[l].emplace_back(settings.master_seed, "member-forecast",
                                             static_cast<std::uint64_t>(l),
                                             static_cast<std::uint64_t>(k));
        perturb_streams[l] = RngStream(settings.master_seed, "member-perturbation",
                                       static_cast<std::uint64_t>(l));
    }

    FilterResult result;
    result.state_size = ens.state_size;
    result.num_coeffs = n_coef;
    result.ensemble_size = n_ens;
    result.gamma = settings.gamma;

    const int n_x = ens.state_size;
    double t_prev = 0.0;
    for (std::size_t i = 0; i < observations.size(); ++i) {
        const ObservationRecord& rec = observations[i];

        parallel_for_members(n_ens, settings.threads, [&](int l) {
            AugmentedState z{ens.members.col(l).head(n_x), ens.members.col(l).tail(n_coef)};
            z = forecast_substeps(z, t_prev, rec.time, model, basis, sigma,
                                  std::span<RngStream>(forecast_streams[l]));
            ens.members.col(l).head(n_x) = z.u;
            ens.members.col(l).tail(n_coef) = z.eta;
        });
        ens.time = rec.time;
        ens.phase = EnsemblePhase::Forecast;
        if (!ens.members.allFinite()) {
            for (int l = 0; l < n_ens; ++l)
                if (!ens.members.col(l).allFinite())
                    throw NumericError("run_filter: non-finite forecast member " +
                                       std::to_string(l) + " at observation " + std::to_string(i));
        }

        FilterTimeRecord out;
        out.time = rec.time;
        const Eigen::VectorXd mean_f = ens.members.rowwise().mean();
        const int n_obs = static_cast<int>(rec.indices.size());
        out.obs_forecast_mean.resize(n_obs);
        for (int j = 0; j < n_obs; ++j) out.obs_forecast_mean[j] = mean_f[rec.indices[j]];
        out.innovation = rec.values - out.obs_forecast_mean;
        const double scale = 1.0 / std::sqrt(static_cast<double>(n_ens - 1));
        out.obs_anomaly.resize(n_obs, n_ens);
        for (int j = 0; j < n_obs; ++j)
            out.obs_anomaly.row(j) =
                (ens.members.row(rec.indices[j]).array() - mean_f[rec.indices[j]]) * scale;

        analysis_update(ens, rec, settings.gamma, std::span<RngStream>(perturb_streams));

        const Eigen::VectorXd mean_a = ens.members.rowwise().mean();
        out.analysis_mean_u = mean_a.head(n_x);
        out.analysis_mean_eta = mean_a.tail(n_coef);
        auto [cmean, cstd] = closure_estimate(ens, basis, sigma);
        out.closure_mean = std::move(cmean);
        out.closure_std = std::move(cstd);
        result.records.push_back(std::move(out));

        t_prev = rec.time;
    }
    return result;
}

}  // namespace closure
