#include "closure/estimate.hpp"

#include "closure/errors.hpp"

#include <cmath>
#include <limits>

namespace closure {

std::vector<double> nll_contributions(const FilterResult& result, double gamma,
                                      bool paper_literal) {
    std::vector<double> terms;
    terms.reserve(result.records.size());
    for (const FilterTimeRecord& rec : result.records) {
        Eigen::MatrixXd innov_cov = rec.obs_anomaly * rec.obs_anomaly.transpose();
        if (!paper_literal) innov_cov.diagonal().array() += gamma;
        if (rec.innovation.size() != innov_cov.rows())
            throw DimensionError(
                "negative_log_marginal_likelihood: innovation/covariance shape mismatch");

        if (paper_literal) {
            Eigen::FullPivLU<Eigen::MatrixXd> lu(innov_cov);
            if (!lu.isInvertible()) {
                terms.push_back(std::numeric_limits<double>::infinity());
                continue;
            }
            terms.push_back(lu.determinant() + rec.innovation.dot(lu.solve(rec.innovation)));
            continue;
        }
        Eigen::LLT<Eigen::MatrixXd> llt(innov_cov);
        if (llt.info() != Eigen::Success) {
            terms.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        double log_det = 0.0;
        const auto& l = llt.matrixLLT();
        for (int i = 0; i < l.rows(); ++i) log_det += 2.0 * std::log(l(i, i));
        terms.push_back(log_det + rec.innovation.dot(llt.solve(rec.innovation)));
    }
    return terms;
}

double negative_log_marginal_likelihood(const FilterResult& result, double gamma,
                                        bool paper_literal) {
    double total = 0.0;
    for (double term : nll_contributions(result, gamma, paper_literal)) {
        total += term;
        if (!std::isfinite(total)) return std::numeric_limits<double>::infinity();
    }
    return total;
}

namespace {

std::vector<double> trapezoid_weights(const std::vector<double>& times) {
    const std::size_t n = times.size();
    std::vector<double> w(n, 1.0);
    if (n < 2) return w;
    w[0] = 0.5 * (times[1] - times[0]);
    w[n - 1] = 0.5 * (times[n - 1] - times[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) w[i] = 0.5 * (times[i + 1] - times[i - 1]);
    return w;
}

}  // namespace

double standardized_l2_error(const std::vector<Eigen::VectorXd>& estimate,
                             const std::vector<Eigen::VectorXd>& truth, const SpatialGrid& grid,
                             const std::vector<double>& times) {
    if (estimate.size() != truth.size() || estimate.size() != times.size())
        throw DimensionError("standardized_l2_error: time-series length mismatch");
    if (estimate.empty()) throw ConfigError("standardized_l2_error: empty time series");

    double cell = grid.spacing(0);
    if (grid.dim == 2) cell *= grid.spacing(1);
    const std::vector<double> wt = trapezoid_weights(times);

    double total_weight = 0.0;
    double truth_sum = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i].size() != grid.num_points() || estimate[i].size() != grid.num_points())
            throw DimensionError("standardized_l2_error: field length != grid point count");
        truth_sum += wt[i] * cell * truth[i].sum();
        total_weight += wt[i] * cell * grid.num_points();
    }
    const double truth_mean = truth_sum / total_weight;

    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        numerator += wt[i] * cell * (estimate[i] - truth[i]).squaredNorm();
        denominator += wt[i] * cell * (truth[i].array() - truth_mean).square().sum();
    }
    if (denominator <= 0.0)
        throw ConfigError("standardized_l2_error: truth field is constant, metric undefined");
    return std::sqrt(numerator / denominator);
}

double coverage_fraction(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                         const Eigen::VectorXd& truth) {
    if (lower.size() != truth.size() || upper.size() != truth.size())
        throw DimensionError("coverage_fraction: shape mismatch");
    int covered = 0;
    for (int i = 0; i < truth.size(); ++i)
        if (lower[i] <= truth[i] && truth[i] <= upper[i]) ++covered;
    return static_cast<double>(covered) / truth.size();
}

SearchSurface grid_search(const std::vector<double>& sigma_grid, const std::vector<int>& m_grid,
                          const std::function<CellOutcome(double, int)>& run_cell) {
    if (sigma_grid.empty() || m_grid.empty())
        throw ConfigError("grid_search: empty hyperparameter grid");
    SearchSurface surface;
    surface.cells.reserve(sigma_grid.size() * m_grid.size());
    for (double sigma : sigma_grid)
        for (int m : m_grid) {
            const CellOutcome out = run_cell(sigma, m);
            SearchCell cell;
            cell.sigma = sigma;
            cell.num_basis_param = m;
            cell.nll = out.diverged ? std::numeric_limits<double>::infinity() : out.nll;
            cell.l2_error = out.l2_error;
            cell.diverged = out.diverged;
            surface.cells.push_back(cell);
        }
    // Argmin by NLL; the row-major (sigma outer, M inner) order breaks ties
    // toward smaller sigma, then smaller M.
    int best = 0;
    for (int i = 1; i < static_cast<int>(surface.cells.size()); ++i)
        if (surface.cells[i].nll < surface.cells[best].nll) best = i;
    surface.argmin_index = best;
    return surface;
}

}  // namespace closure
