#pragma once

#include "closure/filter.hpp"
#include "closure/grid.hpp"

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace closure {

// Sum over analysis times of log det S_i + d_i^T S_i^{-1} d_i with innovation
// d_i = y_i - G m_f and S_i = G P_f G^T + gamma I. Additive 2*pi constants are
// dropped. Returns +inf when any S_i fails its Cholesky factorization.
//
// paper_literal swaps in det(G P_f G^T) (no log, no gamma) for comparison; the
// resulting S is typically singular when N_obs exceeds the ensemble size.
double negative_log_marginal_likelihood(const FilterResult& result, double gamma,
                                        bool paper_literal = false);

// The per-analysis-time terms of the objective above; the objective is their sum.
std::vector<double> nll_contributions(const FilterResult& result, double gamma,
                                      bool paper_literal = false);

// sqrt of integrated squared error over integrated centered variance of the
// truth: cell-volume weights in space, trapezoidal weights in time.
double standardized_l2_error(const std::vector<Eigen::VectorXd>& estimate,
                             const std::vector<Eigen::VectorXd>& truth, const SpatialGrid& grid,
                             const std::vector<double>& times);

// Fraction of grid points with lower <= truth <= upper.
double coverage_fraction(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                         const Eigen::VectorXd& truth);

struct SearchCell {
    double sigma = 0.0;
    int num_basis_param = 0;  // the M value of the cell
    double nll = 0.0;
    double l2_error = 0.0;
    bool diverged = false;
};

struct SearchSurface {
    std::vector<SearchCell> cells;  // row-major over (sigma, M)
    int argmin_index = -1;          // by NLL; ties toward smaller sigma, then smaller M
};

struct CellOutcome {
    double nll = 0.0;
    double l2_error = 0.0;
    bool diverged = false;
};

// Evaluates run_cell on every (sigma, M) pair. The callback owns seeding; for
// common random numbers it must reuse identical streams across cells.
SearchSurface grid_search(const std::vector<double>& sigma_grid, const std::vector<int>& m_grid,
                          const std::function<CellOutcome(double sigma, int m)>& run_cell);

}  // namespace closure
