#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closure/estimate.hpp"
#include "closure/filter.hpp"
#include "closure/grid.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

using namespace closure;

namespace {

FilterTimeRecord make_record(double time, const Eigen::VectorXd& innovation,
                             const Eigen::MatrixXd& obs_anomaly) {
    FilterTimeRecord r;
    r.time = time;
    r.innovation = innovation;
    r.obs_anomaly = obs_anomaly;
    return r;
}

Eigen::MatrixXd random_matrix(int rows, int cols, unsigned seed) {
    Eigen::MatrixXd A(rows, cols);
    unsigned s = seed;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            s = s * 1664525u + 1013904223u;
            A(i, j) = (s >> 8) * (1.0 / (1u << 24)) - 0.5;
        }
    return A;
}

}  // namespace

TEST_CASE("negative log marginal likelihood: scalar hand cases") {
    FilterResult res;
    res.gamma = 1.0;

    // S = 0 + gamma = 1, d = 0: log 1 + 0 = 0
    Eigen::VectorXd d0 = Eigen::VectorXd::Zero(1);
    res.records.push_back(make_record(0.1, d0, Eigen::MatrixXd::Zero(1, 4)));
    CHECK(negative_log_marginal_likelihood(res, 1.0) == doctest::Approx(0.0).epsilon(1e-14));

    // second time with d = 2, S = 1: contribution 0 + 4
    Eigen::VectorXd d2 = Eigen::VectorXd::Constant(1, 2.0);
    res.records.push_back(make_record(0.2, d2, Eigen::MatrixXd::Zero(1, 4)));
    CHECK(negative_log_marginal_likelihood(res, 1.0) == doctest::Approx(4.0).epsilon(1e-12));

    // scalar with anomaly: S = a^2 + gamma
    Eigen::MatrixXd A(1, 4);
    A << 0.5, -0.5, 0.5, -0.5;  // already pre-scaled; a^2 = sum of squares = 1
    FilterResult res2;
    res2.gamma = 0.5;
    Eigen::VectorXd d1 = Eigen::VectorXd::Constant(1, 1.0);
    res2.records.push_back(make_record(0.1, d1, A));
    // S = 1 + 0.5, term = log(1.5) + 1/1.5
    CHECK(negative_log_marginal_likelihood(res2, 0.5) ==
          doctest::Approx(std::log(1.5) + 1.0 / 1.5).epsilon(1e-12));
}

TEST_CASE("NLL matches a dense Cholesky oracle on a 3-observation system") {
    const int n_obs = 3, n_ens = 8;
    Eigen::MatrixXd A = random_matrix(n_obs, n_ens, 4711);
    Eigen::VectorXd d(3);
    d << 0.3, -1.2, 0.7;
    const double gamma = 0.2;

    FilterResult res;
    res.gamma = gamma;
    res.records.push_back(make_record(0.5, d, A));

    Eigen::MatrixXd S = A * A.transpose() + gamma * Eigen::MatrixXd::Identity(3, 3);
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    REQUIRE(llt.info() == Eigen::Success);
    const double logdet = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double quad = d.dot(llt.solve(d));
    const double want = logdet + quad;

    CHECK(negative_log_marginal_likelihood(res, gamma) == doctest::Approx(want).epsilon(1e-10));
    auto terms = nll_contributions(res, gamma);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("NLL decomposes over times and responds to gamma") {
    FilterResult res;
    res.gamma = 0.1;
    for (int t = 0; t < 4; ++t) {
        Eigen::MatrixXd A = random_matrix(2, 6, 100 + t);
        Eigen::VectorXd d = random_matrix(2, 1, 200 + t).col(0);
        res.records.push_back(make_record(0.1 * (t + 1), d, A));
    }
    auto terms = nll_contributions(res, 0.1);
    double sum = 0.0;
    for (double v : terms) sum += v;
    CHECK(negative_log_marginal_likelihood(res, 0.1) == doctest::Approx(sum).epsilon(1e-12));

    // the literal variant drops gamma entirely: with rank-deficient anomalies
    // (2 obs but rank 1) it degenerates to a zero determinant
    Eigen::MatrixXd rank1 = Eigen::MatrixXd::Zero(2, 6);
    rank1.row(0) = random_matrix(1, 6, 55).row(0);
    rank1.row(1) = 2.0 * rank1.row(0);
    FilterResult res_lit;
    res_lit.gamma = 0.1;
    res_lit.records.push_back(make_record(0.1, Eigen::VectorXd::Ones(2), rank1));
    const double lit = negative_log_marginal_likelihood(res_lit, 0.1, true);
    CHECK(std::isinf(lit));
    // the regularized default stays finite on the same inputs
    CHECK(std::isfinite(negative_log_marginal_likelihood(res_lit, 0.1, false)));
}

TEST_CASE("standardized L2 error: exact hand cases") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 50);
    std::vector<double> times{0.25, 0.5, 0.75, 1.0};
    std::vector<Eigen::VectorXd> truth, same, offset;
    for (std::size_t t = 0; t < times.size(); ++t) {
        Eigen::VectorXd f = random_matrix(50, 1, 900 + static_cast<unsigned>(t)).col(0);
        truth.push_back(f);
        same.push_back(f);
    }
    // identical estimate: error 0
    CHECK(standardized_l2_error(same, truth, g, times) == doctest::Approx(0.0).epsilon(1e-14));

    // estimate == space-time mean of truth (trapezoid-weighted in time, as the
    // metric defines it): error exactly 1
    const double w[4] = {0.5, 1.0, 1.0, 0.5};  // uniform time spacing
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < truth.size(); ++t) {
        num += w[t] * truth[t].sum();
        den += w[t] * truth[t].size();
    }
    const double bar = num / den;
    for (std::size_t t = 0; t < times.size(); ++t)
        offset.push_back(Eigen::VectorXd::Constant(50, bar));
    CHECK(standardized_l2_error(offset, truth, g, times) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("standardized L2 error matches a quadrature oracle") {
    SpatialGrid g = SpatialGrid::make_1d(2.0, 40);
    std::vector<double> times{0.1, 0.3, 0.6, 1.0};  // non-uniform spacing
    std::vector<Eigen::VectorXd> est, truth;
    for (std::size_t t = 0; t < times.size(); ++t) {
        est.push_back(random_matrix(40, 1, 10 + static_cast<unsigned>(t)).col(0));
        truth.push_back(random_matrix(40, 1, 20 + static_cast<unsigned>(t)).col(0));
    }

    // oracle: trapezoid in time, cell volume (= h, uniform) in space
    std::vector<double> wt(times.size(), 0.0);
    for (std::size_t t = 0; t + 1 < times.size(); ++t) {
        const double half = 0.5 * (times[t + 1] - times[t]);
        wt[t] += half;
        wt[t + 1] += half;
    }
    const double h = g.spacing(0);
    double tbar_num = 0.0, tbar_den = 0.0;
    for (std::size_t t = 0; t < times.size(); ++t) {
        tbar_num += wt[t] * h * truth[t].sum();
        tbar_den += wt[t] * h * truth[t].size();
    }
    const double bar = tbar_num / tbar_den;
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < times.size(); ++t) {
        num += wt[t] * h * (est[t] - truth[t]).squaredNorm();
        den += wt[t] * h * (truth[t].array() - bar).square().sum();
    }
    const double want = std::sqrt(num / den);
    CHECK(standardized_l2_error(est, truth, g, times) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("L2 error is invariant to relabeling space but not to scaling the residual") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 30);
    std::vector<double> times{0.5, 1.0};
    std::vector<Eigen::VectorXd> est{random_matrix(30, 1, 1).col(0), random_matrix(30, 1, 2).col(0)};
    std::vector<Eigen::VectorXd> truth{random_matrix(30, 1, 3).col(0), random_matrix(30, 1, 4).col(0)};
    const double base = standardized_l2_error(est, truth, g, times);

    // doubling the residual doubles the standardized error
    std::vector<Eigen::VectorXd> est2;
    for (std::size_t t = 0; t < 2; ++t) est2.push_back(truth[t] + 2.0 * (est[t] - truth[t]));
    CHECK(standardized_l2_error(est2, truth, g, times) == doctest::Approx(2.0 * base).epsilon(1e-9));
}

TEST_CASE("coverage_fraction counts inclusively") {
    Eigen::VectorXd lo(4), hi(4), truth(4);
    lo << 0.0, 0.0, 0.0, 0.0;
    hi << 1.0, 1.0, 1.0, 1.0;
    truth << 0.5, 0.0, 1.0, 1.5;  // inside, on lower edge, on upper edge, outside
    CHECK(coverage_fraction(lo, hi, truth) == doctest::Approx(0.75).epsilon(1e-14));
    truth << -1, 2, -1, 2;
    CHECK(coverage_fraction(lo, hi, truth) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("grid_search covers every cell and breaks ties toward smaller values") {
    std::vector<double> sg{0.1, 0.2};
    std::vector<int> mg{3, 5, 7};
    std::vector<std::pair<double, int>> visited;
    SearchSurface surf = grid_search(sg, mg, [&](double s, int m) {
        visited.push_back({s, m});
        CellOutcome out;
        out.nll = 10.0;  // all equal: ties must resolve to the first cell
        out.l2_error = 1.0;
        return out;
    });
    REQUIRE(surf.cells.size() == 6);
    CHECK(visited.size() == 6);
    // row-major, sigma outer
    CHECK(surf.cells[0].sigma == 0.1);
    CHECK(surf.cells[0].num_basis_param == 3);
    CHECK(surf.cells[1].num_basis_param == 5);
    CHECK(surf.cells[3].sigma == 0.2);
    CHECK(surf.argmin_index == 0);

    // a strict minimum wins regardless of position
    SearchSurface surf2 = grid_search(sg, mg, [&](double s, int m) {
        CellOutcome out;
        out.nll = (s == 0.2 && m == 5) ? 1.0 : 10.0;
        out.l2_error = 1.0;
        return out;
    });
    CHECK(surf2.argmin_index == 4);
    CHECK(surf2.cells[4].sigma == 0.2);
    CHECK(surf2.cells[4].num_basis_param == 5);

    // diverged cells never win
    SearchSurface surf3 = grid_search(sg, mg, [&](double s, int m) {
        CellOutcome out;
        out.nll = (s == 0.1 && m == 3) ? -std::numeric_limits<double>::infinity() : 5.0;
        out.diverged = (s == 0.1 && m == 3);
        out.l2_error = 1.0;
        return out;
    });
    CHECK(surf3.argmin_index == 1);

    // degenerate 1x1 grid
    SearchSurface surf4 = grid_search({0.5}, {4}, [&](double, int) {
        return CellOutcome{2.0, 0.3, false};
    });
    CHECK(surf4.argmin_index == 0);
    CHECK(surf4.cells[0].nll == 2.0);
}
