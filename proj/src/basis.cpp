#include "closure/basis.hpp"

#include "closure/errors.hpp"
#include "closure/rng.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace closure {

BasisSet BasisSet::none(int num_grid_points) {
    BasisSet b;
    b.eval = Eigen::MatrixXd::Zero(num_grid_points, 0);
    return b;
}

namespace {

constexpr int kDegree = 3;

std::vector<double> clamped_knots(double a, double b, int num_bases) {
    // num_bases + 4 knots: 4-fold boundary multiplicity, equally spaced interior.
    std::vector<double> t(num_bases + kDegree + 1);
    const int interior = num_bases - kDegree - 1;  // spans - 1
    for (int i = 0; i <= kDegree; ++i) t[i] = a;
    for (int i = 1; i <= interior; ++i)
        t[kDegree + i] = a + (b - a) * i / (interior + 1);
    for (int i = 0; i <= kDegree; ++i) t[num_bases + i] = b;
    return t;
}

}  // namespace

double bspline_value(const std::vector<double>& knots, int index, double x) {
    const double b = knots.back();
    // Degree-0 seed; the domain's right endpoint belongs to the last span.
    auto n0 = [&](int i) -> double {
        if (knots[i] <= x && x < knots[i + 1]) return 1.0;
        if (x == b && knots[i] < knots[i + 1] && knots[i + 1] == b) return 1.0;
        return 0.0;
    };
    double n[kDegree + 1];
    for (int i = 0; i <= kDegree; ++i) n[i] = n0(index + i);
    for (int d = 1; d <= kDegree; ++d) {
        for (int i = 0; i <= kDegree - d; ++i) {
            const int j = index + i;
            double left = 0.0, right = 0.0;
            if (knots[j + d] > knots[j]) left = (x - knots[j]) / (knots[j + d] - knots[j]) * n[i];
            if (knots[j + d + 1] > knots[j + 1])
                right = (knots[j + d + 1] - x) / (knots[j + d + 1] - knots[j + 1]) * n[i + 1];
            n[i] = left + right;
        }
    }
    return n[0];
}

BasisSet bspline_basis(const SpatialGrid& grid, int num_bases) {
    if (grid.dim != 1) throw ConfigError("bspline_basis: only 1D grids are supported");
    if (num_bases < 4)
        throw ConfigError("bspline_basis: cubic splines need at least 4 bases, got " +
                          std::to_string(num_bases));
    BasisSet basis;
    basis.kind = BasisKind::CubicBSpline;
    basis.knots = clamped_knots(0.0, grid.extent[0], num_bases);
    const Eigen::MatrixXd pts = grid_points(grid);
    basis.eval.resize(pts.rows(), num_bases);
    for (int k = 0; k < num_bases; ++k)
        for (int i = 0; i < pts.rows(); ++i)
            basis.eval(i, k) = bspline_value(basis.knots, k, pts(i, 0));
    return basis;
}

Eigen::MatrixXd kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed, int max_iters) {
    const int n = static_cast<int>(points.rows());
    if (k < 1 || k > n)
        throw ConfigError("kmeans: k = " + std::to_string(k) + " with " + std::to_string(n) +
                          " points");
    RngStream rng(seed, "kmeans-init");

    // k-means++ seeding.
    Eigen::MatrixXd centroids(k, points.cols());
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());
    centroids.row(0) = points.row(static_cast<int>(rng.next_u64() % n));
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = (points.row(i) - centroids.row(c - 1)).squaredNorm();
            d2[i] = std::min(d2[i], d);
            total += d2[i];
        }
        double target = rng.uniform() * total;
        int pick = n - 1;
        for (int i = 0; i < n; ++i) {
            target -= d2[i];
            if (target <= 0.0) {
                pick = i;
                break;
            }
        }
        centroids.row(c) = points.row(pick);
    }

    std::vector<int> assign(n, -1);
    double prev_objective = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iters; ++iter) {
        bool changed = false;
        double objective = 0.0;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = (points.row(i) - centroids.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double d = (points.row(i) - centroids.row(c)).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            objective += best_d;
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        assert(objective <= prev_objective * (1.0 + 1e-12) + 1e-300);
        prev_objective = objective;
        if (!changed && iter > 0) break;

        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
        std::vector<int> counts(k, 0);
        for (int i = 0; i < n; ++i) {
            sums.row(assign[i]) += points.row(i);
            ++counts[assign[i]];
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) {
                centroids.row(c) = sums.row(c) / counts[c];
            } else {
                // Re-seed an emptied cluster at the point farthest from its centroid.
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i) {
                    const double d = (points.row(i) - centroids.row(assign[i])).squaredNorm();
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                centroids.row(c) = points.row(far);
                prev_objective = std::numeric_limits<double>::infinity();
            }
        }
    }
    return centroids;
}

BasisSet gaussian_rbf_basis(const SpatialGrid& grid, int num_bases, std::uint64_t seed,
                            BandwidthRule rule, double fixed_bandwidth) {
    if (num_bases < 1) throw ConfigError("gaussian_rbf_basis: need at least 1 basis");
    const Eigen::MatrixXd pts = grid_points(grid);
    BasisSet basis;
    basis.kind = BasisKind::GaussianRBF;
    basis.seed = seed;
    basis.centroids = kmeans(pts, num_bases, seed);

    double d_max = 0.0;
    for (int i = 0; i < num_bases; ++i)
        for (int j = i + 1; j < num_bases; ++j)
            d_max = std::max(d_max, (basis.centroids.row(i) - basis.centroids.row(j)).norm());

    switch (rule) {
        case BandwidthRule::PaperLiteral:
            basis.bandwidth = d_max / grid.num_points();
            break;
        case BandwidthRule::LoweHeuristic:
            basis.bandwidth = d_max / std::sqrt(2.0 * num_bases);
            break;
        case BandwidthRule::Fixed:
            basis.bandwidth = fixed_bandwidth;
            break;
    }
    if (basis.bandwidth <= 0.0) {
        if (num_bases == 1 && rule != BandwidthRule::Fixed)
            basis.bandwidth = grid.extent[0];  // single kernel: d_max is 0
        else
            throw ConfigError("gaussian_rbf_basis: nonpositive bandwidth");
    }

    const double inv_h2 = 1.0 / (basis.bandwidth * basis.bandwidth);
    basis.eval.resize(pts.rows(), num_bases);
    for (int k = 0; k < num_bases; ++k)
        for (int i = 0; i < pts.rows(); ++i)
            basis.eval(i, k) =
                std::exp(-(pts.row(i) - basis.centroids.row(k)).squaredNorm() * inv_h2);
    return basis;
}

Eigen::VectorXd synthesize_field(const BasisSet& basis, const ScaledCoefficients& coeffs) {
    if (coeffs.eta.size() != basis.num_bases() || coeffs.sigma.size() != basis.num_bases())
        throw DimensionError("synthesize_field: coefficient length != basis count");
    if (basis.num_bases() == 0) return Eigen::VectorXd::Zero(basis.eval.rows());
    return basis.eval * coeffs.sigma.cwiseProduct(coeffs.eta);
}

Eigen::VectorXd project_field(const BasisSet& basis, const Eigen::VectorXd& sigma,
                              const Eigen::VectorXd& target, double ridge) {
    if (sigma.size() != basis.num_bases())
        throw DimensionError("project_field: sigma length != basis count");
    if (target.size() != basis.eval.rows())
        throw DimensionError("project_field: target length != grid point count");
    if (basis.num_bases() == 0) return Eigen::VectorXd::Zero(0);

    const Eigen::MatrixXd design = basis.eval * sigma.asDiagonal();
    if (ridge > 0.0) {
        const Eigen::MatrixXd normal =
            design.transpose() * design +
            ridge * Eigen::MatrixXd::Identity(design.cols(), design.cols());
        return normal.ldlt().solve(design.transpose() * target);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < design.cols()) {
        std::string cols;
        const auto perm = qr.colsPermutation().indices();
        for (int c = static_cast<int>(qr.rank()); c < design.cols(); ++c)
            cols += (cols.empty() ? "" : ", ") + std::to_string(perm[c]);
        throw SingularityError("project_field: rank-deficient design matrix; dependent columns: " +
                               cols);
    }
    return qr.solve(target);
}

}  // namespace closure
