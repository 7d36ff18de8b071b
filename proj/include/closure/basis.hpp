#pragma once

#include "closure/grid.hpp"

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace closure {

enum class BasisKind { CubicBSpline, GaussianRBF };

// How the Gaussian-kernel bandwidth is derived from the centroid set.
//   PaperLiteral:  h = d_max / N_x   (N_x = total grid-point count)
//   LoweHeuristic: h = d_max / sqrt(2 M)  (M = number of kernels)
//   Fixed:         h supplied by the caller
enum class BandwidthRule { PaperLiteral, LoweHeuristic, Fixed };

// A set of spatial basis functions plus their evaluation over a grid.
// eval(i, k) = b_k(x_i). Immutable after construction.
struct BasisSet {
    BasisKind kind = BasisKind::CubicBSpline;
    Eigen::MatrixXd eval;            // N_x x num_bases
    std::vector<double> knots;       // spline metadata
    Eigen::MatrixXd centroids;       // RBF metadata, one row per kernel
    double bandwidth = 0.0;          // RBF metadata
    std::uint64_t seed = 0;          // RBF centroid seed

    int num_bases() const { return static_cast<int>(eval.cols()); }

    // A basis with zero functions: filtering degenerates to plain state
    // estimation with no closure term.
    static BasisSet none(int num_grid_points);
};

struct ScaledCoefficients {
    Eigen::VectorXd eta;
    Eigen::VectorXd sigma;  // strictly positive, same length as eta
};

// Clamped cubic B-spline basis on the grid's 1D extent: 4-fold repeated
// boundary knots, equally spaced interior knots, Cox-de Boor evaluation.
// Requires num_bases >= 4 and a 1D grid.
BasisSet bspline_basis(const SpatialGrid& grid, int num_bases);

// Single clamped cubic B-spline evaluated at x over the given knot vector.
// Exposed so the evaluation matrix can be re-derived pointwise.
double bspline_value(const std::vector<double>& knots, int index, double x);

// Lloyd's algorithm with seeded k-means++ initialization. Rows of points are
// coordinate vectors; returns k centroid rows. An emptied cluster is re-seeded
// at the point farthest from its assigned centroid.
Eigen::MatrixXd kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                       int max_iters = 100);

// Gaussian kernels exp(-|x - c_k|^2 / h^2) with k-means centroids over the grid.
BasisSet gaussian_rbf_basis(const SpatialGrid& grid, int num_bases, std::uint64_t seed,
                            BandwidthRule rule, double fixed_bandwidth = 0.0);

// B * (sigma .* eta)
Eigen::VectorXd synthesize_field(const BasisSet& basis, const ScaledCoefficients& coeffs);

// argmin_eta | B diag(sigma) eta - target |_2, optionally ridge-regularized.
Eigen::VectorXd project_field(const BasisSet& basis, const Eigen::VectorXd& sigma,
                              const Eigen::VectorXd& target, double ridge = 0.0);

}  // namespace closure
