#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "closure/basis.hpp"
#include "closure/dynamics.hpp"
#include "closure/grid.hpp"
#include "closure/rng.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <vector>

using namespace closure;

TEST_CASE("stable_time_step follows the diffusive rule and the Courant cap") {
    SpatialGrid g1 = SpatialGrid::make_1d(1.0, 101);  // h = 0.01
    const double h = g1.spacing(0);
    // dt = 0.5 h^2 / (2 * dim * D)
    CHECK(stable_time_step(g1, 0.01, 0.0) ==
          doctest::Approx(0.5 * h * h / (2.0 * 0.01)).epsilon(1e-12));

    SpatialGrid g2 = SpatialGrid::make_2d(1.0, 1.0, 51, 51);
    const double h2 = g2.min_spacing();
    CHECK(stable_time_step(g2, 0.01, 0.0) ==
          doctest::Approx(0.5 * h2 * h2 / (4.0 * 0.01)).epsilon(1e-12));

    // with advection, dt is halved until |c| dt / h <= 0.5
    const double dt = stable_time_step(g1, 1e-6, 10.0);
    CHECK(10.0 * dt / h <= 0.5 + 1e-12);
    CHECK(10.0 * (2.0 * dt) / h > 0.5);  // halving was minimal
}

TEST_CASE("KPP right-hand side and closure formulas") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 11);
    Field u = Field::Constant(11, 0.5);
    // constant field: laplacian 0 under zero-flux, so rhs = u(1-u) = 0.25
    Field r = kpp_incomplete_rhs(u, 0.01, g);
    CHECK((r.array() - 0.25).abs().maxCoeff() < 1e-12);
    // closure (1 - 1/K) u^2 with K = 2/3: (1 - 1.5) * 0.25 = -0.125
    Field phi = kpp_true_closure(u, 2.0 / 3.0);
    CHECK((phi.array() + 0.125).abs().maxCoeff() < 1e-12);
}

TEST_CASE("advection-diffusion closure is the negated divergence") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 21);
    Eigen::MatrixXd pts = grid_points(g);
    Field u(21);
    for (int i = 0; i < 21; ++i) u[i] = pts(i, 0);
    Field phi = advdiff_true_closure(u, g, {0.1}, BoundaryCondition::DirichletZero);
    for (int i = 1; i < 20; ++i) CHECK(phi[i] == doctest::Approx(-0.1).epsilon(1e-10));
}

TEST_CASE("solve_truth heat equation decays the first Dirichlet mode at rate pi^2 D") {
    // u0 = sin(pi x) on [0,1] with Dirichlet-zero: u(t) = exp(-pi^2 D t) u0.
    SpatialGrid g = SpatialGrid::make_1d(1.0, 201);
    Eigen::MatrixXd pts = grid_points(g);
    const double D = 0.01;
    Field u0(201);
    for (int i = 0; i < 201; ++i) u0[i] = std::sin(M_PI * pts(i, 0));
    auto rhs = [&](const Field& u) { return advdiff_incomplete_rhs(u, D, g); };
    const double dt = stable_time_step(g, D, 0.0);
    Trajectory tr = solve_truth(rhs, g, BoundaryCondition::DirichletZero, u0, 1.0, dt, {1.0});
    const Field& u1 = tr.at_time(1.0);
    const double decay = std::exp(-M_PI * M_PI * D * 1.0);
    CHECK((u1 - decay * u0).cwiseAbs().maxCoeff() < 2e-4);
}

TEST_CASE("solve_truth converges at first order in dt (Richardson check)") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 41);
    Eigen::MatrixXd pts = grid_points(g);
    Field u0(41);
    for (int i = 0; i < 41; ++i) u0[i] = std::exp(-20.0 * std::pow(pts(i, 0) - 0.5, 2));
    auto rhs = [&](const Field& u) -> Field {
        return kpp_incomplete_rhs(u, 0.01, g) + kpp_true_closure(u, 2.0 / 3.0);
    };
    const double dt0 = stable_time_step(g, 0.01, 0.0);
    auto solve_with = [&](double dt) {
        return solve_truth(rhs, g, BoundaryCondition::NeumannZeroFlux, u0, 0.5, dt, {0.5})
            .at_time(0.5);
    };
    const Field ref = solve_with(dt0 / 16.0);
    const double e1 = (solve_with(dt0) - ref).cwiseAbs().maxCoeff();
    const double e2 = (solve_with(dt0 / 2.0) - ref).cwiseAbs().maxCoeff();
    const double rate = std::log2(e1 / e2);
    CHECK(rate > 0.8);
    CHECK(rate < 1.3);
}

TEST_CASE("heat equation respects the discrete maximum principle") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 101);
    Eigen::MatrixXd pts = grid_points(g);
    Field u0(101);
    for (int i = 0; i < 101; ++i) u0[i] = std::exp(-200.0 * std::pow(pts(i, 0) - 0.25, 2));
    auto rhs = [&](const Field& u) { return advdiff_incomplete_rhs(u, 0.01, g); };
    const double dt = stable_time_step(g, 0.01, 0.0);
    Trajectory tr = solve_truth(rhs, g, BoundaryCondition::DirichletZero, u0, 2.0, dt,
                                {0.5, 1.0, 1.5, 2.0});
    for (const Field& u : tr.fields) {
        CHECK(u.maxCoeff() <= u0.maxCoeff() + 1e-12);
        CHECK(u.minCoeff() >= -1e-12);
    }
}

TEST_CASE("pure-diffusion truth is linear in the initial condition") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 51);
    auto rhs = [&](const Field& u) { return advdiff_incomplete_rhs(u, 0.02, g); };
    const double dt = stable_time_step(g, 0.02, 0.0);
    Eigen::MatrixXd pts = grid_points(g);
    Field a(51), b(51);
    for (int i = 0; i < 51; ++i) {
        a[i] = std::sin(2.0 * M_PI * pts(i, 0));
        b[i] = std::exp(-50.0 * std::pow(pts(i, 0) - 0.6, 2)) * pts(i, 0) * (1.0 - pts(i, 0));
    }
    auto run = [&](const Field& u0) {
        return solve_truth(rhs, g, BoundaryCondition::DirichletZero, u0, 0.4, dt, {0.4})
            .at_time(0.4);
    };
    Field lhs = run(2.0 * a - 0.5 * b);
    Field rhs_f = 2.0 * run(a) - 0.5 * run(b);
    CHECK((lhs - rhs_f).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("step_augmented applies drift and diffusion exactly once") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 25);
    BasisSet basis = bspline_basis(g, 5);
    Eigen::VectorXd sigma = Eigen::VectorXd::Constant(5, 0.2);
    EvolutionModel model;
    model.grid = g;
    model.bc = BoundaryCondition::NeumannZeroFlux;
    model.incomplete_rhs = [&](const Field& u) { return kpp_incomplete_rhs(u, 0.01, g); };
    model.stable_dt = stable_time_step(g, 0.01, 0.0);

    AugmentedState z;
    z.u = Field::Constant(25, 0.3);
    z.eta = Eigen::VectorXd::LinSpaced(5, -1.0, 1.0);
    Eigen::VectorXd noise = Eigen::VectorXd::Constant(5, 0.7);
    const double dt = 0.001;
    AugmentedState z2 = step_augmented(z, dt, model, basis, sigma, noise);

    Field want_u = z.u + dt * (model.incomplete_rhs(z.u) +
                               synthesize_field(basis, {z.eta, sigma}));
    CHECK((z2.u - want_u).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::VectorXd want_eta = z.eta + std::sqrt(dt) * noise;
    CHECK((z2.eta - want_eta).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("coefficient block is a standard Brownian motion: Var ~ t") {
    // 10^4 replicate streams, window [0, t]; sample variance of eta(t) - eta(0)
    // must match t within 5 percent.
    SpatialGrid g = SpatialGrid::make_1d(1.0, 10);
    BasisSet basis = bspline_basis(g, 4);
    Eigen::VectorXd sigma = Eigen::VectorXd::Constant(4, 0.1);
    EvolutionModel model;
    model.grid = g;
    model.bc = BoundaryCondition::NeumannZeroFlux;
    model.incomplete_rhs = [](const Field& u) { return Field::Zero(u.size()); };
    model.stable_dt = 0.01;

    const double t = 0.37;
    const int reps = 10000;
    double sum = 0.0, sum2 = 0.0;
    for (int r = 0; r < reps; ++r) {
        std::vector<RngStream> streams;
        for (int k = 0; k < 4; ++k)
            streams.emplace_back(999, "member-forecast", static_cast<std::uint64_t>(r), k);
        AugmentedState z;
        z.u = Field::Zero(10);
        z.eta = Eigen::VectorXd::Zero(4);
        AugmentedState zt = forecast_substeps(z, 0.0, t, model, basis, sigma, streams);
        sum += zt.eta[0];
        sum2 += zt.eta[0] * zt.eta[0];
    }
    const double mean = sum / reps;
    const double var = sum2 / reps - mean * mean;
    CHECK(std::abs(var - t) < 0.05 * t);
    CHECK(std::abs(mean) < 0.05);
}

TEST_CASE("Brownian increments over disjoint windows are uncorrelated") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 10);
    BasisSet basis = bspline_basis(g, 4);
    Eigen::VectorXd sigma = Eigen::VectorXd::Constant(4, 0.1);
    EvolutionModel model;
    model.grid = g;
    model.bc = BoundaryCondition::NeumannZeroFlux;
    model.incomplete_rhs = [](const Field& u) { return Field::Zero(u.size()); };
    model.stable_dt = 0.01;

    const int reps = 5000;
    double sxy = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
    for (int r = 0; r < reps; ++r) {
        std::vector<RngStream> streams;
        for (int k = 0; k < 4; ++k)
            streams.emplace_back(5150, "member-forecast", static_cast<std::uint64_t>(r), k);
        AugmentedState z;
        z.u = Field::Zero(10);
        z.eta = Eigen::VectorXd::Zero(4);
        AugmentedState za = forecast_substeps(z, 0.0, 0.2, model, basis, sigma, streams);
        AugmentedState zb = forecast_substeps(za, 0.2, 0.4, model, basis, sigma, streams);
        const double x = za.eta[0];
        const double y = zb.eta[0] - za.eta[0];
        sx += x; sy += y; sxy += x * y; sxx += x * x; syy += y * y;
    }
    const double cov = sxy / reps - (sx / reps) * (sy / reps);
    const double vx = sxx / reps - (sx / reps) * (sx / reps);
    const double vy = syy / reps - (sy / reps) * (sy / reps);
    CHECK(std::abs(cov / std::sqrt(vx * vy)) < 0.05);
}

TEST_CASE("forecast_substeps is deterministic and lands exactly on t_to") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 30);
    BasisSet basis = bspline_basis(g, 5);
    Eigen::VectorXd sigma = Eigen::VectorXd::Constant(5, 0.3);
    EvolutionModel model;
    model.grid = g;
    model.bc = BoundaryCondition::NeumannZeroFlux;
    model.incomplete_rhs = [&](const Field& u) { return kpp_incomplete_rhs(u, 0.01, g); };
    model.stable_dt = stable_time_step(g, 0.01, 0.0);

    AugmentedState z;
    z.u = Field::Constant(30, 0.4);
    z.eta = Eigen::VectorXd::Zero(5);
    auto run = [&]() {
        std::vector<RngStream> streams;
        for (int k = 0; k < 5; ++k) streams.emplace_back(77, "member-forecast", 3, k);
        // 0.1 is not an integer multiple of the stable step, so the last
        // substep must be shortened.
        return forecast_substeps(z, 0.0, 0.1, model, basis, sigma, streams);
    };
    AugmentedState a = run();
    AugmentedState b = run();
    CHECK((a.u - b.u).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.eta - b.eta).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.u.allFinite());
}

TEST_CASE("with zero sigma and zero initial eta, forecast reduces to the deterministic solve") {
    SpatialGrid g = SpatialGrid::make_1d(1.0, 41);
    BasisSet basis = bspline_basis(g, 5);
    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(5);
    EvolutionModel model;
    model.grid = g;
    model.bc = BoundaryCondition::NeumannZeroFlux;
    model.incomplete_rhs = [&](const Field& u) { return kpp_incomplete_rhs(u, 0.01, g); };
    model.stable_dt = stable_time_step(g, 0.01, 0.0);

    Eigen::MatrixXd pts = grid_points(g);
    Field u0(41);
    for (int i = 0; i < 41; ++i) u0[i] = 0.5 + 0.3 * std::cos(2.0 * M_PI * pts(i, 0));

    // horizon chosen as an exact multiple of the stable step so both
    // integrators take identical substeps
    const double T = 16.0 * model.stable_dt;
    AugmentedState z;
    z.u = u0;
    z.eta = Eigen::VectorXd::Zero(5);
    std::vector<RngStream> streams;
    for (int k = 0; k < 5; ++k) streams.emplace_back(1, "member-forecast", 0, k);
    AugmentedState zt = forecast_substeps(z, 0.0, T, model, basis, sigma, streams);

    Trajectory tr = solve_truth(model.incomplete_rhs, g, model.bc, u0, T, model.stable_dt, {T});
    CHECK((zt.u - tr.at_time(T)).cwiseAbs().maxCoeff() < 1e-12);
}
