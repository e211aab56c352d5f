#include "oracles.hpp"

#include "lingdyn/error.hpp"
#include "lingdyn/thermo.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace lingdyn::doubled;
namespace oracle = lingdyn::oracle;

namespace {

TEST(Weights, Basics) {
    const FockCutoff cut(60);
    const auto w0 = weights(0.0, cut);
    EXPECT_EQ(w0[0], 1.0);
    for (std::size_t n = 1; n < w0.size(); ++n) EXPECT_EQ(w0[n], 0.0);

    const auto w = weights(0.5, cut);
    const StateVector v = theta_vacuum_vector(0.5, cut);
    EXPECT_NEAR(w[0], std::norm(v[0]), 1e-15);
    EXPECT_NEAR(w[0], 0.786448, 1e-6);
    double sum = 0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        EXPECT_GT(w[n], 0.0);
        EXPECT_LT(w[n], 1.0);
        if (n) EXPECT_LT(w[n], w[n - 1]);
        EXPECT_NEAR(w[n], std::norm(v[cut.index(static_cast<int>(n), static_cast<int>(n))]), 1e-15);
        sum += w[n];
    }
    EXPECT_NEAR(sum, 1.0 - tail_bound(0.5, cut), 1e-14);
}

TEST(Entropy, RoutesAgree) {
    const FockCutoff cut(60);
    EXPECT_EQ(entropy(0.0, cut), 0.0);
    const double c2 = std::cosh(0.5) * std::cosh(0.5), s2 = std::sinh(0.5) * std::sinh(0.5);
    EXPECT_NEAR(entropy(0.5, cut), c2 * std::log(c2) - s2 * std::log(s2), 1e-9);
    for (double theta : {0.05, 0.3, 0.5, 0.9, 1.2}) {
        const EntropyRoutes r = entropy_routes(theta, cut);
        EXPECT_NEAR(r.weights_route, oracle::squeezed_entropy(theta), 1e-9 + 100 * r.tail);
        // The A A^dag term is cut off at the top level, which leaks a multiple of the tail mass.
        EXPECT_NEAR(r.operator_route, r.weights_route, 1e-9 + 100.0 * r.tail);
        EXPECT_NEAR(r.signed_sum, -r.weights_route, 1e-12);
        EXPECT_NEAR(r.closed_form, oracle::squeezed_entropy(theta), 1e-12);
    }
}

TEST(Entropy, IncreasesWithSqueeze) {
    const FockCutoff cut(60);
    double prev = -1;
    for (int k = 1; k <= 10; ++k) {
        const double s = entropy(0.1 * k, cut);
        EXPECT_GT(s, prev);
        EXPECT_NEAR(entropy(-0.1 * k, cut), s, 1e-12);
        prev = s;
    }
}

TEST(FreeEnergy, ValuesAndMinimum) {
    const FockCutoff cut(60);
    EXPECT_NEAR(free_energy(0.0, 1.0, 1.0, cut), 0.0, 1e-15);
    const double c2 = std::cosh(0.5) * std::cosh(0.5), s2 = std::sinh(0.5) * std::sinh(0.5);
    EXPECT_NEAR(free_energy(0.5, 1.0, 1.0, cut), s2 - (c2 * std::log(c2) - s2 * std::log(s2)), 1e-9);
    EXPECT_NEAR(free_energy(0.5, 1.0, 1.0, cut), oracle::squeezed_number(0.5) - oracle::squeezed_entropy(0.5), 1e-9);
    for (auto [omega, beta] : {std::pair{1.0, 1.0}, {2.0, 0.7}, {0.5, 3.0}}) {
        const FreeEnergyMinimum m = minimize_free_energy(omega, beta, cut);
        EXPECT_NEAR(m.number, oracle::bose_occupation(omega, beta), 1e-6);
        EXPECT_NEAR(std::sinh(stationary_theta(omega, beta)), std::sqrt(oracle::bose_occupation(omega, beta)), 1e-12);
        // A coarse scan never finds anything lower.
        for (int k = 0; k <= 120; ++k)
            EXPECT_GE(free_energy(0.01 * k, omega, beta, cut), m.free_energy - 1e-12);
    }
    EXPECT_THROW(free_energy(0.1, -1.0, 1.0, cut), lingdyn::DomainError);
    EXPECT_THROW(free_energy(0.1, 1.0, 0.0, cut), lingdyn::DomainError);
}

TEST(Heat, ConstantPathHasZeroResidual) {
    const FockCutoff cut(60);
    std::vector<std::pair<double, double>> path;
    for (int k = 0; k < 5; ++k) path.push_back({0.1 * k, 0.4});
    const HeatReport r = heat_relation_check(path, 1.0, 1.0, cut);
    EXPECT_EQ(r.residual, 0.0);
    EXPECT_EQ(r.max_path_residual, 0.0);
}

TEST(Heat, MatchedRampThroughStationaryPoint) {
    const FockCutoff cut(60);
    const double star = stationary_theta(1.0, 1.0);
    const HeatReport r = heat_relation_check(linear_ramp(0.0, 0.02, 21, star), 1.0, 1.0, cut);
    EXPECT_TRUE(r.crosses_stationary);
    EXPECT_LE(r.residual, 1e-4);
    EXPECT_NEAR(r.theta_star, star, 1e-15);
}

TEST(Heat, MismatchedBetaReportsResidual) {
    const FockCutoff cut(60);
    const double star = stationary_theta(1.0, 1.0);
    const HeatReport r = heat_relation_check(linear_ramp(0.0, 0.02, 21, star), 1.0, 2.0, cut);
    EXPECT_FALSE(r.crosses_stationary);
    EXPECT_GT(r.residual, 0.1);
    // dE/dt - (1/beta) dS/dt = 2 s c (omega - ln(c^2/s^2)/beta) with rate 1
    const double s = std::sinh(star), c = std::cosh(star);
    EXPECT_NEAR(r.residuals[r.residuals.size() / 2], 2 * s * c * (1.0 - 0.5 * std::log(c * c / (s * s))), 1e-4);
}

TEST(Heat, DegeneratePaths) {
    const FockCutoff cut(60);
    EXPECT_THROW(heat_relation_check({{0, 0.1}, {1, 0.2}}, 1, 1, cut), lingdyn::DomainError);
    EXPECT_THROW(heat_relation_check({{0, 0.1}, {0, 0.2}, {1, 0.3}}, 1, 1, cut), lingdyn::DomainError);
}

TEST(ThetaVacuum, PerModeFactorization) {
    const FockCutoff cut(60);
    const ThetaVacuum vac({0.1, 0.5, 0.9}, cut, std::string("tree"));
    EXPECT_EQ(*vac.concept_tag(), "tree");
    EXPECT_NEAR(vac.total_number(),
                oracle::squeezed_number(0.1) + oracle::squeezed_number(0.5) + oracle::squeezed_number(0.9), 1e-9);
    EXPECT_NEAR(vac.total_entropy(),
                oracle::squeezed_entropy(0.1) + oracle::squeezed_entropy(0.5) + oracle::squeezed_entropy(0.9), 1e-9);
    EXPECT_NEAR(vac.overlap_with_bare(),
                oracle::vacuum_overlap(0.1) * oracle::vacuum_overlap(0.5) * oracle::vacuum_overlap(0.9), 1e-12);
    const ThetaVacuum other({0.1, 0.5, 0.4}, cut);
    EXPECT_NEAR(vac.overlap_with(other, 2), 1.0 / std::cosh(0.5), 1e-12);
    const auto serial = vac.reports(1);
    const auto parallel = vac.reports(3);
    ASSERT_EQ(serial.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(serial[k].entropy, parallel[k].entropy);
}

} // namespace
