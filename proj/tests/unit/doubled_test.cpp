#include "oracles.hpp"

#include "lingdyn/doubled.hpp"
#include "lingdyn/error.hpp"

#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace lingdyn::doubled;

namespace {

TEST(Doubled, LadderOperators) {
    const FockCutoff cut(12);
    const LadderOps ops = ladder_ops(cut);
    EXPECT_LE(interior_residual(commutator(ops.a, ops.a_dag), true), 1e-12);
    EXPECT_LE(interior_residual(commutator(ops.a_tilde, ops.a_tilde_dag), true), 1e-12);
    EXPECT_EQ(commutator(ops.a, ops.a_tilde).max_abs(), 0.0);
    EXPECT_EQ(commutator(ops.a, ops.a_tilde_dag).max_abs(), 0.0);
    EXPECT_EQ(ops.a.apply(bare_vacuum(cut)).norm(), 0.0);
    EXPECT_EQ((ops.a.adjoint().matrix() - ops.a_dag.matrix()).norm(), 0.0);
}

TEST(Doubled, BogoliubovCcrAndInverse) {
    const FockCutoff cut(30);
    for (double theta : {0.0, 0.2, 0.5, -0.7}) {
        const BogoliubovPair p = bogoliubov(theta, cut);
        EXPECT_LE(interior_residual(commutator(p.a, p.a.adjoint()), true, 3), 1e-12) << theta;
        EXPECT_LE(interior_residual(commutator(p.a_tilde, p.a_tilde.adjoint()), true, 3), 1e-12) << theta;
        EXPECT_LE(interior_residual(commutator(p.a, p.a_tilde), false, 3), 1e-12) << theta;
        EXPECT_LE(interior_residual(commutator(p.a, p.a_tilde.adjoint()), false, 3), 1e-12) << theta;

        // Transforming with -theta undoes theta: A = A(theta) cosh + A~(theta)^dag sinh.
        const LadderOps ops = ladder_ops(cut);
        const Complex c = std::cosh(theta), s = std::sinh(theta);
        const TwoModeOperator back = c * p.a + s * p.a_tilde.adjoint();
        EXPECT_LE(interior_residual(back - ops.a, false, 3), 1e-12);
    }
    const BogoliubovPair id = bogoliubov(0.0, cut);
    EXPECT_EQ((id.a.matrix() - ladder_ops(cut).a.matrix()).norm(), 0.0);
}

TEST(Doubled, ThetaVacuumStructure) {
    const FockCutoff cut(60);
    const StateVector v0 = theta_vacuum_vector(0.0, cut);
    EXPECT_EQ((v0 - bare_vacuum(cut)).norm(), 0.0);
    const StateVector v = theta_vacuum_vector(0.5, cut);
    for (int n = 0; n <= cut.n_max(); ++n)
        for (int m = 0; m <= cut.n_max(); ++m)
            if (n != m) ASSERT_EQ(v[cut.index(n, m)], Complex(0.0));
    EXPECT_NEAR(std::abs(bare_vacuum(cut).dot(v)), 0.886819, 1e-6);
    EXPECT_NEAR(v.squaredNorm(), 1.0 - tail_bound(0.5, cut), 1e-15);
    const BogoliubovPair p = bogoliubov(0.5, cut);
    EXPECT_LE(p.a.apply(v).norm(), 10 * tail_bound(0.5, cut) + 1e-15);
    EXPECT_LE(p.a_tilde.apply(v).norm(), 10 * tail_bound(0.5, cut) + 1e-15);
}

TEST(Doubled, GeneratorRouteMatchesDenseExponential) {
    // Dense matrix exponential as an independent reference at a small cutoff.
    const FockCutoff cut(20);
    const Eigen::MatrixXcd g = Eigen::MatrixXcd(generator(cut).matrix());
    for (double theta : {0.1, 0.35, 0.6}) {
        const Eigen::MatrixXcd u = (Complex(0.0, theta) * g).exp();
        const StateVector ref = u * bare_vacuum(cut);
        EXPECT_LE((generator_vacuum_vector(theta, cut) - ref).norm(), 1e-12) << theta;
    }
}

TEST(Doubled, GeneratorRouteMatchesClosedForm) {
    for (int n_max : {40, 60})
        for (double theta : {0.1, 0.3, 0.6}) {
            const FockCutoff cut(n_max);
            EXPECT_LE((generator_vacuum_vector(theta, cut) - theta_vacuum_vector(theta, cut)).norm(), 1e-9);
        }
}

TEST(Doubled, NumberExpectation) {
    const FockCutoff cut(60);
    EXPECT_EQ(number_expectation(0.0, cut), 0.0);
    EXPECT_NEAR(number_expectation(0.5, cut), 0.271541, 1e-6);
    const FockCutoff wide(120);
    for (double theta : {0.05, 0.5, 1.0, 1.4}) {
        const NumberRoutes r = number_routes(theta, wide);
        EXPECT_NEAR(r.direct, lingdyn::oracle::squeezed_number(theta), 1e-9 + 10 * r.tail);
        EXPECT_NEAR(r.tilde_count, r.direct, 1e-12);
        EXPECT_NEAR(r.tilde_route, r.direct, 1e-9 + 10 * r.tail);
    }
}

TEST(Doubled, TailTolerance) {
    const FockCutoff tight(10);
    EXPECT_THROW(theta_vacuum_vector(1.5, tight), lingdyn::TailToleranceError);
    EXPECT_THROW(bogoliubov(1.5, tight), lingdyn::TailToleranceError);
    EXPECT_NO_THROW(theta_vacuum_vector(0.1, tight));
    EXPECT_NEAR(tail_bound(0.5, FockCutoff(60)), std::pow(std::tanh(0.5), 122), 1e-30);
    EXPECT_THROW(FockCutoff(0), lingdyn::DomainError);
}

TEST(Foliation, Overlaps) {
    const FockCutoff cut(60);
    EXPECT_NEAR(mode_overlap(0.5, 0.0, cut), 1.0 / std::cosh(0.5), 1e-12);
    EXPECT_NEAR(foliation_overlap({0.3, 0.4}, {0.3, 0.4}, cut), 1.0, 1e-12);
    const auto r = foliation(std::vector<double>(100, 0.5), std::vector<double>(100, 0.0), cut);
    EXPECT_NEAR(r.overlap / std::pow(std::cosh(0.5), -100), 1.0, 1e-9);
    EXPECT_LT(r.overlap, 1e-5);
    EXPECT_NEAR(r.closed_form, std::pow(1.0 / std::cosh(0.5), 100), 1e-18);
    EXPECT_THROW(foliation({0.1}, {0.1, 0.2}, cut), lingdyn::DomainError);
}

TEST(Foliation, ParallelMatchesSerial) {
    const FockCutoff cut(40);
    std::vector<double> a, b;
    for (int k = 0; k < 37; ++k) {
        a.push_back(0.01 * k);
        b.push_back(0.5 - 0.007 * k);
    }
    const auto serial = foliation(a, b, cut, 1);
    const auto parallel = foliation(a, b, cut, 4);
    EXPECT_EQ(serial.overlap, parallel.overlap);
    EXPECT_EQ(serial.per_mode, parallel.per_mode);
}

} // namespace
