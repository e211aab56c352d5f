#include "lingdyn/thermo.hpp"

#include "lingdyn/error.hpp"
#include "parallel.hpp"

#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace lingdyn::doubled {

namespace {

void require_thermo(double omega, double beta) {
    if (!(omega > 0.0)) throw DomainError("omega must be > 0");
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
}

double weights_entropy(const std::vector<double>& w) {
    double s = 0.0;
    for (double x : w)
        if (x > 0.0) s -= x * std::log(x);
    return s;
}

// <0(theta)| A^dag A |0(theta)> from the pair-number weights
double weights_number(const std::vector<double>& w) {
    double n = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) n += static_cast<double>(k) * w[k];
    return n;
}

} // namespace

std::vector<double> weights(double theta, const FockCutoff& cutoff) {
    std::vector<double> w(static_cast<std::size_t>(cutoff.n_max()) + 1);
    const double t2 = std::tanh(theta) * std::tanh(theta);
    const double c = std::cosh(theta);
    double x = 1.0 / (c * c);
    for (double& wn : w) {
        wn = x;
        x *= t2;
    }
    return w;
}

TwoModeOperator entropy_operator(double theta, const FockCutoff& cutoff) {
    require_tail(theta, cutoff);
    const LadderOps ops = ladder_ops(cutoff);
    const double sh = std::sinh(theta);
    const double ch = std::cosh(theta);
    TwoModeOperator s = Complex{std::log(ch * ch)} * (ops.a * ops.a_dag);
    if (sh != 0.0) s = s - Complex{std::log(sh * sh)} * (ops.a_dag * ops.a);
    return s;
}

EntropyRoutes entropy_routes(double theta, const FockCutoff& cutoff) {
    require_tail(theta, cutoff);
    EntropyRoutes r;
    const std::vector<double> w = weights(theta, cutoff);
    r.weights_route = weights_entropy(w);
    r.signed_sum = -r.weights_route;
    const StateVector vac = theta_vacuum_vector(theta, cutoff);
    r.operator_route = entropy_operator(theta, cutoff).expectation(vac).real();
    const double c2 = std::cosh(theta) * std::cosh(theta);
    const double s2 = std::sinh(theta) * std::sinh(theta);
    r.closed_form = c2 * std::log(c2) - (s2 > 0.0 ? s2 * std::log(s2) : 0.0);
    r.tail = tail_bound(theta, cutoff);
    return r;
}

double entropy(double theta, const FockCutoff& cutoff) {
    const EntropyRoutes r = entropy_routes(theta, cutoff);
    if (std::abs(r.weights_route - r.operator_route) > 1e-9 + 100.0 * r.tail)
        throw Error("entropy: operator route disagrees with weight sum");
    return r.weights_route;
}

double free_energy(double theta, double omega, double beta, const FockCutoff& cutoff) {
    require_thermo(omega, beta);
    require_tail(theta, cutoff);
    // H_A and S_A are both diagonal on the |n, n> components of the vacuum
    const std::vector<double> w = weights(theta, cutoff);
    return omega * weights_number(w) - weights_entropy(w) / beta;
}

double stationary_theta(double omega, double beta) {
    require_thermo(omega, beta);
    return std::asinh(std::sqrt(1.0 / std::expm1(beta * omega)));
}

double max_theta(const FockCutoff& cutoff) {
    // tanh^{2(n_max+1)} theta <= tol  <=>  tanh theta <= tol^{1/(2(n_max+1))}
    const double t = std::pow(cutoff.tail_tolerance(), 1.0 / (2.0 * (cutoff.n_max() + 1)));
    return t >= 1.0 ? std::numeric_limits<double>::infinity() : std::atanh(t) * (1.0 - 1e-12);
}

FreeEnergyMinimum minimize_free_energy(double omega, double beta, const FockCutoff& cutoff) {
    require_thermo(omega, beta);
    const double hi = std::min(max_theta(cutoff), 20.0);
    std::uintmax_t iterations = 500;
    const auto f = [&](double theta) { return free_energy(theta, omega, beta, cutoff); };
    const auto [theta, value] = boost::math::tools::brent_find_minima(
        f, 0.0, hi, std::numeric_limits<double>::digits / 2, iterations);
    const double sh = std::sinh(theta);
    return {theta, value, sh * sh, static_cast<int>(iterations)};
}

HeatReport heat_relation_check(const std::vector<std::pair<double, double>>& path, double omega,
                               double beta, const FockCutoff& cutoff) {
    require_thermo(omega, beta);
    if (path.size() < 3) throw DomainError("heat_relation_check: path needs at least 3 samples");
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!(path[i].first > path[i - 1].first))
            throw DomainError("heat_relation_check: degenerate path, times must strictly increase");

    std::vector<double> energy(path.size()), ent(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        require_tail(path[i].second, cutoff);
        const std::vector<double> w = weights(path[i].second, cutoff);
        energy[i] = omega * weights_number(w);
        ent[i] = weights_entropy(w);
    }

    HeatReport r;
    r.theta_star = stationary_theta(omega, beta);
    std::vector<double> thetas;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const double dt = path[i + 1].first - path[i - 1].first;
        const double de = (energy[i + 1] - energy[i - 1]) / dt;
        const double ds = (ent[i + 1] - ent[i - 1]) / dt;
        r.times.push_back(path[i].first);
        r.residuals.push_back(de - ds / beta);
        thetas.push_back(path[i].second);
        r.max_path_residual = std::max(r.max_path_residual, std::abs(r.residuals.back()));
    }

    double at_star = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double d0 = thetas[i] - r.theta_star;
        if (d0 == 0.0) {
            r.crosses_stationary = true;
            at_star = std::max(at_star, std::abs(r.residuals[i]));
            continue;
        }
        if (i + 1 == thetas.size()) break;
        const double d1 = thetas[i + 1] - r.theta_star;
        if (d1 != 0.0 && (d0 < 0.0) != (d1 < 0.0)) {
            const double frac = d0 / (d0 - d1);
            const double interp = r.residuals[i] + frac * (r.residuals[i + 1] - r.residuals[i]);
            r.crosses_stationary = true;
            at_star = std::max(at_star, std::abs(interp));
        }
    }
    r.residual = r.crosses_stationary ? at_star : r.max_path_residual;
    return r;
}

std::vector<std::pair<double, double>> linear_ramp(double t0, double t1, int steps,
                                                   double theta_center, double rate) {
    if (steps < 3) throw DomainError("linear_ramp: need at least 3 samples");
    if (!(t1 > t0)) throw DomainError("linear_ramp: t1 must exceed t0");
    std::vector<std::pair<double, double>> path;
    path.reserve(static_cast<std::size_t>(steps));
    const double mid = 0.5 * (t0 + t1);
    const double dt = (t1 - t0) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        // symmetric index about the midpoint keeps the centre sample exact
        const double offset = (i - 0.5 * (steps - 1)) * dt;
        path.emplace_back(mid + offset, theta_center + rate * offset);
    }
    return path;
}

ModeReport mode_report(double theta, const FockCutoff& cutoff) {
    ModeReport m;
    m.theta = theta;
    m.overlap_with_bare = bare_vacuum(cutoff).dot(theta_vacuum_vector(theta, cutoff)).real();
    m.number_expectation = number_expectation(theta, cutoff);
    m.entropy = entropy(theta, cutoff);
    m.weights = weights(theta, cutoff);
    m.tail_bound = tail_bound(theta, cutoff);
    return m;
}

ThetaVacuum::ThetaVacuum(std::vector<double> thetas, FockCutoff cutoff,
                         std::optional<std::string> concept_tag)
    : thetas_(std::move(thetas)), cutoff_(cutoff), concept_tag_(std::move(concept_tag)) {
    for (double th : thetas_) require_tail(th, cutoff_);
}

std::vector<ModeReport> ThetaVacuum::reports(unsigned threads) const {
    return detail::parallel_map<ModeReport>(thetas_.size(), threads,
                                            [&](std::size_t k) { return mode_report(thetas_[k], cutoff_); });
}

double ThetaVacuum::total_number() const {
    double n = 0.0;
    for (double th : thetas_) n += weights_number(weights(th, cutoff_));
    return n;
}

double ThetaVacuum::total_entropy() const {
    double s = 0.0;
    for (double th : thetas_) s += weights_entropy(weights(th, cutoff_));
    return s;
}

double ThetaVacuum::overlap_with_bare() const {
    return foliation_overlap(thetas_, std::vector<double>(thetas_.size(), 0.0), cutoff_);
}

double ThetaVacuum::overlap_with(const ThetaVacuum& other, unsigned threads) const {
    return foliation(thetas_, other.thetas_, cutoff_, threads).overlap;
}

} // namespace lingdyn::doubled
