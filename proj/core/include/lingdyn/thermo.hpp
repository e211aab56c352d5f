#pragma once

#include "lingdyn/doubled.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lingdyn::doubled {

/// W_n = tanh^{2n}(theta) / cosh^2(theta), n = 0..n_max. Their sum falls short
/// of one by exactly tanh^{2(n_max+1)}(theta).
std::vector<double> weights(double theta, const FockCutoff& cutoff);

/// Entropy in nats evaluated three ways.
///
/// The weight sum  -sum_n W_n ln W_n  and the operator expectation
/// <0(theta)| S_A |0(theta)> with
///     S_A = -(A^dag A ln sinh^2 - A A^dag ln cosh^2)
/// are both non-negative and agree. The bare sum  sum_n W_n ln W_n  has the
/// opposite sign; it is reported as `signed_sum` and never returned by entropy().
struct EntropyRoutes {
    double weights_route = 0.0;
    double operator_route = 0.0;
    double closed_form = 0.0; ///< cosh^2 ln cosh^2 - sinh^2 ln sinh^2
    double signed_sum = 0.0;
    double tail = 0.0;
};

EntropyRoutes entropy_routes(double theta, const FockCutoff& cutoff);

/// -sum W_n ln W_n in nats. Throws lingdyn::Error if the operator route
/// disagrees by more than 1e-9 + 100 tail.
double entropy(double theta, const FockCutoff& cutoff);

/// S_A on the truncated two-mode space. At theta = 0 the A^dag A term is
/// dropped: its coefficient diverges but its vacuum expectation is zero.
TwoModeOperator entropy_operator(double theta, const FockCutoff& cutoff);

/// <0(theta)| (omega A^dag A - S_A / beta) |0(theta)>. Requires beta, omega > 0.
double free_energy(double theta, double omega, double beta, const FockCutoff& cutoff);

/// sinh^2 theta* = 1 / (e^{beta omega} - 1), the stationary point of free_energy.
double stationary_theta(double omega, double beta);

struct FreeEnergyMinimum {
    double theta = 0.0;
    double free_energy = 0.0;
    double number = 0.0; ///< sinh^2(theta)
    int iterations = 0;
};

/// Brent minimization of free_energy over theta in [0, theta_max], where
/// theta_max is the largest squeeze the cutoff admits.
FreeEnergyMinimum minimize_free_energy(double omega, double beta, const FockCutoff& cutoff);

/// Largest |theta| whose tail bound stays within the cutoff tolerance.
double max_theta(const FockCutoff& cutoff);

struct HeatReport {
    /// Residual of dE/dt = (1/beta) dS/dt where the path passes through the
    /// stationary theta* (interpolated between samples). When the path never
    /// reaches theta*, the largest residual along the path.
    double residual = 0.0;
    double max_path_residual = 0.0;
    double theta_star = 0.0;
    bool crosses_stationary = false;
    std::vector<double> times;     ///< interior sample times
    std::vector<double> residuals; ///< dE/dt - (1/beta) dS/dt at those times
};

/// Finite-difference heat relation along a sampled path theta(t). Throws
/// DomainError for fewer than 3 samples or non-increasing times.
HeatReport heat_relation_check(const std::vector<std::pair<double, double>>& theta_path,
                               double omega, double beta, const FockCutoff& cutoff);

/// theta(t) = theta_center + rate * (t - (t0 + t1)/2) sampled at `steps`
/// equally spaced times in [t0, t1].
std::vector<std::pair<double, double>> linear_ramp(double t0, double t1, int steps,
                                                   double theta_center, double rate = 1.0);

struct ModeReport {
    double theta = 0.0;
    double overlap_with_bare = 0.0;
    double number_expectation = 0.0;
    double entropy = 0.0; ///< nats
    std::vector<double> weights;
    double tail_bound = 0.0;
};

ModeReport mode_report(double theta, const FockCutoff& cutoff);

/// A set of per-mode squeeze parameters {theta_k}. Multi-mode quantities are
/// never built on the tensor product: overlaps multiply, numbers and
/// entropies add.
class ThetaVacuum {
public:
    ThetaVacuum(std::vector<double> thetas, FockCutoff cutoff, std::optional<std::string> concept_tag = {});

    const std::vector<double>& thetas() const { return thetas_; }
    const FockCutoff& cutoff() const { return cutoff_; }
    const std::optional<std::string>& concept_tag() const { return concept_tag_; }
    std::size_t modes() const { return thetas_.size(); }

    std::vector<ModeReport> reports(unsigned threads = 1) const;
    double total_number() const;
    double total_entropy() const;
    double overlap_with_bare() const;
    double overlap_with(const ThetaVacuum& other, unsigned threads = 1) const;

private:
    std::vector<double> thetas_;
    FockCutoff cutoff_;
    std::optional<std::string> concept_tag_;
};

} // namespace lingdyn::doubled
