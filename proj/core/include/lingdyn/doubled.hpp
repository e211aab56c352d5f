#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lingdyn::doubled {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;
using StateVector = Eigen::VectorXcd;

inline constexpr int kDefaultNMax = 60;
inline constexpr double kDefaultTailTolerance = 1e-8;

/// Per-mode occupation cutoff. The two-mode space Fock(A) x Fock(A~) has
/// dimension (n_max + 1)^2, basis |n_A, n_A~> with n_A as the major index.
class FockCutoff {
public:
    explicit FockCutoff(int n_max = kDefaultNMax, double tail_tolerance = kDefaultTailTolerance);

    int n_max() const { return n_max_; }
    double tail_tolerance() const { return tail_tolerance_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(n_max_ + 1) * (n_max_ + 1); }
    Eigen::Index index(int n_a, int n_tilde) const {
        return static_cast<Eigen::Index>(n_a) * (n_max_ + 1) + n_tilde;
    }

    friend bool operator==(const FockCutoff&, const FockCutoff&) = default;

private:
    int n_max_;
    double tail_tolerance_;
};

/// tanh^{2(n_max+1)}(theta): the probability mass of the squeezed vacuum
/// that lies above the cutoff.
double tail_bound(double theta, const FockCutoff& cutoff);

/// Throws TailToleranceError when tail_bound(theta) exceeds the cutoff's tolerance.
void require_tail(double theta, const FockCutoff& cutoff);

/// Sparse complex operator on the truncated two-mode space.
class TwoModeOperator {
public:
    TwoModeOperator(SparseMatrix matrix, FockCutoff cutoff);

    const SparseMatrix& matrix() const { return matrix_; }
    const FockCutoff& cutoff() const { return cutoff_; }

    TwoModeOperator adjoint() const;
    StateVector apply(const StateVector& v) const { return matrix_ * v; }
    /// <u| this |v>
    Complex expectation(const StateVector& u, const StateVector& v) const { return u.dot(matrix_ * v); }
    Complex expectation(const StateVector& v) const { return expectation(v, v); }

    friend TwoModeOperator operator+(const TwoModeOperator& x, const TwoModeOperator& y);
    friend TwoModeOperator operator-(const TwoModeOperator& x, const TwoModeOperator& y);
    friend TwoModeOperator operator*(const TwoModeOperator& x, const TwoModeOperator& y);
    friend TwoModeOperator operator*(Complex s, const TwoModeOperator& x);

    /// Largest entrywise modulus.
    double max_abs() const;

private:
    SparseMatrix matrix_;
    FockCutoff cutoff_;
};

TwoModeOperator commutator(const TwoModeOperator& x, const TwoModeOperator& y);

/// Largest ||(op - target) |s>|| over basis states |s> = |n_A, n_A~> with both
/// occupations below n_max - margin + 1; target is the identity when
/// `against_identity`, zero otherwise. Used to check CCR away from the cutoff.
double interior_residual(const TwoModeOperator& op, bool against_identity, int margin = 2);

struct LadderOps {
    TwoModeOperator a, a_dag, a_tilde, a_tilde_dag;
};

/// A and A~ (and their adjoints) tensored with the identity on the partner mode.
LadderOps ladder_ops(const FockCutoff& cutoff);

struct BogoliubovPair {
    TwoModeOperator a;       ///< A(theta) = A cosh - A~^dag sinh
    TwoModeOperator a_tilde; ///< A~(theta) = A~ cosh - A^dag sinh
};

BogoliubovPair bogoliubov(double theta, const FockCutoff& cutoff);

/// G = -i (A^dag A~^dag - A A~); exp(i theta G) generates the transformation.
TwoModeOperator generator(const FockCutoff& cutoff);

/// Normal-ordered form (1/cosh) exp(tanh A^dag A~^dag) |0>: amplitude
/// tanh^n / cosh on |n, n>, zero elsewhere. Not renormalized after truncation.
StateVector theta_vacuum_vector(double theta, const FockCutoff& cutoff);

/// exp(i theta G)|0> evaluated by a scaled Taylor series of the matrix
/// exponential acting on |0,0>. Independent of the closed form above.
StateVector generator_vacuum_vector(double theta, const FockCutoff& cutoff);

/// The basis vector |0, 0>.
StateVector bare_vacuum(const FockCutoff& cutoff);

struct NumberRoutes {
    double direct;      ///< <0(theta)| A^dag A |0(theta)>
    double tilde_count; ///< <0(theta)| A~^dag A~ |0(theta)>
    double tilde_route; ///< sinh^2 * <0(theta)| A~(theta) A~(theta)^dag |0(theta)>
    double tail;
};

NumberRoutes number_routes(double theta, const FockCutoff& cutoff);

/// <0(theta)| A^dag A |0(theta)> = sinh^2(theta) up to the tail. Throws
/// lingdyn::Error if the tilde route disagrees beyond 1e-9 + tail.
double number_expectation(double theta, const FockCutoff& cutoff);

/// <0(theta')|0(theta)> for one mode from the truncated vectors.
double mode_overlap(double theta_a, double theta_b, const FockCutoff& cutoff);

struct FoliationResult {
    double overlap = 1.0;     ///< product of per-mode vector overlaps
    double closed_form = 1.0; ///< product of 1/cosh(theta_k - theta'_k)
    std::vector<double> per_mode;
    double max_mode_discrepancy = 0.0;
};

/// Overlap of two multi-mode theta-vacua, factorized over modes. Throws
/// DomainError when the mode counts differ. `threads` > 1 evaluates modes
/// concurrently; the reduction order is fixed.
FoliationResult foliation(const std::vector<double>& thetas_a, const std::vector<double>& thetas_b,
                          const FockCutoff& cutoff, unsigned threads = 1);

double foliation_overlap(const std::vector<double>& thetas_a, const std::vector<double>& thetas_b,
                         const FockCutoff& cutoff);

} // namespace lingdyn::doubled
