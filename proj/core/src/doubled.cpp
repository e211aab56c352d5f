#include "lingdyn/doubled.hpp"

#include "lingdyn/error.hpp"
#include "parallel.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace lingdyn::doubled {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix from_triplets(const FockCutoff& c, const std::vector<Triplet>& t) {
    SparseMatrix m(c.dim(), c.dim());
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

// |n_A, n_A~> -> sqrt(n) |n - 1> on the chosen mode
TwoModeOperator lowering(const FockCutoff& c, bool tilde) {
    std::vector<Triplet> t;
    const int n = c.n_max();
    for (int na = 0; na <= n; ++na)
        for (int nt = 0; nt <= n; ++nt) {
            const int occ = tilde ? nt : na;
            if (occ == 0) continue;
            const Eigen::Index to = tilde ? c.index(na, nt - 1) : c.index(na - 1, nt);
            t.emplace_back(to, c.index(na, nt), std::sqrt(static_cast<double>(occ)));
        }
    return {from_triplets(c, t), c};
}

void require_same_cutoff(const TwoModeOperator& x, const TwoModeOperator& y) {
    if (!(x.cutoff() == y.cutoff())) throw DomainError("TwoModeOperator: cutoff mismatch");
}

} // namespace

FockCutoff::FockCutoff(int n_max, double tail_tolerance)
    : n_max_(n_max), tail_tolerance_(tail_tolerance) {
    if (n_max < 1) throw DomainError("FockCutoff: n_max must be >= 1");
    if (!(tail_tolerance > 0.0)) throw DomainError("FockCutoff: tail tolerance must be > 0");
}

double tail_bound(double theta, const FockCutoff& cutoff) {
    const double t = std::tanh(std::abs(theta));
    return std::pow(t, 2.0 * (cutoff.n_max() + 1));
}

void require_tail(double theta, const FockCutoff& cutoff) {
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
    const double bound = tail_bound(theta, cutoff);
    if (bound > cutoff.tail_tolerance()) {
        std::ostringstream msg;
        msg << "cutoff n_max=" << cutoff.n_max() << " too small for theta=" << theta
            << ": tail bound " << bound << " exceeds " << cutoff.tail_tolerance();
        throw TailToleranceError(msg.str(), bound, cutoff.tail_tolerance());
    }
}

TwoModeOperator::TwoModeOperator(SparseMatrix matrix, FockCutoff cutoff)
    : matrix_(std::move(matrix)), cutoff_(cutoff) {
    if (matrix_.rows() != cutoff_.dim() || matrix_.cols() != cutoff_.dim())
        throw DomainError("TwoModeOperator: matrix dimension does not match cutoff");
}

TwoModeOperator TwoModeOperator::adjoint() const {
    return {SparseMatrix(matrix_.adjoint()), cutoff_};
}

TwoModeOperator operator+(const TwoModeOperator& x, const TwoModeOperator& y) {
    require_same_cutoff(x, y);
    return {SparseMatrix(x.matrix_ + y.matrix_), x.cutoff_};
}

TwoModeOperator operator-(const TwoModeOperator& x, const TwoModeOperator& y) {
    require_same_cutoff(x, y);
    return {SparseMatrix(x.matrix_ - y.matrix_), x.cutoff_};
}

TwoModeOperator operator*(const TwoModeOperator& x, const TwoModeOperator& y) {
    require_same_cutoff(x, y);
    return {SparseMatrix(x.matrix_ * y.matrix_), x.cutoff_};
}

TwoModeOperator operator*(Complex s, const TwoModeOperator& x) {
    return {SparseMatrix(s * x.matrix_), x.cutoff_};
}

double TwoModeOperator::max_abs() const {
    double m = 0.0;
    for (int k = 0; k < matrix_.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

TwoModeOperator commutator(const TwoModeOperator& x, const TwoModeOperator& y) {
    return x * y - y * x;
}

double interior_residual(const TwoModeOperator& op, bool against_identity, int margin) {
    const FockCutoff& c = op.cutoff();
    const int limit = c.n_max() - margin; // occupations strictly below n_max - margin + 1
    double worst = 0.0;
    for (int na = 0; na <= limit; ++na)
        for (int nt = 0; nt <= limit; ++nt) {
            StateVector e = StateVector::Zero(c.dim());
            e[c.index(na, nt)] = 1.0;
            StateVector r = op.apply(e);
            if (against_identity) r -= e;
            worst = std::max(worst, r.norm());
        }
    return worst;
}

LadderOps ladder_ops(const FockCutoff& cutoff) {
    TwoModeOperator a = lowering(cutoff, false);
    TwoModeOperator at = lowering(cutoff, true);
    TwoModeOperator a_dag = a.adjoint();
    TwoModeOperator at_dag = at.adjoint();
    return {std::move(a), std::move(a_dag), std::move(at), std::move(at_dag)};
}

BogoliubovPair bogoliubov(double theta, const FockCutoff& cutoff) {
    require_tail(theta, cutoff);
    const LadderOps ops = ladder_ops(cutoff);
    const Complex ch = std::cosh(theta);
    const Complex sh = std::sinh(theta);
    return {ch * ops.a - sh * ops.a_tilde_dag, ch * ops.a_tilde - sh * ops.a_dag};
}

TwoModeOperator generator(const FockCutoff& cutoff) {
    const LadderOps ops = ladder_ops(cutoff);
    return Complex{0.0, -1.0} * (ops.a_dag * ops.a_tilde_dag - ops.a * ops.a_tilde);
}

StateVector bare_vacuum(const FockCutoff& cutoff) {
    StateVector v = StateVector::Zero(cutoff.dim());
    v[cutoff.index(0, 0)] = 1.0;
    return v;
}

StateVector theta_vacuum_vector(double theta, const FockCutoff& cutoff) {
    require_tail(theta, cutoff);
    StateVector v = StateVector::Zero(cutoff.dim());
    const double t = std::tanh(theta);
    double amp = 1.0 / std::cosh(theta);
    for (int n = 0; n <= cutoff.n_max(); ++n) {
        v[cutoff.index(n, n)] = amp;
        amp *= t;
    }
    return v;
}

StateVector generator_vacuum_vector(double theta, const FockCutoff& cutoff) {
    require_tail(theta, cutoff);
    // i theta G = theta (A^dag A~^dag - A A~)
    const SparseMatrix k = (Complex{0.0, 1.0} * theta * generator(cutoff)).matrix();
    // ||K||_1 <= 2 (n_max + 1) |theta|; keep each Taylor substep below 1/2
    const double scale = 2.0 * (cutoff.n_max() + 1) * std::abs(theta);
    const int substeps = std::max(1, static_cast<int>(std::ceil(scale / 0.5)));
    const SparseMatrix step = k * Complex(1.0 / substeps);
    StateVector v = bare_vacuum(cutoff);
    for (int s = 0; s < substeps; ++s) {
        StateVector term = v;
        StateVector sum = v;
        for (int order = 1; order < 200; ++order) {
            term = (step * term) / static_cast<double>(order);
            sum += term;
            if (term.norm() < 1e-20 * sum.norm()) break;
        }
        v = std::move(sum);
    }
    return v;
}

NumberRoutes number_routes(double theta, const FockCutoff& cutoff) {
    const StateVector vac = theta_vacuum_vector(theta, cutoff);
    const LadderOps ops = ladder_ops(cutoff);
    const BogoliubovPair bog = bogoliubov(theta, cutoff);
    const double direct = (ops.a_dag * ops.a).expectation(vac).real();
    const double tilde_count = (ops.a_tilde_dag * ops.a_tilde).expectation(vac).real();
    // A = cosh A(theta) + sinh A~(theta)^dag, and A(theta) annihilates the vacuum,
    // so only the A~(theta) A~(theta)^dag term survives.
    const TwoModeOperator pair = bog.a_tilde * bog.a_tilde.adjoint();
    const double sh = std::sinh(theta);
    const double tilde_route = sh * sh * pair.expectation(vac).real();
    return {direct, tilde_count, tilde_route, tail_bound(theta, cutoff)};
}

double number_expectation(double theta, const FockCutoff& cutoff) {
    const NumberRoutes r = number_routes(theta, cutoff);
    const double slack = 1e-9 + 10.0 * r.tail * (1.0 + std::sinh(theta) * std::sinh(theta));
    if (std::abs(r.direct - r.tilde_route) > slack)
        throw Error("number_expectation: tilde route disagrees with direct route");
    return r.direct;
}

double mode_overlap(double theta_a, double theta_b, const FockCutoff& cutoff) {
    return theta_vacuum_vector(theta_a, cutoff).dot(theta_vacuum_vector(theta_b, cutoff)).real();
}

FoliationResult foliation(const std::vector<double>& thetas_a, const std::vector<double>& thetas_b,
                          const FockCutoff& cutoff, unsigned threads) {
    if (thetas_a.size() != thetas_b.size())
        throw DomainError("foliation_overlap: mode counts differ (" + std::to_string(thetas_a.size()) +
                          " vs " + std::to_string(thetas_b.size()) + ")");
    FoliationResult out;
    out.per_mode = detail::parallel_map<double>(thetas_a.size(), threads, [&](std::size_t k) {
        return mode_overlap(thetas_b[k], thetas_a[k], cutoff);
    });
    for (std::size_t k = 0; k < thetas_a.size(); ++k) {
        const double closed = 1.0 / std::cosh(thetas_a[k] - thetas_b[k]);
        out.overlap *= out.per_mode[k];
        out.closed_form *= closed;
        out.max_mode_discrepancy = std::max(out.max_mode_discrepancy, std::abs(out.per_mode[k] - closed));
    }
    return out;
}

double foliation_overlap(const std::vector<double>& thetas_a, const std::vector<double>& thetas_b,
                         const FockCutoff& cutoff) {
    return foliation(thetas_a, thetas_b, cutoff).overlap;
}

} // namespace lingdyn::doubled
