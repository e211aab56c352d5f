#include "lingdyn/collective.hpp"

#include "lingdyn/error.hpp"

#include <cmath>
#include <string>

namespace lingdyn::collective {

namespace {

// Products of two non-negative int64 values below 2^31.5 stay exact in
// unsigned __int128 and convert to the nearest double.
double exact_product(std::int64_t a, std::int64_t b) {
    __extension__ typedef unsigned __int128 U128;
    return static_cast<double>(static_cast<U128>(a) * static_cast<U128>(b));
}

LadderResult make(double weight, std::optional<DickeState> state) {
    if (weight == 0.0 || !state) return {0.0, 0.0, std::nullopt};
    return {std::sqrt(weight), weight, state};
}

} // namespace

DickeState::DickeState(std::int64_t n, std::int64_t l) : n_(n), l_(l) {
    if (n < 1) throw DomainError("DickeState: N must be positive, got " + std::to_string(n));
    if (l < 0 || l > n)
        throw DomainError("DickeState: l=" + std::to_string(l) + " outside [0, " +
                          std::to_string(n) + "]");
}

LadderResult sigma_plus(const DickeState& s) {
    if (s.l() == s.n()) return {};
    return make(exact_product(s.l() + 1, s.n() - s.l()), DickeState{s.n(), s.l() + 1});
}

LadderResult sigma_minus(const DickeState& s) {
    if (s.l() == 0) return {};
    return make(exact_product(s.n() - s.l() + 1, s.l()), DickeState{s.n(), s.l() - 1});
}

double order_parameter(const DickeState& s) {
    return static_cast<double>(s.l()) - 0.5 * static_cast<double>(s.n());
}

LadderResult hp_operators(const DickeState& s, HpOperator which) {
    if (which == HpOperator::SPLUS) {
        if (s.l() == s.n()) return {};
        return make(static_cast<double>(s.l() + 1), DickeState{s.n(), s.l() + 1});
    }
    if (s.l() == 0) return {};
    return make(static_cast<double>(s.l()), DickeState{s.n(), s.l() - 1});
}

double hp_amplitude(const DickeState& s) {
    return std::sqrt(1.0 - static_cast<double>(s.l()) / static_cast<double>(s.n()));
}

LadderResult hp_sigma_plus(const DickeState& s) {
    const double a = hp_amplitude(s);
    const LadderResult up = hp_operators(s, HpOperator::SPLUS);
    if (up.annihilated() || a == 0.0) return {};
    const double coeff = std::sqrt(static_cast<double>(s.n())) * up.coefficient * a;
    return {coeff, coeff * coeff, up.state};
}

LadderResult hp_sigma_minus(const DickeState& s) {
    const LadderResult down = hp_operators(s, HpOperator::SMINUS);
    if (down.annihilated()) return {};
    const double a = hp_amplitude(*down.state);
    const double coeff = std::sqrt(static_cast<double>(s.n())) * a * down.coefficient;
    return {coeff, coeff * coeff, down.state};
}

double su2_commutator_expectation(const DickeState& s) {
    // <l|sigma- sigma+|l> = |sigma+ |l>|^2, <l|sigma+ sigma-|l> = |sigma- |l>|^2
    return sigma_plus(s).weight - sigma_minus(s).weight;
}

double contraction_deviation(std::int64_t n, std::int64_t l) {
    const DickeState s{n, l};
    // (l+1)(N-l) - l(N-l+1) = N - 2l, formed exactly before the division by N
    __extension__ typedef __int128 I128;
    const I128 raised = static_cast<I128>(l + 1) * (n - l);
    const I128 lowered = static_cast<I128>(l) * (n - l + 1);
    const double commutator = static_cast<double>(raised - lowered) / static_cast<double>(s.n());
    return std::abs(commutator - 1.0);
}

} // namespace lingdyn::collective
