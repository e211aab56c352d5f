#pragma once

#include <cstdint>
#include <optional>

namespace lingdyn::collective {

/// Symmetric N-element state with l elements excited, |l>_p. Stored as the
/// pair (N, l); the 2^N-dimensional vector is never built here.
class DickeState {
public:
    /// Throws DomainError unless N >= 1 and 0 <= l <= N.
    DickeState(std::int64_t n, std::int64_t l);

    std::int64_t n() const { return n_; }
    std::int64_t l() const { return l_; }

    friend bool operator==(const DickeState&, const DickeState&) = default;

private:
    std::int64_t n_;
    std::int64_t l_;
};

/// Result of one ladder action. `weight` is coefficient^2 computed in exact
/// integer arithmetic; `state` is absent iff the action annihilates.
struct LadderResult {
    double coefficient = 0.0;
    double weight = 0.0;
    std::optional<DickeState> state;

    bool annihilated() const { return !state.has_value(); }
};

/// sigma+ |l> = sqrt(l+1) sqrt(N-l) |l+1>
LadderResult sigma_plus(const DickeState& s);
/// sigma- |l> = sqrt(N-l+1) sqrt(l) |l-1>
LadderResult sigma_minus(const DickeState& s);

/// <l| sigma_3 |l> = l - N/2.
double order_parameter(const DickeState& s);

enum class HpOperator { SPLUS, SMINUS };

/// Holstein-Primakoff boson ladder: S+ |l> = sqrt(l+1) |l+1>, S- |l> = sqrt(l) |l-1>.
/// S+ on l = N would leave the stored range and is reported as annihilated.
LadderResult hp_operators(const DickeState& s, HpOperator which);

/// Eigenvalue of A_S = sqrt(1 - S+ S- / N) on |l>.
double hp_amplitude(const DickeState& s);

/// sqrt(N) S+ A_S: A_S acts first, on the incoming l.
LadderResult hp_sigma_plus(const DickeState& s);
/// sqrt(N) A_S S-: S- acts first, so A_S sees the outgoing l - 1.
LadderResult hp_sigma_minus(const DickeState& s);

/// <l| [sigma-, sigma+] |l>, which equals -2 (l - N/2).
double su2_commutator_expectation(const DickeState& s);

/// | <l| [S-, S+] |l> - 1 | with S+- = sigma+- / sqrt(N). Equals 2l/N; vanishes
/// at l = 0 and tends to zero as N grows at fixed l.
double contraction_deviation(std::int64_t n, std::int64_t l);

} // namespace lingdyn::collective
