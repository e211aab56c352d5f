#pragma once

#include "lingdyn/doubled.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace lingdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCrash = 2;
inline constexpr int kExitUsage = 64;

/// Cutoff and tolerance defaults, overridable through LINGDYN_N_MAX and
/// LINGDYN_TAIL_TOL. Throws DomainError for malformed or non-positive values.
struct RunConfig {
    int n_max = doubled::kDefaultNMax;
    double tail_tolerance = doubled::kDefaultTailTolerance;
    unsigned threads = 1;

    static RunConfig from_environment();
    doubled::FockCutoff cutoff() const { return doubled::FockCutoff(n_max, tail_tolerance); }
};

/// Rounds to 12 significant digits. JSON output then prints the shortest
/// form that reads back to the rounded value.
double round12(double x);

/// Every function below returns the exact bytes the CLI writes, trailing
/// newline included, and throws lingdyn::Error on computation failures.
std::string tree_json(std::uint32_t depth, bool counts_only, bool symmetric);
std::string fib_json(std::uint64_t n, bool matrix, bool big);
std::string dicke_json(std::int64_t n, std::int64_t l, const std::string& op);
std::string bogoliubov_json(double theta, int modes, bool report, const RunConfig& config,
                            const std::optional<std::string>& concept_tag);
std::string entropy_sweep(double from, double to, double step, bool bits, bool json,
                          const RunConfig& config);
std::string heat_json(double omega, double beta, double t0, double t1, int steps,
                      std::optional<double> center, double rate, const RunConfig& config);

struct DeriveOutput {
    std::string text;
    int exit_code = kExitOk;
};
/// Never throws for a crashing derivation; that is reported in the output
/// with exit code 2. Malformed lexicon or script input throws DomainError.
DeriveOutput derive(const std::string& lexicon_json, const std::string& script_json);

/// Runs the acceptance criteria and returns the exit code.
using SelftestFn = std::function<int(std::ostream& out, bool json)>;

/// Parses argv and runs one subcommand. Usage errors return 64 with a
/// message on `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
             const SelftestFn& selftest);

} // namespace lingdyn::cli
