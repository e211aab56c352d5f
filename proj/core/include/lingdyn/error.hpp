#pragma once

#include <stdexcept>
#include <string>

namespace lingdyn {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (negative depth, l > N, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Fixed-width integer arithmetic would wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (node count, depth) would be exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// The Fock cutoff is too small for the requested squeeze parameter.
class TailToleranceError : public Error {
public:
    TailToleranceError(const std::string& what, double bound, double tolerance)
        : Error(what), bound_(bound), tolerance_(tolerance) {}
    double bound() const noexcept { return bound_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    double bound_;
    double tolerance_;
};

/// A derivation "crashes": the machine-readable reason is kept separately
/// from the human message so the CLI can report it verbatim.
class DerivationCrash : public Error {
public:
    DerivationCrash(std::string reason, const std::string& what)
        : Error(what), reason_(std::move(reason)) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Internal Merge or another operation reached into a closed Phase.
class PhaseImpenetrabilityError : public DerivationCrash {
public:
    explicit PhaseImpenetrabilityError(const std::string& what)
        : DerivationCrash("pic_violation", what) {}
};

/// Minimal search found neither a unique head nor a shared feature.
class UnlabelableError : public DerivationCrash {
public:
    explicit UnlabelableError(const std::string& what)
        : DerivationCrash("unlabelable", what) {}
};

/// Ill-formed derivation step: self-merge, EM of a non-root term, IM of the
/// root itself, closing a phase without a phase head, unknown references.
class DerivationError : public Error {
public:
    using Error::Error;
};

} // namespace lingdyn
