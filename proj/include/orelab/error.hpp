#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orelab {

/// Invalid construction parameters: bad modulus, non-prime p, unknown kind,
/// a map action that does not fit the ring it is attached to.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// API misuse: mixed contexts, out-of-range indices.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition failed. Carries a witness when one exists.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what, std::string witness = {})
        : std::runtime_error(witness.empty() ? what : what + ": " + witness),
          witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// The ring cannot support the request (enumeration of an infinite ring, ...).
class UnsupportedOperation : public std::runtime_error {
public:
    explicit UnsupportedOperation(const std::string& what) : std::runtime_error(what) {}
};

/// Internal consistency failure; reaching this is a bug signal.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace orelab
