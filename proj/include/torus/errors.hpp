#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torus {

// Base for all library errors. `code()` is a stable machine-readable tag;
// the CLI maps codes onto exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Precondition or invariant violation on an input value.
class ValidationError : public Error {
public:
    ValidationError(std::string code, const std::string& message)
        : Error(std::move(code), message) {}
};

// Malformed or non-conforming JSON document. `path` is a JSON-pointer-like
// location of the offending element.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& message)
        : Error("schema_error", path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

// A constant piece of a PL map maps into the target set, so the preimage
// is not an open arc union.
class UnsupportedDegenerate : public Error {
public:
    explicit UnsupportedDegenerate(const std::string& message)
        : Error("unsupported_degenerate", message) {}
};

// Parameters outside the range for which the operation's argument is exact.
class UnsupportedParameters : public Error {
public:
    explicit UnsupportedParameters(const std::string& message)
        : Error("unsupported_parameters", message) {}
};

// Separation slack is exactly zero; transfer needs strict slack.
class NoSlack : public Error {
public:
    explicit NoSlack(const std::string& message) : Error("no_slack", message) {}
};

// Nested shadowing intersection came out empty (violated expansion precondition).
class EmptyIntersection : public Error {
public:
    EmptyIntersection(long p, const std::string& message)
        : Error("empty_intersection", message), p_(p) {}

    long offending_p() const noexcept { return p_; }

private:
    long p_;
};

class MonochromaticCliqueExists : public Error {
public:
    MonochromaticCliqueExists(std::vector<int> witness, const std::string& message)
        : Error("monochromatic_clique_exists", message), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

class UnverifiedCapacity : public Error {
public:
    explicit UnverifiedCapacity(const std::string& message)
        : Error("unverified_capacity", message) {}
};

// A rational exceeded the configured digit budget; aborting is preferred to
// silently degraded precision.
class DigitGuardExceeded : public Error {
public:
    explicit DigitGuardExceeded(const std::string& message)
        : Error("digit_guard_exceeded", message) {}
};

}  // namespace torus
