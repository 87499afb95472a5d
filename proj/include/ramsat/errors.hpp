#pragma once

#include <stdexcept>
#include <string>

namespace ramsat {

/// Domain error carrying the module-local error name (e.g. "root_datum.unknown_preset").
/// The CLI maps these to exit status 2.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// An internal invariant did not hold (a preset or logic bug, never bad user input).
/// The CLI maps these to exit status 3.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Malformed user input (element strings, integer lists, preset files).
/// The CLI maps these to exit status 1.
class ParseError : public Error {
public:
    using Error::Error;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& what) {
    throw Error(name, what);
}

inline void check_invariant(bool ok, const std::string& name, const std::string& what) {
    if (!ok) throw InvariantViolation(name, what);
}

} // namespace ramsat
