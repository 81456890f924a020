#pragma once

#include <stdexcept>
#include <string>

namespace hml {

/// Base error. `code` is a stable machine-readable tag used by the CLI to
/// pick exit codes and by tests to assert on failure kinds.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Malformed input: bad JSON, bad shapes, objects violating their axioms.
/// CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A checker rejected mathematically well-formed input (NotSES, NotFlat,
/// DegenerateProjection, ...). CLI exit code 1.
class CheckError : public Error {
public:
    using Error::Error;
};

/// eulerChi could not certify convergence at the given bound. CLI exit 3.
class NonConvergentError : public Error {
public:
    explicit NonConvergentError(const std::string& what)
        : Error("non-convergent", what) {}
};

[[noreturn]] inline void inputFail(const std::string& code, const std::string& what) {
    throw InputError(code, what);
}

[[noreturn]] inline void checkFail(const std::string& code, const std::string& what) {
    throw CheckError(code, what);
}

} // namespace hml
