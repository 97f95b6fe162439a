#pragma once

#include <stdexcept>
#include <string>

namespace elobench {

/// Caller supplied a value outside the operation's contract.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data failed validation; carries a line number when one is known.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

/// The selected backend cannot serve the requested capability.
class CapabilityUnsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Judge output that cannot be turned into a verdict.
class MalformedVerdict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A judge or backend gave up after its retry policy was exhausted.
/// Runs interrupted by this error are resumable from the match log.
class UpstreamExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Transport-level failure talking to a remote backend.
class TransportError : public std::runtime_error {
public:
    enum class Kind { Auth, Timeout, Quota, Protocol, Network };

    TransportError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace elobench
