#pragma once

#include <stdexcept>
#include <string>

namespace pads {

/// Scenario or parameter is not usable. Carries a key path when it comes
/// from a config file (e.g. "radio.range_m").
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
    ConfigError(const std::string& key_path, const std::string& what)
        : std::runtime_error(key_path + ": " + what), key_path_(key_path) {}

    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

/// Protocol contract violated by the caller (length mismatch, message built
/// before the first attestation, ...).
class ProtocolError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The verifier found no responsive prover within reach.
class QueryFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pads
