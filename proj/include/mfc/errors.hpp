#ifndef MFC_ERRORS_HPP
#define MFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfc {

// Bad combination of dataset kind and metric, or other misconfiguration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset kind does not match the requested metric.
class KindMismatchError : public ConfigError {
public:
    explicit KindMismatchError(const std::string& msg) : ConfigError(msg) {}
};

// Invalid argument values or malformed data (odd n, t > n, ragged CSV, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be opened or parsed at all.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds the configured size cap for quadratic baselines.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant that should hold by construction was violated.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace mfc

#endif
