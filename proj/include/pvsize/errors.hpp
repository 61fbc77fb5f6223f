#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace pvsize {

/// Invalid configuration or parameter values. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data. Carries the 1-based file line and the
/// column name when the failure can be located. CLI exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& message,
                       std::optional<std::size_t> line = std::nullopt,
                       std::string column = {});

    std::optional<std::size_t> line() const noexcept { return line_; }
    const std::string& column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::optional<std::size_t> line_;
    std::string column_;
    std::string detail_;
};

/// Non-finite values or failed numerical preconditions. CLI exit code 4.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pvsize
