#include "pvsize/errors.hpp"

#include <fmt/format.h>

namespace pvsize {

namespace {

std::string locate(const std::string& message, std::optional<std::size_t> line, const std::string& column) {
    if (line && !column.empty()) return fmt::format("line {}, column '{}': {}", *line, column, message);
    if (line) return fmt::format("line {}: {}", *line, message);
    if (!column.empty()) return fmt::format("column '{}': {}", column, message);
    return message;
}

}  // namespace

DataError::DataError(const std::string& message, std::optional<std::size_t> line, std::string column)
    : std::runtime_error(locate(message, line, column)),
      line_(line),
      column_(std::move(column)),
      detail_(message) {}

}  // namespace pvsize
