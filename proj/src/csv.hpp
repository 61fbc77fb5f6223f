#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pvsize::csv {

struct Row {
    std::size_t line = 0;  // 1-based line in the source file
    std::vector<std::string> cells;
};

/// Header plus data rows of a simple comma separated file. Quoting is not
/// supported; blank lines are skipped.
struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;

    std::optional<std::size_t> column_index(std::string_view name) const;
};

/// `skip_lines` leading lines are ignored before the header line.
/// Throws DataError when the file is unreadable, has no header, or a row has
/// the wrong number of cells.
Table read_file(const std::filesystem::path& path, std::size_t skip_lines = 0);

/// Strict decimal parse of one cell; throws DataError naming line and column.
double parse_number(std::string_view cell, std::size_t line, const std::string& column);

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

}  // namespace pvsize::csv
