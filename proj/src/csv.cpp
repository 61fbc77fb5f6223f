#include "csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "pvsize/errors.hpp"

namespace pvsize::csv {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

std::optional<std::size_t> Table::column_index(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
}

Table read_file(const std::filesystem::path& path, std::size_t skip_lines) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");

    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no <= skip_lines) continue;
        std::string_view view = trim(line);
        if (line_no == 1 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
        if (view.empty()) continue;
        if (!have_header) {
            table.header = split(view);
            have_header = true;
            continue;
        }
        Row row{line_no, split(view)};
        if (row.cells.size() != table.header.size()) {
            throw DataError("expected " + std::to_string(table.header.size()) + " cells, found " +
                                std::to_string(row.cells.size()),
                            line_no);
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw DataError("'" + path.string() + "' has no header row");
    return table;
}

double parse_number(std::string_view cell, std::size_t line, const std::string& column) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = first + cell.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (cell.empty() || ec != std::errc{} || ptr != last) {
        throw DataError("non-numeric cell '" + std::string(cell) + "'", line, column);
    }
    return value;
}

std::string format_number(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

}  // namespace pvsize::csv
