#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hdconc::cli {

/// Empty (null), integer, real or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// Rows sharing one ordered column schema.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws DimensionError if the row width differs from the schema.
    void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

/// "%.12g" in the C locale.
std::string format_real(double value);

/// Header line, then one line per row; "\n" terminators; nulls are empty fields.
std::string to_csv(const Table& table);
/// Array of flat objects keyed by column name; reals rounded to 12 significant digits.
std::string to_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

/// Writes `table` to `path`, or to `out` when no path is given. File output
/// goes to a sibling temporary first and is renamed into place, so a failed
/// run never leaves a partial file. Throws IoError.
void emit_table(const Table& table, OutputFormat format, const std::optional<std::filesystem::path>& path,
                std::ostream& out);

}  // namespace hdconc::cli
