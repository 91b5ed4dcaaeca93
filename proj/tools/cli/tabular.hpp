#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hdconc/dataset.hpp"

namespace hdconc::cli {

enum class HeaderMode { automatic, present, absent };

/// How a delimited text file maps onto a Dataset.
struct TabularOptions {
    /// A single character, or the word "whitespace" for runs of blanks/tabs.
    std::string delimiter = ",";
    /// `automatic` treats the first row as a header when any of its
    /// non-label fields is not a number.
    HeaderMode header = HeaderMode::automatic;
    /// Header name, or a 0-based column index when no header name matches.
    std::optional<std::string> label_column;
};

/// Reads `path`. Throws IoError if it cannot be opened and DataError naming
/// the first offending row/column otherwise. Rows are 1-based file lines.
Dataset load_dataset(const std::filesystem::path& path, const TabularOptions& options);

/// Same as load_dataset() on in-memory text.
Dataset parse_dataset(std::string_view text, const TabularOptions& options);

}  // namespace hdconc::cli
