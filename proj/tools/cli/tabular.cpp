#include "tabular.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "hdconc/error.hpp"

namespace hdconc::cli {

namespace {

struct Line {
    std::size_t number;  // 1-based line in the file
    std::vector<std::string> fields;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_whitespace(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.emplace_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::vector<std::string> split_delimited(std::string_view line, char delim, std::size_t line_number) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"' && trim(field).empty()) {
            quoted = true;
            was_quoted = true;
            field.clear();
        } else if (c == delim) {
            out.push_back(was_quoted ? field : std::string(trim(field)));
            field.clear();
            was_quoted = false;
        } else {
            field += c;
        }
    }
    if (quoted) {
        throw DataError("row " + std::to_string(line_number) + ": unterminated quoted field");
    }
    out.push_back(was_quoted ? field : std::string(trim(field)));
    return out;
}

std::vector<Line> split_lines(std::string_view text, const std::string& delimiter) {
    const bool whitespace = delimiter == "whitespace";
    if (!whitespace && delimiter.size() != 1) {
        throw ParameterError("delimiter must be one character or \"whitespace\"");
    }
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        ++number;
        if (!trim(raw).empty()) {
            lines.push_back({number, whitespace ? split_whitespace(raw) : split_delimited(raw, delimiter[0], number)});
        }
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    return lines;
}

std::optional<double> parse_number(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::size_t> parse_index(const std::string& text) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

Dataset parse_dataset(std::string_view text, const TabularOptions& options) {
    std::vector<Line> lines = split_lines(text, options.delimiter);
    if (lines.empty()) {
        throw DataError("empty dataset");
    }

    const std::size_t width = lines.front().fields.size();

    // A label given by index is known before the header question is settled.
    std::optional<std::size_t> label_index;
    if (options.label_column) {
        const auto& first = lines.front().fields;
        const auto named = std::find(first.begin(), first.end(), *options.label_column);
        if (options.header != HeaderMode::absent && named != first.end()) {
            label_index = static_cast<std::size_t>(named - first.begin());
        } else if (auto idx = parse_index(*options.label_column)) {
            label_index = idx;
        } else {
            throw DataError("label column '" + *options.label_column + "' not found in header");
        }
        if (*label_index >= width) {
            throw DataError("label column index " + std::to_string(*label_index) + " is out of range");
        }
    }

    bool has_header = options.header == HeaderMode::present;
    if (options.header == HeaderMode::automatic) {
        const auto& first = lines.front().fields;
        for (std::size_t c = 0; c < first.size(); ++c) {
            if (c != label_index && !parse_number(first[c])) {
                has_header = true;
                break;
            }
        }
    }

    const std::size_t begin = has_header ? 1 : 0;
    const std::size_t n = lines.size() - begin;
    if (n == 0) {
        throw DataError("empty dataset");
    }
    const std::size_t d = width - (label_index ? 1 : 0);
    if (d == 0) {
        throw DataError("no numeric columns");
    }

    std::vector<double> values;
    values.reserve(n * d);
    std::vector<std::string> labels;
    for (std::size_t r = begin; r < lines.size(); ++r) {
        const Line& line = lines[r];
        if (line.fields.size() != width) {
            std::ostringstream msg;
            msg << "row " << line.number << ": expected " << width << " fields, found " << line.fields.size();
            throw DataError(msg.str());
        }
        for (std::size_t c = 0; c < width; ++c) {
            if (c == label_index) {
                labels.push_back(line.fields[c]);
                continue;
            }
            const auto v = parse_number(line.fields[c]);
            if (!v || !std::isfinite(*v)) {
                std::ostringstream msg;
                msg << "row " << line.number << ", column " << (c + 1) << ": '" << line.fields[c]
                    << "' is not a finite number";
                throw DataError(msg.str());
            }
            values.push_back(*v);
        }
    }

    std::optional<std::vector<std::string>> label_list;
    if (label_index) {
        label_list = std::move(labels);
    }
    return Dataset(Matrix(n, d, std::move(values)), std::move(label_list));
}

Dataset load_dataset(const std::filesystem::path& path, const TabularOptions& options) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    if (file.bad()) {
        throw IoError("cannot read " + path.string());
    }
    return parse_dataset(buffer.str(), options);
}

}  // namespace hdconc::cli
