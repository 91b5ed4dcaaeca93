#include "table.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <system_error>

#include "hdconc/error.hpp"
#include "json.hpp"

namespace hdconc::cli {

namespace {

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return std::strtod(format_real(v).c_str(), nullptr); }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
};

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw DimensionError("row has " + std::to_string(row.size()) + " cells, schema has " +
                             std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + csv_field(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::visit(CsvCell{}, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
        }
        array.push_back(std::move(obj));
    }
    return array.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
    return format == OutputFormat::csv ? to_csv(table) : to_json(table);
}

void emit_table(const Table& table, OutputFormat format, const std::optional<std::filesystem::path>& path,
                std::ostream& out) {
    const std::string text = render(table, format);
    if (!path) {
        out << text;
        out.flush();
        return;
    }

    namespace fs = std::filesystem;
    std::random_device entropy;
    fs::path tmp = *path;
    tmp += ".tmp" + std::to_string(entropy());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw IoError("cannot write " + path->string());
        }
        file.write(text.data(), static_cast<std::streamsize>(text.size()));
        file.close();
        if (!file) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("failed writing " + path->string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, *path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move output into place at " + path->string() + ": " + ec.message());
    }
}

}  // namespace hdconc::cli
