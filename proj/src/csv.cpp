#include "plunge/csv.hpp"

#include <charconv>
#include <cmath>

#include "plunge/errors.hpp"

namespace plunge {

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw ValidationError("CSV header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) throw ValidationError("CSV row width does not match header");
    rows_.push_back(std::move(cells));
}

namespace {

std::string quote(const std::string& cell) {
    if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char ch : cell) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

void append_line(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += quote(cells[i]);
    }
    out += "\r\n";
}

}  // namespace

std::string CsvTable::str() const {
    std::string out;
    append_line(out, header_);
    for (const auto& row : rows_) append_line(out, row);
    return out;
}

CsvTable parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string cell;
    bool quoted = false;
    bool cell_started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += ch;
            }
            continue;
        }
        if (ch == '"') {
            quoted = true;
            cell_started = true;
        } else if (ch == ',') {
            record.push_back(std::move(cell));
            cell.clear();
            cell_started = true;
        } else if (ch == '\r' || ch == '\n') {
            if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            if (cell_started || !cell.empty() || !record.empty()) {
                record.push_back(std::move(cell));
                records.push_back(std::move(record));
            }
            record.clear();
            cell.clear();
            cell_started = false;
        } else {
            cell += ch;
            cell_started = true;
        }
    }
    if (quoted) throw ValidationError("unterminated quoted CSV field");
    if (cell_started || !cell.empty() || !record.empty()) {
        record.push_back(std::move(cell));
        records.push_back(std::move(record));
    }
    if (records.empty()) throw ValidationError("CSV text has no header");
    CsvTable table(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) table.add_row(std::move(records[r]));
    return table;
}

}  // namespace plunge
