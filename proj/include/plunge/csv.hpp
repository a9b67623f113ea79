#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace plunge {

/// Shortest decimal text that reads back to exactly `value`.
std::string format_number(double value);

/// RFC 4180 table: header row, CRLF line ends, quoting only where needed.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Parses RFC 4180 text (CRLF or LF line ends). First row is the header.
CsvTable parse_csv(const std::string& text);

}  // namespace plunge
