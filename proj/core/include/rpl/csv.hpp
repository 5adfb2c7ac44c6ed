#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rpl {

/// Format a double for CSV output with enough digits to compare runs.
std::string csv_number(double v);

/// Quote a cell if it contains separators, quotes or newlines.
std::string csv_cell(const std::string& text);

/// Minimal CSV emitter: one header row, then data rows.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names) { line(names); }
    void row(const std::vector<std::string>& cells) { line(cells); }

private:
    void line(const std::vector<std::string>& cells);

    std::ostream& out_;
};

} // namespace rpl
