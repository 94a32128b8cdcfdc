#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morphevo {

// Shortest round-trip decimal representation. All numeric log output goes
// through this so that equal runs produce byte-identical files.
std::string format_double(double v);

struct CsvTable {
    std::string schema; // from the leading "# schema: ..." line
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const; // -1 if absent
};

// Parses a CSV written by this project: optional "# schema:" first line,
// then a header row, then data rows. Throws std::runtime_error on
// malformed input or (when expected_schema is non-empty) a schema mismatch.
CsvTable read_csv(std::istream& in, const std::string& expected_schema = "");
CsvTable read_csv_file(const std::string& path, const std::string& expected_schema = "");

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace morphevo
