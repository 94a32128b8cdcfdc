#include "morphevo/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace morphevo {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

CsvTable read_csv(std::istream& in, const std::string& expected_schema) {
    CsvTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# schema:", 0) == 0) {
            table.schema = line.substr(9);
            const auto start = table.schema.find_first_not_of(' ');
            table.schema = start == std::string::npos ? "" : table.schema.substr(start);
            continue;
        }
        if (!have_header) {
            table.header = split_fields(line);
            have_header = true;
        } else {
            auto fields = split_fields(line);
            if (fields.size() != table.header.size())
                throw std::runtime_error("csv row width does not match header");
            table.rows.push_back(std::move(fields));
        }
    }
    if (!have_header) throw std::runtime_error("csv file has no header row");
    if (!expected_schema.empty() && table.schema != expected_schema)
        throw std::runtime_error("csv schema mismatch: expected '" + expected_schema +
                                 "', found '" + table.schema + "'");
    return table;
}

CsvTable read_csv_file(const std::string& path, const std::string& expected_schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv file: " + path);
    return read_csv(in, expected_schema);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << fields[i];
    }
    out << '\n';
}

} // namespace morphevo
