#include "sentivote/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sentivote/errors.hpp"

namespace sentivote::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    out.push_back(field);
    return out;
}

}  // namespace

std::vector<std::vector<std::string>> read(std::istream& in,
                                           const std::string& expected_header,
                                           const std::string& what) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(what + ": empty file, expected header `" + expected_header + "`");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header) {
        throw DataError(what + ": bad header `" + line + "`, expected `" +
                        expected_header + "`");
    }
    const auto n_cols = split_line(expected_header).size();
    std::vector<std::vector<std::string>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() != n_cols) {
            throw DataError(what + ": line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(n_cols));
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<std::vector<std::string>> read_file(const std::string& path,
                                                const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return read(in, expected_header, path);
}

double parse_fraction(const std::string& value, const std::string& state,
                      const std::string& field) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size()) {
        throw DataError(state + ": " + field + " `" + value + "` is not a number");
    }
    if (v > 1.0) {
        throw DataError(state + ": " + field + " = " + value +
                        " exceeds 1; inputs are fractions in [0,1], divide percents by 100");
    }
    if (v < 0.0) {
        throw DataError(state + ": " + field + " = " + value + " is negative");
    }
    return v;
}

}  // namespace sentivote::csv
