#pragma once

#include <istream>
#include <string>
#include <vector>

namespace sentivote::csv {

// Minimal CSV reader for the toolkit's file formats: comma separated,
// no quoting (state names never contain commas), CR/LF tolerant.
// Verifies the header matches `expected_header` exactly and that every
// row has the same column count.
std::vector<std::vector<std::string>> read(std::istream& in,
                                           const std::string& expected_header,
                                           const std::string& what);

std::vector<std::vector<std::string>> read_file(const std::string& path,
                                                const std::string& expected_header);

double parse_fraction(const std::string& value, const std::string& state,
                      const std::string& field);

}  // namespace sentivote::csv
