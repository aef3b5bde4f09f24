// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

#include "simpleq/radial.hpp"

#include <string>
#include <utility>
#include <vector>

namespace simpleq {

// 17 significant digits; round-trips through strtod.
std::string format_double(double x);

// Writes to path.tmp then renames over path.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Header line plus numeric rows. Blank lines and lines starting with '#' are skipped.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::size_t column(const std::string& name) const;
};
CsvTable read_csv(const std::string& path);
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

// r,value
std::string field_to_csv(const RadialField& f);
RadialField field_from_csv(const std::string& path);

// r,V
std::pair<std::vector<double>, std::vector<double>> read_potential_csv(const std::string& path);

} // namespace simpleq
