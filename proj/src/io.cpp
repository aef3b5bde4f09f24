// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/io.hpp"

#include "simpleq/error.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace simpleq {

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw InvalidInput("cannot open '" + tmp + "' for writing");
        os << content;
        os.flush();
        if (!os) throw InvalidInput("write to '" + tmp + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw InvalidInput("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

std::string read_file(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::size_t CsvTable::column(const std::string& name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw InvalidInput("CSV has no column '" + name + "'");
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    return out;
}

} // namespace

CsvTable read_csv(const std::string& path)
{
    std::istringstream in(read_file(path));
    CsvTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line);
        if (t.header.empty()) {
            t.header = cells;
            continue;
        }
        if (cells.size() != t.header.size())
            throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(t.header.size()) +
                               " columns");
        std::vector<double> row;
        for (auto& c : cells) {
            char* end = nullptr;
            const double x = std::strtod(c.c_str(), &end);
            if (c.empty() || *end != '\0') throw InvalidInput(path + ":" + std::to_string(lineno) + ": bad number '" + c + "'");
            row.push_back(x);
        }
        t.rows.push_back(std::move(row));
    }
    if (t.header.empty()) throw InvalidInput(path + ": empty CSV");
    return t;
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows)
{
    std::string s;
    for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
    s += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ',';
            s += format_double(row[i]);
        }
        s += '\n';
    }
    return s;
}

std::string field_to_csv(const RadialField& f)
{
    std::vector<std::vector<double>> rows;
    rows.reserve(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) rows.push_back({f.r(j), f[j]});
    return to_csv({"r", "value"}, rows);
}

RadialField field_from_csv(const std::string& path)
{
    const auto t = read_csv(path);
    const auto ir = t.column("r"), iv = t.column("value");
    if (t.rows.size() < 3) throw InvalidInput(path + ": too few rows for a radial field");
    if (t.rows.front()[ir] != 0.0) throw InvalidInput(path + ": radial field must start at r = 0");
    const std::size_t n = t.rows.size() - 1;
    const double dr = t.rows.back()[ir] / static_cast<double>(n);
    RadialGrid g(n, dr);
    std::vector<double> v;
    for (std::size_t j = 0; j <= n; ++j) {
        if (std::abs(t.rows[j][ir] - g.r(j)) > 1e-9 * g.rmax()) throw InvalidInput(path + ": radii are not uniform");
        v.push_back(t.rows[j][iv]);
    }
    return RadialField(g, std::move(v));
}

std::pair<std::vector<double>, std::vector<double>> read_potential_csv(const std::string& path)
{
    const auto t = read_csv(path);
    const auto ir = t.column("r"), iv = t.column("V");
    std::pair<std::vector<double>, std::vector<double>> out;
    for (const auto& row : t.rows) {
        out.first.push_back(row[ir]);
        out.second.push_back(row[iv]);
    }
    return out;
}

} // namespace simpleq
