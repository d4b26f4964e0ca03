#include "ptsusy/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace ptsusy {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size()) {
        throw std::invalid_argument("csv: header and column counts differ");
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& col : columns) {
        if (col.size() != rows) throw std::invalid_argument("csv: ragged columns");
    }
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) out += ',';
        out += header[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += format_double(columns[c][r]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_csv: cannot open " + path);
    f << csv_to_string(header, columns);
    if (!f) throw std::runtime_error("write_csv: write failed for " + path);
}

} // namespace ptsusy
