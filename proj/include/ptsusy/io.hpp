#pragma once

#include <string>
#include <vector>

namespace ptsusy {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

/// Comma-separated values with a header row and LF line endings; columns must
/// have equal length.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& columns);

} // namespace ptsusy
