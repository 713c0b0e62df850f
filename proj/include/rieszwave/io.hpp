// io.hpp
// Deterministic serialization: shortest round-trip float formatting, CSV and
// JSON emission, atomic file writes (temp + rename, no partial files).
#pragma once

#include <string>
#include <vector>
#include "rieszwave/compare.hpp"
#include "rieszwave/nodes.hpp"

namespace rieszwave::io {

// Shortest decimal string that round-trips to the same binary double.
std::string format_double(double v);

// Write content to path atomically (temp file in the same directory, then
// rename). Throws std::runtime_error on I/O failure.
void atomic_write(const std::string& path, const std::string& content);

std::string to_csv(const compare::ComparisonReport& report);
std::string to_csv(const std::vector<compare::ValidityPoint>& map);
std::string to_json(const nodes::NodeReport& report);
std::string summary_line(const compare::ComparisonReport& report);

}  // namespace rieszwave::io
