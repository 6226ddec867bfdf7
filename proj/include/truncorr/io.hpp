#pragma once

// State files and machine-readable reports.
//
// A state file is JSON:
//   { "dims": [dA, dB], "matrix": [[[re, im], ...], ...] }
// with the matrix stored row-major in the A-major composite basis. Entries
// may be JSON numbers or decimal strings. Files are written with 17
// significant digits so that a write/read cycle reproduces every double.

#include <optional>
#include <string>
#include <vector>

#include "truncorr/detect.hpp"
#include "truncorr/measures.hpp"

namespace truncorr {

inline constexpr const char* kVersion = "0.3.1";
inline constexpr const char* kReportSchema = "truncorr.report/1";

/// Shortest "%.17g" rendering.
std::string format_decimal(double v);

std::string write_state_file(const DensityMatrix& rho);

/// Throws InputError; syntax errors carry line and column, structural errors
/// the offending field path (e.g. "matrix[2][1][0]").
DensityMatrix parse_state_file(const std::string& text,
                               const Tolerances& tol = default_tolerances());

DensityMatrix load_state_file(const std::string& path,
                              const Tolerances& tol = default_tolerances());
void save_state_file(const std::string& path, const DensityMatrix& rho);

struct Report {
  std::string schema = kReportSchema;
  std::string version = kVersion;
  std::string command;
  std::string source;
  BipartiteDims dims;
  Tolerances tolerances;
  std::optional<MeasureReport> measures;
  std::optional<DetectionVerdict> detection;
  std::vector<std::string> notes;
};

std::string emit_report(const Report& r);
Report parse_report(const std::string& text);

bool operator==(const Tolerances& a, const Tolerances& b);
bool operator==(const ComponentContribution& a, const ComponentContribution& b);
bool operator==(const MeasureReport& a, const MeasureReport& b);
bool operator==(const ProductBasis& a, const ProductBasis& b);
bool operator==(const Evidence& a, const Evidence& b);
bool operator==(const DetectionVerdict& a, const DetectionVerdict& b);
bool operator==(const Report& a, const Report& b);

}  // namespace truncorr
