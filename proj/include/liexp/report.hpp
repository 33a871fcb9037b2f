#pragma once

#include <string>

#include "liexp/expansion.hpp"

namespace liexp {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
  bool timing = false;  // wall-clock time makes output non-reproducible
  bool verbose = false;
};

/// JSON document with a fixed field order, two-space indented, newline
/// terminated.
std::string closure_json(const ClosureReport& report, const ReportOptions& options = {});

/// Human-readable summary; with `verbose`, every pair is listed.
std::string closure_text(const ClosureReport& report, const ReportOptions& options = {});

}  // namespace liexp
