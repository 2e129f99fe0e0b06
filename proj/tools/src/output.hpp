#pragma once

#include <string>

#include "focal/census.hpp"

namespace focal::cli {

enum class Format { Table, Json };

/// The requested format, or JSON when stdout is not a terminal.
Format resolve_format(const std::string& requested);

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

/// Rows "codim count estimate ± error" for a report.
std::string estimates_table(const CensusReport& report);

/// One-line running summary for the status stream.
std::string progress_line(const CensusProgress& progress);

}  // namespace focal::cli
