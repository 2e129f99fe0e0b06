#include "output.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace focal::cli {

Format resolve_format(const std::string& requested) {
  if (requested == "json") return Format::Json;
  if (requested == "table") return Format::Table;
  return isatty(STDOUT_FILENO) ? Format::Table : Format::Json;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string estimates_table(const CensusReport& report) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%6s %12s %14s %12s\n", "codim", "count", "estimate", "2sigma");
  out << line;
  for (const auto& e : report.estimates) {
    std::snprintf(line, sizeof line, "%6zu %12llu %14.4f %12.4f\n", e.codim,
                  static_cast<unsigned long long>(e.count), e.estimate, e.error);
    out << line;
  }
  return out.str();
}

std::string progress_line(const CensusProgress& progress) {
  std::ostringstream out;
  out << "[" << progress.processed << "/" << progress.total << "]";
  if (progress.snapshot != nullptr) {
    char item[96];
    for (const auto& e : progress.snapshot->estimates) {
      std::snprintf(item, sizeof item, "  c%zu: %.3g +- %.2g", e.codim, e.estimate, e.error);
      out << item;
    }
    if (progress.snapshot->config.witness_k) {
      out << "  off X_" << *progress.snapshot->config.witness_k + 1 << ": "
          << progress.snapshot->off_next_count;
    }
  }
  return out.str();
}

}  // namespace focal::cli
