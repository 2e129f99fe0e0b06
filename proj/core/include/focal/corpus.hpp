#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace focal {

/// One `expect` line: a check name and its integer arguments.
struct Expectation {
  std::string kind;
  std::vector<int> args;
  std::size_t line = 0;
};

/// A `claim ... end` block of the example corpus.
struct CorpusClaim {
  std::string name;
  std::uint64_t prime = 0;
  std::string form;
  std::vector<std::string> curves;
  std::vector<Expectation> expectations;
  std::size_t line = 0;
};

/// Line-oriented corpus. `#` starts a comment. Each block reads
///
///     claim <name>
///       prime <p>
///       form <form text>
///       curve <homogeneous polynomial>      (any number)
///       expect <kind> <int>...               (any number)
///     end
///
/// Kinds: vanishes K, first-nonzero K n, codim K c, witness k, integral,
/// darboux, christopher, smooth, exact, mirror-symmetric.
/// Throws CorpusError with the offending line number.
std::vector<CorpusClaim> parse_corpus(std::istream& in);
std::vector<CorpusClaim> load_corpus(const std::filesystem::path& path);

struct CheckResult {
  std::string claim;
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Runs every expectation; errors while checking become failed rows.
std::vector<CheckResult> verify_claims(const std::vector<CorpusClaim>& claims);

/// load_corpus followed by verify_claims.
std::vector<CheckResult> verify_paper_examples(const std::filesystem::path& corpus);

}  // namespace focal
