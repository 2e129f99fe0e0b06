#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "focal/census.hpp"

namespace focal {

inline constexpr int kCheckpointFormatVersion = 1;

/// Canonical JSON of a configuration (sorted keys, no whitespace).
std::string config_to_json(const CensusConfig& config);

/// Reads a configuration; unknown keys and wrong types raise ConfigError.
/// Absent keys keep the values already in `base`.
CensusConfig config_from_json(std::string_view text, CensusConfig base = {});

/// 16 hex digits of FNV-1a over the canonical JSON of the fields that
/// determine results (workers, checkpoint path and interval are excluded).
std::string config_hash(const CensusConfig& config);

/// Provenance header written ahead of report data.
struct RunManifest {
  std::string subcommand;
  std::string config_source;
  std::string started;
  std::string finished;
  std::vector<std::string> outputs;
};

/// The manifest as a JSON object, including version and config hash.
std::string manifest_to_json(const RunManifest& manifest, const std::string& config_hash);

/// Full report as JSON. Timestamps only appear inside the manifest, so the
/// output without a manifest is a pure function of the report.
std::string report_to_json(const CensusReport& report, const RunManifest* manifest = nullptr);

/// codim,count,estimate,error,prime,K,effective_N, preceded by the manifest
/// as a `# ` comment line when one is given.
std::string report_to_csv(const CensusReport& report, const RunManifest* manifest = nullptr);

/// Everything needed to continue a run.
struct CheckpointState {
  std::string config_hash;
  std::string config_json;
  std::uint64_t next_index = 0;
  std::map<std::size_t, std::uint64_t> counts;
  std::vector<Survivor> survivors;
  std::uint64_t off_next_count = 0;
  std::vector<SeparatingWitness> witnesses;
};

/// JSON document:
///   {"format": "focal-checkpoint", "format_version": 1, "version": ...,
///    "config_hash": ..., "config": {...}, "next_index": n,
///    "counts": [[codim, count], ...], "off_next_count": n,
///    "survivors": [{"index", "codim", "p": [...], "q": [...]}, ...],
///    "witnesses": [{"index", "k", "p": [...], "q": [...]}, ...]}
/// Coefficients are residues listed in triangle order (see BasicDiffForm).
std::string encode_checkpoint(const CheckpointState& state);

/// Throws CheckpointError on malformed input; never returns partial state.
CheckpointState decode_checkpoint(std::string_view text, const PrimeField& field, int degree);

}  // namespace focal
