#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focal/form.hpp"
#include "focal/prime_field.hpp"
#include "focal/sampling.hpp"
#include "focal/tangent.hpp"

namespace focal {

struct CensusConfig {
  std::uint64_t prime = 23;
  int degree = 3;
  /// Sample only the top-degree coefficients.
  bool homogeneous = false;
  /// Focal values per point; (p - 3) / 2 when unset.
  std::optional<int> focal_count;
  std::uint64_t samples = 0;
  /// Fix q30 so that s_1 = 0; each sample then stands for p points.
  bool solve_s1 = false;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::optional<std::string> checkpoint_path;
  /// Samples between checkpoints and progress reports.
  std::uint64_t checkpoint_interval = 1'000'000;
  /// In homogeneous runs, measure codimension in the full Poincare space.
  bool ambient_codim = false;
  /// Look for points of X_k off X_{k+1} with tangent codimension k.
  std::optional<int> witness_k;
  /// Estimates count points of smaller tangent codimension at this one.
  std::optional<std::size_t> min_codim;

  int k() const;
  std::uint64_t effective_samples() const;
  bool homogeneous_tangent() const { return homogeneous && !ambient_codim; }

  /// Throws ConfigError or CharacteristicTooSmall.
  void validate() const;
};

struct Survivor {
  std::uint64_t index = 0;
  DiffForm form;
  std::size_t codim = 0;

  friend bool operator==(const Survivor&, const Survivor&) = default;
};

/// A point with s_1..s_k = 0, s_{k+1} != 0 and tangent codimension k in X_k,
/// which shows that X_k has a component outside X_{k+1}.
struct SeparatingWitness {
  std::uint64_t index = 0;
  DiffForm form;
  int k = 0;

  friend bool operator==(const SeparatingWitness&, const SeparatingWitness&) = default;
};

struct ComponentEstimate {
  std::size_t codim = 0;
  std::uint64_t count = 0;
  /// count * p^codim, exact.
  mpz_class scaled_count;
  /// scaled_count / effective_N.
  double estimate = 0.0;
  /// 2 sqrt(count) p^codim / effective_N.
  double error = 0.0;
};

struct CensusReport {
  CensusConfig config;
  std::string config_hash;
  /// Samples processed so far (equal to config.samples for a finished run).
  std::uint64_t processed = 0;
  std::uint64_t effective_samples = 0;
  std::vector<Survivor> survivors;
  std::map<std::size_t, std::uint64_t> counts_by_codim;
  /// From counts_by_codim, lumped at config.min_codim when set.
  std::vector<ComponentEstimate> estimates;
  /// Points with first nonzero focal value at witness_k + 1.
  std::uint64_t off_next_count = 0;
  std::vector<SeparatingWitness> witnesses;
};

/// Moves the counts below min_codim into min_codim.
std::map<std::size_t, std::uint64_t> lump_counts(const std::map<std::size_t, std::uint64_t>& counts,
                                                 std::size_t min_codim);

/// Estimates for every codimension with a nonzero count.
std::vector<ComponentEstimate> estimate_components(const std::map<std::size_t, std::uint64_t>& counts,
                                                   std::uint64_t prime,
                                                   std::uint64_t effective_samples);

/// Standalone recheck of the witness conditions at k.
bool is_separating_witness(const PrimeField& field, const DiffForm& form, int k,
                           TangentOptions options = {});

/// Scans points for separating witnesses at k.
std::vector<SeparatingWitness> find_separating_witnesses(const PrimeField& field,
                                                         const std::vector<DiffForm>& points, int k,
                                                         TangentOptions options = {});

/// Produces the form for a sample index. The default draws random_poincare
/// from SampleStream::for_sample(seed, index).
using SampleSource = std::function<DiffForm(std::uint64_t index, SampleStream& rng)>;

struct CensusProgress {
  std::uint64_t processed = 0;
  std::uint64_t total = 0;
  const CensusReport* snapshot = nullptr;
};
using ProgressCallback = std::function<void(const CensusProgress&)>;

/// Monte-Carlo census over sample indices [0, N). Work is done in rounds of
/// checkpoint_interval indices split across workers; results are merged in
/// index order, so the report does not depend on the worker count.
class CensusRunner {
 public:
  explicit CensusRunner(CensusConfig config, SampleSource source = {});

  const CensusConfig& config() const noexcept { return config_; }
  std::uint64_t next_index() const noexcept { return next_index_; }
  bool done() const noexcept { return next_index_ >= config_.samples; }

  /// Processes up to `count` further samples.
  void advance(std::uint64_t count);

  /// Runs to completion, checkpointing after each round when a path is set.
  void run(const ProgressCallback& progress = {});

  /// Writes a checkpoint atomically (temporary file, then rename).
  void save_checkpoint(const std::string& path) const;
  /// Restores state. Throws ConfigMismatch when the checkpoint was written
  /// for a different configuration and CheckpointError when it cannot be read.
  void resume(const std::string& path);

  CensusReport report() const;

 private:
  struct Tally;
  void merge(Tally&& tally);

  CensusConfig config_;
  PrimeField field_;
  SampleSource source_;
  std::string hash_;
  std::uint64_t next_index_ = 0;
  std::map<std::size_t, std::uint64_t> counts_;
  std::vector<Survivor> survivors_;
  std::uint64_t off_next_ = 0;
  std::vector<SeparatingWitness> witnesses_;
};

CensusReport run_census(const CensusConfig& config, const ProgressCallback& progress = {});

}  // namespace focal
