#include "focal/census.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "focal/census_io.hpp"
#include "focal/errors.hpp"
#include "focal/frommer.hpp"

namespace focal {

int CensusConfig::k() const { return focal_count.value_or(default_focal_count(prime)); }

std::uint64_t CensusConfig::effective_samples() const {
  return solve_s1 ? samples * prime : samples;
}

void CensusConfig::validate() const {
  if (!is_prime(prime) || prime == 2 || prime > PrimeField::kMaxModulus) {
    throw ConfigError("prime must be an odd prime, got " + std::to_string(prime));
  }
  if (degree < 2 || degree > 8) throw ConfigError("degree must lie in [2, 8]");
  if (samples == 0) throw ConfigError("sample count must be positive");
  if (workers == 0) throw ConfigError("worker count must be positive");
  if (checkpoint_interval == 0) throw ConfigError("checkpoint interval must be positive");
  if (k() < 1) throw ConfigError("at least one focal value is required");
  if (static_cast<std::uint64_t>(2 * k() + 2) >= prime) throw CharacteristicTooSmall(prime, k());
  if (solve_s1 && (degree != 3 || homogeneous)) {
    throw ConfigError("solve_s1 requires general degree-3 forms");
  }
  if (witness_k && (*witness_k < 1 || *witness_k >= k())) {
    throw ConfigError("witness k must lie in [1, K - 1]");
  }
}

std::map<std::size_t, std::uint64_t> lump_counts(const std::map<std::size_t, std::uint64_t>& counts,
                                                 std::size_t min_codim) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& [codim, count] : counts) out[std::max(codim, min_codim)] += count;
  return out;
}

std::vector<ComponentEstimate> estimate_components(const std::map<std::size_t, std::uint64_t>& counts,
                                                   std::uint64_t prime,
                                                   std::uint64_t effective_samples) {
  std::vector<ComponentEstimate> out;
  if (effective_samples == 0) return out;
  const mpz_class n(std::to_string(effective_samples));
  for (const auto& [codim, count] : counts) {
    if (count == 0) continue;
    ComponentEstimate e;
    e.codim = codim;
    e.count = count;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(prime),
                  static_cast<unsigned long>(codim));
    e.scaled_count = mpz_class(std::to_string(count)) * power;
    e.estimate = mpq_class(e.scaled_count, n).get_d();
    e.error = 2.0 * std::sqrt(static_cast<double>(count)) *
              mpq_class(power, n).get_d();
    out.push_back(std::move(e));
  }
  return out;
}

bool is_separating_witness(const PrimeField& field, const DiffForm& form, int k,
                           TangentOptions options) {
  if (focal_values(field, form, k + 1).first_nonzero != std::optional<int>(k + 1)) return false;
  return codim_at(field, form, k, options) == static_cast<std::size_t>(k);
}

std::vector<SeparatingWitness> find_separating_witnesses(const PrimeField& field,
                                                         const std::vector<DiffForm>& points, int k,
                                                         TangentOptions options) {
  std::vector<SeparatingWitness> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (is_separating_witness(field, points[i], k, options)) out.push_back({i, points[i], k});
  }
  return out;
}

struct CensusRunner::Tally {
  std::map<std::size_t, std::uint64_t> counts;
  std::vector<Survivor> survivors;
  std::uint64_t off_next = 0;
  std::vector<SeparatingWitness> witnesses;
};

namespace {

void process_range(const CensusConfig& config, const PrimeField& field, const SampleSource& source,
                   std::uint64_t begin, std::uint64_t end,
                   std::map<std::size_t, std::uint64_t>& counts, std::vector<Survivor>& survivors,
                   std::uint64_t& off_next, std::vector<SeparatingWitness>& witnesses) {
  const int k = config.k();
  const FrommerTables<PrimeField> tables(field, k);
  FrommerWorkspace<PrimeField> ws(tables);
  TangentComputer tangent(field, k);
  const TangentOptions topts{.homogeneous_only = config.homogeneous_tangent()};
  const RandomFormOptions fopts{.homogeneous_only = config.homogeneous, .solve_s1 = config.solve_s1};

  for (std::uint64_t index = begin; index < end; ++index) {
    SampleStream rng = SampleStream::for_sample(config.seed, index);
    const DiffForm form = source ? source(index, rng) : random_poincare(field, config.degree, rng, fopts);
    const std::optional<int> first = first_nonzero(ws, form, k);
    if (!first) {
      const std::size_t codim = tangent.codim_at(form, k, topts);
      ++counts[codim];
      survivors.push_back({index, form, codim});
    } else if (config.witness_k && *first == *config.witness_k + 1) {
      ++off_next;
      const int wk = *config.witness_k;
      if (tangent.codim_at(form, wk, topts) == static_cast<std::size_t>(wk) &&
          is_separating_witness(field, form, wk, topts)) {
        witnesses.push_back({index, form, wk});
      }
    }
  }
}

}  // namespace

CensusRunner::CensusRunner(CensusConfig config, SampleSource source)
    : config_(std::move(config)),
      field_((config_.validate(), PrimeField(config_.prime))),
      source_(std::move(source)),
      hash_(config_hash(config_)) {}

void CensusRunner::merge(Tally&& tally) {
  for (const auto& [codim, count] : tally.counts) counts_[codim] += count;
  survivors_.insert(survivors_.end(), std::make_move_iterator(tally.survivors.begin()),
                    std::make_move_iterator(tally.survivors.end()));
  off_next_ += tally.off_next;
  witnesses_.insert(witnesses_.end(), std::make_move_iterator(tally.witnesses.begin()),
                    std::make_move_iterator(tally.witnesses.end()));
}

void CensusRunner::advance(std::uint64_t count) {
  const std::uint64_t begin = next_index_;
  const std::uint64_t end = begin + std::min(count, config_.samples - begin);
  if (end == begin) return;
  const std::uint64_t span = end - begin;
  const std::uint64_t workers = std::min<std::uint64_t>(config_.workers, span);

  std::vector<Tally> tallies(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::uint64_t w) {
    const std::uint64_t lo = begin + span * w / workers;
    const std::uint64_t hi = begin + span * (w + 1) / workers;
    try {
      Tally& t = tallies[w];
      process_range(config_, field_, source_, lo, hi, t.counts, t.survivors, t.off_next,
                    t.witnesses);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  // Slices are contiguous and merged in order, so survivors stay sorted by index.
  for (Tally& t : tallies) merge(std::move(t));
  next_index_ = end;
}

void CensusRunner::run(const ProgressCallback& progress) {
  while (!done()) {
    advance(config_.checkpoint_interval);
    if (config_.checkpoint_path) save_checkpoint(*config_.checkpoint_path);
    if (progress) {
      const CensusReport snapshot = report();
      progress({next_index_, config_.samples, &snapshot});
    }
  }
}

void CensusRunner::save_checkpoint(const std::string& path) const {
  CheckpointState state;
  state.config_hash = hash_;
  state.config_json = config_to_json(config_);
  state.next_index = next_index_;
  state.counts = counts_;
  state.survivors = survivors_;
  state.off_next_count = off_next_;
  state.witnesses = witnesses_;
  const std::string text = encode_checkpoint(state);

  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot open " + tmp.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw CheckpointError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw CheckpointError("cannot replace " + path + ": " + ec.message());
}

void CensusRunner::resume(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CheckpointState state = decode_checkpoint(buffer.str(), field_, config_.degree);
  if (state.config_hash != hash_) {
    throw ConfigMismatch("checkpoint " + path + " was written for configuration " +
                         state.config_hash + ", current is " + hash_);
  }
  if (state.next_index > config_.samples) {
    throw CheckpointError("checkpoint is ahead of the configured sample count");
  }
  next_index_ = state.next_index;
  counts_ = std::move(state.counts);
  survivors_ = std::move(state.survivors);
  off_next_ = state.off_next_count;
  witnesses_ = std::move(state.witnesses);
}

CensusReport CensusRunner::report() const {
  CensusReport r;
  r.config = config_;
  r.config_hash = hash_;
  r.processed = next_index_;
  r.effective_samples = config_.solve_s1 ? next_index_ * config_.prime : next_index_;
  r.survivors = survivors_;
  r.counts_by_codim = counts_;
  r.estimates = estimate_components(config_.min_codim ? lump_counts(counts_, *config_.min_codim) : counts_,
                                    config_.prime, r.effective_samples);
  r.off_next_count = off_next_;
  r.witnesses = witnesses_;
  return r;
}

CensusReport run_census(const CensusConfig& config, const ProgressCallback& progress) {
  CensusRunner runner(config);
  runner.run(progress);
  return runner.report();
}

}  // namespace focal
