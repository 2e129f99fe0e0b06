#pragma once

#include <cstdint>

#include "focal/prime_field.hpp"

namespace focal {

std::uint64_t mix64(std::uint64_t z) noexcept;

/// SplitMix64 generator. Cheap to seed, so every census sample gets its own
/// stream derived from (seed, index) and the sample set does not depend on how
/// indices are split between workers.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t state) noexcept : state_(state) {}

  /// Stream for sample `index` of a run seeded with `seed`.
  static SampleStream for_sample(std::uint64_t seed, std::uint64_t index) noexcept {
    return SampleStream(mix64(seed ^ mix64(index)));
  }

  std::uint64_t next() noexcept;

  /// Uniform residue of F_p by rejection sampling.
  FieldElement residue(const PrimeField& field) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace focal
