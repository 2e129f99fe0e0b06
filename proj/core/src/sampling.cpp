#include "focal/sampling.hpp"

namespace focal {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SampleStream::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

FieldElement SampleStream::residue(const PrimeField& field) noexcept {
  const std::uint64_t p = field.modulus();
  // Largest multiple of p that fits; draws at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return field.from_uint(v);
}

}  // namespace focal
