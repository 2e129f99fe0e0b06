#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace focal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of a non-unit requested") {}
};

/// An integer denominator of the recurrence is not a unit of the coefficient ring.
class NonInvertibleDenominator : public Error {
 public:
  explicit NonInvertibleDenominator(std::int64_t denominator)
      : Error("denominator " + std::to_string(denominator) +
              " is not invertible in the coefficient ring"),
        denominator_(denominator) {}
  std::int64_t denominator() const noexcept { return denominator_; }

 private:
  std::int64_t denominator_;
};

class CharacteristicTooSmall : public Error {
 public:
  CharacteristicTooSmall(std::uint64_t characteristic, int k)
      : Error("characteristic " + std::to_string(characteristic) +
              " too small for " + std::to_string(k) +
              " focal values (need p > 2k+2)"),
        characteristic_(characteristic),
        k_(k) {}
  std::uint64_t characteristic() const noexcept { return characteristic_; }
  int k() const noexcept { return k_; }

 private:
  std::uint64_t characteristic_;
  int k_;
};

class NotPoincare : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Raised when a tangent space is requested at a point off the variety.
class NotOnVariety : public Error {
 public:
  explicit NotOnVariety(int index)
      : Error("focal value s_" + std::to_string(index) +
              " does not vanish at the given form"),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class MalformedPotential : public Error {
 public:
  using Error::Error;
};

class NotARotation : public Error {
 public:
  NotARotation() : Error("rotation parameters violate c^2 + s^2 = 1") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotIntegralCurve : public Error {
 public:
  explicit NotIntegralCurve(std::size_t curve_index)
      : Error("curve #" + std::to_string(curve_index) +
              " is not an integral curve of the form"),
        curve_index_(curve_index) {}
  std::size_t curve_index() const noexcept { return curve_index_; }

 private:
  std::size_t curve_index_;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

/// Checkpoint could not be read, written, or decoded.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable example corpus.
class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace focal
