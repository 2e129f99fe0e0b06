#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "focal/prime_field.hpp"

namespace focal {

/// Dense row-major matrix of residues. The modulus is supplied by the caller.
class MatrixFp {
 public:
  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  MatrixFp(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const FieldElement> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<FieldElement>& entries() const noexcept { return entries_; }

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

/// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank_mod_p(const PrimeField& field, MatrixFp m);

/// One solution of m * x = rhs with free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<FieldElement>> solve_mod_p(const PrimeField& field, MatrixFp m,
                                                     std::span<const FieldElement> rhs);

}  // namespace focal
