#include "focal/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace focal {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
}

namespace {

// Reduces m to row echelon form in place; returns the pivot column of each
// pivot row.
std::vector<std::size_t> echelonize(const PrimeField& field, MatrixFp& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    const FieldElement inv = field.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const PrimeField& field, MatrixFp m) {
  return echelonize(field, m).size();
}

std::optional<std::vector<FieldElement>> solve_mod_p(const PrimeField& field, MatrixFp m,
                                                     std::span<const FieldElement> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length does not match rows");
  MatrixFp aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto pivots = echelonize(field, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<FieldElement> x(m.cols(), field.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace focal
