#pragma once

#include <cstddef>
#include <vector>

#include "focal/dual.hpp"
#include "focal/form.hpp"
#include "focal/frommer.hpp"
#include "focal/matrix.hpp"

namespace focal {

struct TangentOptions {
  /// Differentiate only along the degree-d coefficients.
  bool homogeneous_only = false;
};

/// Jacobian of (s_1, ..., s_k) at a point of X_k and its rank.
struct TangentReport {
  DiffForm form;
  int k = 0;
  std::vector<Direction> directions;
  /// k x directions.size(); entry (j, v) is d s_{j+1} / d directions[v].
  MatrixFp jacobian;
  /// Codimension of the tangent space of X_k at the form.
  std::size_t codim = 0;
};

/// Reusable tables for repeated tangent computations at one (p, k).
class TangentComputer {
 public:
  /// Throws CharacteristicTooSmall when p <= 2k + 2.
  TangentComputer(const PrimeField& field, int max_k);
  TangentComputer(const TangentComputer&) = delete;
  TangentComputer& operator=(const TangentComputer&) = delete;

  int max_k() const noexcept { return base_tables_.max_k(); }

  /// Throws NotOnVariety when some s_j, j <= k, is nonzero at the form.
  TangentReport jacobian(const DiffForm& form, int k, TangentOptions options = {});
  std::size_t codim_at(const DiffForm& form, int k, TangentOptions options = {});

 private:
  PrimeField field_;
  FrommerTables<PrimeField> base_tables_;
  FrommerTables<DualField> dual_tables_;
  FrommerWorkspace<PrimeField> base_ws_;
  FrommerWorkspace<DualField> dual_ws_;
};

TangentReport jacobian(const PrimeField& field, const DiffForm& form, int k,
                       TangentOptions options = {});
std::size_t codim_at(const PrimeField& field, const DiffForm& form, int k,
                     TangentOptions options = {});

}  // namespace focal
