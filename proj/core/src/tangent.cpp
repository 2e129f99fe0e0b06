#include "focal/tangent.hpp"

#include <stdexcept>

namespace focal {

TangentComputer::TangentComputer(const PrimeField& field, int max_k)
    : field_(field),
      base_tables_(field, max_k),
      dual_tables_(DualField(field), max_k),
      base_ws_(base_tables_),
      dual_ws_(dual_tables_) {}

TangentReport TangentComputer::jacobian(const DiffForm& form, int k, TangentOptions options) {
  if (k < 0 || k > max_k()) throw std::out_of_range("k outside the prepared range");
  base_ws_.reset(form);
  for (int j = 1; j <= k; ++j) {
    if (!base_ws_.next().is_zero()) throw NotOnVariety(j);
  }

  TangentReport report;
  report.form = form;
  report.k = k;
  report.directions = poincare_directions(form.degree(), options.homogeneous_only);
  report.jacobian = MatrixFp(static_cast<std::size_t>(k), report.directions.size());

  const DualField& ring = dual_tables_.ring();
  auto lifted = form.transform([&](FieldElement v) { return ring.embed(v); });
  for (std::size_t col = 0; col < report.directions.size(); ++col) {
    DualNumber& slot = coefficient(lifted, report.directions[col]);
    slot.eps = field_.one();
    dual_ws_.reset(lifted);
    for (int j = 0; j < k; ++j) {
      report.jacobian(static_cast<std::size_t>(j), col) = dual_ws_.next().eps;
    }
    slot.eps = field_.zero();
  }
  report.codim = rank_mod_p(field_, report.jacobian);
  return report;
}

std::size_t TangentComputer::codim_at(const DiffForm& form, int k, TangentOptions options) {
  return jacobian(form, k, options).codim;
}

TangentReport jacobian(const PrimeField& field, const DiffForm& form, int k,
                       TangentOptions options) {
  TangentComputer computer(field, k);
  return computer.jacobian(form, k, options);
}

std::size_t codim_at(const PrimeField& field, const DiffForm& form, int k,
                     TangentOptions options) {
  return jacobian(field, form, k, options).codim;
}

}  // namespace focal
