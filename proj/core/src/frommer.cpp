#include "focal/frommer.hpp"

namespace focal {

template class FrommerTables<PrimeField>;
template class FrommerTables<DualField>;
template class FrommerTables<RationalField>;
template class FrommerWorkspace<PrimeField>;
template class FrommerWorkspace<DualField>;
template class FrommerWorkspace<RationalField>;

FocalSequence focal_values(const PrimeField& field, const DiffForm& form, std::optional<int> k) {
  return focal_values(field, form, k.value_or(default_focal_count(field.modulus())));
}

}  // namespace focal
