#include "infratop/tables.hpp"

#include <stdexcept>

namespace infratop {

SpaceTables::SpaceTables(InfraSpace s, DeltaReading reading) : space_(std::move(s)), reading_(reading) {
  if (space_.size() > kMaxTableGroundSize) {
    throw std::invalid_argument("operator tables support at most " + std::to_string(kMaxTableGroundSize) +
                                " ground elements");
  }
  const ClassEvaluator eval(space_, reading_);
  const auto count = static_cast<std::uint32_t>(space_.ground().subset_count());
  const auto classes = all_classes();

  interior_.resize(count);
  closure_.resize(count);
  derived_.resize(count);
  delta_interior_.resize(count);
  delta_closure_.resize(count);
  membership_.assign(count, 0);

  std::array<std::vector<SubsetMask>, kClassKindCount> members;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(bits);
    interior_[bits] = infratop::interior(space_, a);
    closure_[bits] = infratop::closure(space_, a);
    derived_[bits] = derived_set(space_, a);
    delta_interior_[bits] = eval.delta_interior(a);
    delta_closure_[bits] = eval.delta_closure(a);
    for (const auto& c : classes) {
      if (eval.member(c, a)) {
        membership_[bits] |= std::uint32_t{1} << c.index();
        if (!c.closed) members[static_cast<std::size_t>(c.kind)].push_back(a);
      }
    }
  }

  for (std::size_t k = 0; k < kClassKindCount; ++k) {
    auto& t = ops_[k];
    t.family = SetFamily(std::move(members[k]));
    const FamilyView view(space_.ground(), t.family);
    t.interior.resize(count);
    t.closure.resize(count);
    t.derived.resize(count);
    for (std::uint32_t bits = 0; bits < count; ++bits) {
      const SubsetMask a(bits);
      t.interior[bits] = infratop::f_interior(view, a);
      t.closure[bits] = infratop::f_closure(view, a);
      t.derived[bits] = infratop::f_derived(view, a);
    }
  }
}

}  // namespace infratop
