#pragma once

// One operator kernel for every class: interior, closure, derived set,
// exterior and boundary taken with respect to an arbitrary family that plays
// the role of the open sets. With the infra opens it reproduces the space
// operators; with a class family it gives that class's operators.

#include "infratop/setcore.hpp"

namespace infratop {

class FamilyView {
 public:
  /// Throws std::invalid_argument unless the family holds both the empty set and X.
  FamilyView(GroundSet ground, SetFamily opens_like);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const SetFamily& opens_like() const { return family_; }
  [[nodiscard]] SubsetMask full() const { return ground_.full(); }

 private:
  GroundSet ground_;
  SetFamily family_;
};

/// Union of the members inside a.
[[nodiscard]] SubsetMask f_interior(const FamilyView& v, SubsetMask a);
/// Meet of every C containing a whose complement is a member.
[[nodiscard]] SubsetMask f_closure(const FamilyView& v, SubsetMask a);
/// Points x such that every member containing x meets a \ {x}.
[[nodiscard]] SubsetMask f_derived(const FamilyView& v, SubsetMask a);
[[nodiscard]] SubsetMask f_exterior(const FamilyView& v, SubsetMask a);
[[nodiscard]] SubsetMask f_boundary(const FamilyView& v, SubsetMask a);

}  // namespace infratop
