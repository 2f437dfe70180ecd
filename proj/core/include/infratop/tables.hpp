#pragma once

// Per-space lookup tables for every operator on every subset. Built once from
// the reference operators in space/classes/genops and then indexed by subset
// bits; results are identical to calling the reference functions directly.

#include <array>
#include <cstdint>
#include <vector>

#include "infratop/classes.hpp"
#include "infratop/genops.hpp"
#include "infratop/space.hpp"

namespace infratop {

/// Largest ground set for which tables are built (4^n work for the class operators).
inline constexpr unsigned kMaxTableGroundSize = 10;

/// interior/closure/derived tables for one family playing the role of the opens.
struct FamilyTables {
  SetFamily family;
  std::vector<SubsetMask> interior;
  std::vector<SubsetMask> closure;
  std::vector<SubsetMask> derived;
};

class SpaceTables {
 public:
  /// Throws std::invalid_argument when the ground set exceeds kMaxTableGroundSize.
  explicit SpaceTables(InfraSpace s, DeltaReading reading = DeltaReading::dual);

  [[nodiscard]] const InfraSpace& space() const { return space_; }
  [[nodiscard]] const GroundSet& ground() const { return space_.ground(); }
  [[nodiscard]] DeltaReading reading() const { return reading_; }
  [[nodiscard]] SubsetMask full() const { return space_.full(); }
  [[nodiscard]] std::uint32_t subset_count() const { return static_cast<std::uint32_t>(interior_.size()); }
  [[nodiscard]] SubsetMask comp(SubsetMask a) const { return SubsetMask(a.bits() ^ full().bits()); }

  [[nodiscard]] bool is_open(SubsetMask a) const { return space_.is_open(a); }
  [[nodiscard]] bool is_closed(SubsetMask a) const { return space_.is_closed(a); }

  [[nodiscard]] SubsetMask interior(SubsetMask a) const { return interior_[a.bits()]; }
  [[nodiscard]] SubsetMask closure(SubsetMask a) const { return closure_[a.bits()]; }
  [[nodiscard]] SubsetMask derived(SubsetMask a) const { return derived_[a.bits()]; }
  [[nodiscard]] SubsetMask exterior(SubsetMask a) const { return interior(comp(a)); }
  [[nodiscard]] SubsetMask boundary(SubsetMask a) const { return comp(join(interior(a), exterior(a))); }

  [[nodiscard]] SubsetMask delta_interior(SubsetMask a) const { return delta_interior_[a.bits()]; }
  [[nodiscard]] SubsetMask delta_closure(SubsetMask a) const { return delta_closure_[a.bits()]; }
  [[nodiscard]] SubsetMask delta_frontier(SubsetMask a) const {
    return meet(delta_closure(a), comp(delta_interior(a)));
  }

  /// Membership bits for every class tag, indexed by ClassId::index().
  [[nodiscard]] std::uint32_t membership(SubsetMask a) const { return membership_[a.bits()]; }
  [[nodiscard]] bool member(ClassId c, SubsetMask a) const { return ((membership(a) >> c.index()) & 1u) != 0; }

  /// Operators of the generic kernel over the family of an open class.
  [[nodiscard]] const FamilyTables& ops(ClassKind k) const { return ops_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const SetFamily& family(ClassKind k) const { return ops(k).family; }

  [[nodiscard]] SubsetMask f_interior(ClassKind k, SubsetMask a) const { return ops(k).interior[a.bits()]; }
  [[nodiscard]] SubsetMask f_closure(ClassKind k, SubsetMask a) const { return ops(k).closure[a.bits()]; }
  [[nodiscard]] SubsetMask f_derived(ClassKind k, SubsetMask a) const { return ops(k).derived[a.bits()]; }
  [[nodiscard]] SubsetMask f_exterior(ClassKind k, SubsetMask a) const { return f_interior(k, comp(a)); }
  [[nodiscard]] SubsetMask f_boundary(ClassKind k, SubsetMask a) const {
    return comp(join(f_interior(k, a), f_exterior(k, a)));
  }

 private:
  InfraSpace space_;
  DeltaReading reading_;
  std::vector<SubsetMask> interior_, closure_, derived_;
  std::vector<SubsetMask> delta_interior_, delta_closure_;
  std::vector<std::uint32_t> membership_;
  std::array<FamilyTables, kClassKindCount> ops_;
};

}  // namespace infratop
