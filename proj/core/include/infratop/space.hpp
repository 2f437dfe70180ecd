#pragma once

// Infra-topological spaces: a ground set with a family of "open" subsets that
// contains the empty and full sets and is closed under pairwise intersection.
// Unions of opens need not be open, so interior and closure below are plain
// subsets that are not guaranteed to be open or closed.

#include <string>
#include <variant>
#include <vector>

#include "infratop/setcore.hpp"

namespace infratop {

/// Everything wrong with a candidate family, collected in one pass.
struct ValidationError {
  struct MissingMeet {
    SubsetMask first;
    SubsetMask second;
    SubsetMask meet;
  };

  bool missing_empty = false;
  bool missing_full = false;
  std::vector<SubsetMask> stray_members;   // members with bits outside the ground set
  std::vector<MissingMeet> missing_meets;  // every offending pair, first < second

  [[nodiscard]] bool missing_empty_or_full() const { return missing_empty || missing_full; }
  [[nodiscard]] bool not_meet_closed() const { return !missing_meets.empty(); }
  [[nodiscard]] std::string describe(const GroundSet& g) const;
};

class InfraSpace;
using ValidationResult = std::variant<InfraSpace, ValidationError>;

class InfraSpace {
 public:
  /// Validates and throws std::invalid_argument with the full error description.
  static InfraSpace make(GroundSet g, SetFamily opens);

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] const SetFamily& opens() const { return opens_; }
  [[nodiscard]] unsigned size() const { return ground_.size(); }
  [[nodiscard]] SubsetMask full() const { return ground_.full(); }

  [[nodiscard]] bool is_open(SubsetMask a) const { return opens_.contains(a); }
  [[nodiscard]] bool is_closed(SubsetMask a) const { return opens_.contains(complement(ground_, a)); }

  friend bool operator==(const InfraSpace&, const InfraSpace&) = default;

 private:
  friend ValidationResult validate(GroundSet g, SetFamily f);
  InfraSpace(GroundSet g, SetFamily opens) : ground_(std::move(g)), opens_(std::move(opens)) {}

  GroundSet ground_;
  SetFamily opens_;
};

/// Returns the space iff f contains the empty set and X and is closed under
/// pairwise meets (which implies closure under every finite meet).
[[nodiscard]] ValidationResult validate(GroundSet g, SetFamily f);

/// Smallest meet-closed family containing f, the empty set and X.
[[nodiscard]] SetFamily meet_closure(const GroundSet& g, const SetFamily& f);

/// Complements of the opens, canonical order.
[[nodiscard]] SetFamily closed_sets(const InfraSpace& s);

/// Union of the opens contained in a.
[[nodiscard]] SubsetMask interior(const InfraSpace& s, SubsetMask a);
/// Intersection of the closed sets containing a.
[[nodiscard]] SubsetMask closure(const InfraSpace& s, SubsetMask a);
/// interior of the complement.
[[nodiscard]] SubsetMask exterior(const InfraSpace& s, SubsetMask a);
/// X \ (interior(a) u exterior(a)).
[[nodiscard]] SubsetMask boundary(const InfraSpace& s, SubsetMask a);
/// Points x such that every open O containing x meets a \ {x}.
[[nodiscard]] SubsetMask derived_set(const InfraSpace& s, SubsetMask a);

}  // namespace infratop
