#pragma once

// The delta operators and the generalized open-set classes, together with their
// closed duals. Membership is always evaluated from the defining inclusion;
// families are the 2^n subsets filtered by membership.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infratop/space.hpp"

namespace infratop {

enum class ClassKind : unsigned char {
  open,
  regular_open,
  delta_open,
  pre_open,
  semi_open,
  delta_pre_open,
  delta_semi_open,
  e_open,
  e_star_open,
  a_open,
  beta_open,
};

inline constexpr std::size_t kClassKindCount = 11;

inline constexpr std::array<ClassKind, kClassKindCount> kAllClassKinds = {
    ClassKind::open,           ClassKind::regular_open,    ClassKind::delta_open, ClassKind::pre_open,
    ClassKind::semi_open,      ClassKind::delta_pre_open,  ClassKind::delta_semi_open,
    ClassKind::e_open,         ClassKind::e_star_open,     ClassKind::a_open,     ClassKind::beta_open,
};

/// A class tag: an open-set class, or (closed == true) its dual, whose members
/// are the complements of the open class's members.
struct ClassId {
  ClassKind kind = ClassKind::open;
  bool closed = false;

  [[nodiscard]] constexpr ClassId dual() const { return {kind, !closed}; }
  [[nodiscard]] constexpr std::size_t index() const {
    return static_cast<std::size_t>(kind) + (closed ? kClassKindCount : 0);
  }

  /// Canonical name such as "e-star-open" or "delta-semi-closed".
  [[nodiscard]] std::string name() const;
  [[nodiscard]] static std::optional<ClassId> parse(std::string_view name);

  friend constexpr auto operator<=>(ClassId, ClassId) = default;
};

/// The eleven open classes in canonical order.
[[nodiscard]] std::vector<ClassId> open_classes();
/// Open classes followed by their closed duals.
[[nodiscard]] std::vector<ClassId> all_classes();
/// All canonical names, for usage messages.
[[nodiscard]] std::vector<std::string> class_names();

/// How the delta closure is built.
///  dual:    meet of regular-closed supersets, i.e. X \ delta_interior(X \ a).
///  literal: meet of regular-open supersets (kept for comparison only).
enum class DeltaReading : unsigned char { dual, literal };

/// Largest ground set for which class computations are allowed; they scan all 2^n subsets.
inline constexpr unsigned kMaxClassGroundSize = 16;

[[nodiscard]] bool is_regular_open(const InfraSpace& s, SubsetMask a);

/// Holds the regular-open family of one space so that repeated delta and
/// membership queries do not rescan all 2^n subsets. The free functions below
/// build a fresh evaluator per call.
class ClassEvaluator {
 public:
  /// Throws std::invalid_argument when the ground set exceeds kMaxClassGroundSize.
  explicit ClassEvaluator(InfraSpace s, DeltaReading reading = DeltaReading::dual);

  [[nodiscard]] const InfraSpace& space() const { return s_; }
  [[nodiscard]] DeltaReading reading() const { return reading_; }
  [[nodiscard]] const SetFamily& regular_open() const { return regular_open_; }

  [[nodiscard]] SubsetMask delta_interior(SubsetMask a) const;
  [[nodiscard]] SubsetMask delta_closure(SubsetMask a) const;
  [[nodiscard]] SubsetMask delta_frontier(SubsetMask a) const;

  [[nodiscard]] bool member(ClassId c, SubsetMask a) const;
  [[nodiscard]] SetFamily family(ClassId c) const;

 private:
  [[nodiscard]] bool member_open_kind(ClassKind k, SubsetMask a) const;

  InfraSpace s_;
  DeltaReading reading_;
  SetFamily regular_open_;
};

/// All regular-open subsets, canonical order.
[[nodiscard]] SetFamily regular_open_sets(const InfraSpace& s);

/// Union of the regular-open sets inside a.
[[nodiscard]] SubsetMask delta_interior(const InfraSpace& s, SubsetMask a);
[[nodiscard]] SubsetMask delta_closure(const InfraSpace& s, SubsetMask a, DeltaReading reading = DeltaReading::dual);
/// delta_closure(a) & (X \ delta_interior(a)).
[[nodiscard]] SubsetMask delta_frontier(const InfraSpace& s, SubsetMask a, DeltaReading reading = DeltaReading::dual);

[[nodiscard]] bool is_member(const InfraSpace& s, ClassId c, SubsetMask a, DeltaReading reading = DeltaReading::dual);
[[nodiscard]] SetFamily family_of(const InfraSpace& s, ClassId c, DeltaReading reading = DeltaReading::dual);

/// Every class (open and closed tags) that a belongs to, canonical order.
[[nodiscard]] std::vector<ClassId> classify(const InfraSpace& s, SubsetMask a,
                                            DeltaReading reading = DeltaReading::dual);

}  // namespace infratop
