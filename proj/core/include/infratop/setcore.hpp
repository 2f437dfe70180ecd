#pragma once

// Ground sets, bit-vector subsets and canonically ordered set families.
// Nothing in here knows about topology.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace infratop {

/// Largest supported ground set: one machine word per subset.
inline constexpr unsigned kMaxGroundSize = 32;

/// A subset of a ground set; bit i set means element i is a member.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool contains(unsigned element) const {
    return element < 32 && ((bits_ >> element) & 1u) != 0;
  }

  [[nodiscard]] constexpr SubsetMask with(unsigned element) const {
    return SubsetMask(bits_ | (1u << element));
  }
  [[nodiscard]] constexpr SubsetMask without(unsigned element) const {
    return SubsetMask(bits_ & ~(1u << element));
  }

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

[[nodiscard]] constexpr SubsetMask meet(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits() & b.bits()); }
[[nodiscard]] constexpr SubsetMask join(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits() | b.bits()); }
[[nodiscard]] constexpr SubsetMask minus(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits() & ~b.bits()); }
[[nodiscard]] constexpr bool is_subset(SubsetMask a, SubsetMask b) { return (a.bits() & ~b.bits()) == 0; }

/// Mask with the low n bits set.
[[nodiscard]] constexpr std::uint32_t low_bits(unsigned n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1u;
}

/// Ordered list of distinct, non-empty element names (1..32 of them).
class GroundSet {
 public:
  /// Throws std::invalid_argument on empty/duplicate names or a bad size.
  explicit GroundSet(std::vector<std::string> elements);
  GroundSet(std::initializer_list<std::string_view> elements);

  /// The ground set {a, b, c, ...} with n elements.
  static GroundSet letters(unsigned n);

  [[nodiscard]] unsigned size() const { return static_cast<unsigned>(elements_.size()); }
  [[nodiscard]] const std::vector<std::string>& elements() const { return elements_; }
  [[nodiscard]] const std::string& name(unsigned index) const { return elements_.at(index); }
  [[nodiscard]] std::optional<unsigned> index_of(std::string_view name) const;

  [[nodiscard]] SubsetMask full() const { return SubsetMask(low_bits(size())); }
  [[nodiscard]] bool valid(SubsetMask a) const { return is_subset(a, full()); }

  /// Number of subsets, 2^n. Only meaningful for n < 64.
  [[nodiscard]] std::uint64_t subset_count() const { return std::uint64_t{1} << size(); }

  /// Builds a subset from element names; throws std::invalid_argument on unknown names.
  [[nodiscard]] SubsetMask subset(std::span<const std::string> names) const;
  [[nodiscard]] SubsetMask subset(std::initializer_list<std::string_view> names) const;

  /// Parses "a,c", "{a,c}", "" or "{}". Whitespace around names is ignored.
  [[nodiscard]] SubsetMask parse(std::string_view text) const;

  /// Renders a subset as "{a,c}" in ground order; the empty set is "{}".
  [[nodiscard]] std::string format(SubsetMask a) const;
  [[nodiscard]] std::vector<std::string> names_of(SubsetMask a) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> elements_;
};

/// complement relative to the ground set: X \ a.
[[nodiscard]] inline SubsetMask complement(const GroundSet& g, SubsetMask a) {
  return SubsetMask(~a.bits() & g.full().bits());
}

/// Duplicate-free collection of subsets, always in ascending bit-pattern order.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<SubsetMask> members);
  SetFamily(std::initializer_list<SubsetMask> members);

  /// Family from raw bit patterns, e.g. {0, 15, 1, 2, 5}.
  static SetFamily of_bits(std::initializer_list<std::uint32_t> bits);

  [[nodiscard]] const std::vector<SubsetMask>& members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(SubsetMask a) const;

  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] const SubsetMask& operator[](std::size_t i) const { return members_[i]; }

  /// Lexicographic on the sorted member lists.
  friend auto operator<=>(const SetFamily&, const SetFamily&) = default;
  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<SubsetMask> members_;
};

/// Compares two families by their numeric encoding (bit S set iff S is a member):
/// the family owning the largest subset of the symmetric difference is larger.
[[nodiscard]] std::strong_ordering compare_encoding(const SetFamily& a, const SetFamily& b);

/// Applies a permutation of ground elements: element i moves to perm[i].
[[nodiscard]] SubsetMask permute(SubsetMask a, std::span<const unsigned> perm);
[[nodiscard]] SetFamily permute(const SetFamily& f, std::span<const unsigned> perm);

/// Largest ground set accepted by canonical_form (n! images are generated).
inline constexpr unsigned kMaxCanonicalSize = 8;

/// Lexicographically least image of f over all permutations of the ground set.
/// Two families are isomorphic iff their canonical forms agree.
/// Throws std::invalid_argument when g has more than kMaxCanonicalSize elements.
[[nodiscard]] SetFamily canonical_form(const GroundSet& g, const SetFamily& f);

/// Renders "{{}, {a}, {a,b}}".
[[nodiscard]] std::string format_family(const GroundSet& g, const SetFamily& f);

}  // namespace infratop
