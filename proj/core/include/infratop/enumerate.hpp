#pragma once

// Exhaustive enumeration of infra topologies on {a, b, ...} with n <= 5.
//
// A family is encoded as a FamilyCode: bit S is set iff the subset with bit
// pattern S is a member (2^n <= 32 bits). Families come out in ascending code
// order, in every mode and for every sharding or job count.

#include <cstdint>
#include <functional>
#include <vector>

#include "infratop/space.hpp"

namespace infratop {

inline constexpr unsigned kMaxEnumGroundSize = 5;

using FamilyCode = std::uint32_t;

struct Shard {
  std::uint32_t index = 0;
  std::uint32_t total = 1;
};

struct EnumConfig {
  unsigned n = 3;
  bool up_to_iso = false;
  bool count_only = false;  // informational for front ends; count_spaces never materializes
  Shard shard;

  /// Throws std::invalid_argument unless 1 <= n <= 5 and index < total.
  void validate() const;
};

[[nodiscard]] FamilyCode code_of(const SetFamily& f);
[[nodiscard]] SetFamily family_of_code(FamilyCode code);

/// True iff the code contains 0 and X and is closed under pairwise meets.
[[nodiscard]] bool is_infra_code(FamilyCode code, unsigned n);

/// Code of the canonical_form image (same result as canonical_form, computed on codes).
[[nodiscard]] FamilyCode canonical_code(FamilyCode code, unsigned n);

/// Number of distinct labeled families isomorphic to code.
[[nodiscard]] std::uint64_t orbit_size(FamilyCode code, unsigned n);

/// Calls visit for every code of the configured shard, in ascending order.
void for_each_code(const EnumConfig& cfg, const std::function<void(FamilyCode)>& visit);

/// Count over the configured shard. jobs > 1 splits the shard further across threads.
[[nodiscard]] std::uint64_t count_spaces(const EnumConfig& cfg, unsigned jobs = 1);

/// All codes of the configured shard in ascending order; identical for any job count.
[[nodiscard]] std::vector<FamilyCode> collect_codes(const EnumConfig& cfg, unsigned jobs = 1);

/// Materialized spaces over GroundSet::letters(n), ascending code order.
[[nodiscard]] std::vector<InfraSpace> enumerate_spaces(const EnumConfig& cfg, unsigned jobs = 1);

/// All labeled spaces with 1 <= n <= max_n, ordered by n then code.
[[nodiscard]] std::vector<InfraSpace> enumerate_up_to(unsigned max_n, unsigned jobs = 1);

[[nodiscard]] InfraSpace space_of_code(FamilyCode code, unsigned n);

}  // namespace infratop
