#pragma once

// Executable registry of the claims made about infra spaces and their
// generalized open sets, and an exhaustive checker that decides each claim on
// a finite space, reporting minimal counterexamples.
//
// Quantification: arity-1 claims range over all 2^n subsets; arity-2 claims
// range over ordered pairs of nonempty subsets. Witnesses are ordered by total
// popcount, then lexicographically by the masks in quantifier order. Entries
// with complement coordinates quantify over complements (open-set coordinates
// for claims about closed sets) and report the complemented sets.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infratop/tables.hpp"

namespace infratop {

/// FORCED: provable from the definitions as implemented; a failure is a bug.
/// CHECK: decided empirically. KNOWN_FAIL: has a pinned counterexample.
enum class Expectation : unsigned char { forced, check, known_fail };

[[nodiscard]] std::string_view to_string(Expectation e);

enum class Coordinates : unsigned char { direct, complement };

using Predicate = std::function<bool(const SpaceTables&, std::span<const SubsetMask>)>;

struct TheoremEntry {
  std::string id;
  std::string anchor;  // location and formula of the claim
  unsigned arity = 0;
  Expectation expectation = Expectation::check;
  Predicate predicate;
  Coordinates coordinates = Coordinates::direct;
  /// The FORCED proof relies on delta_closure being dual to delta_interior.
  bool needs_delta_duality = false;

  /// Forced entries that need the dual delta closure degrade to CHECK under the literal reading.
  [[nodiscard]] Expectation expectation_for(DeltaReading reading) const {
    if (expectation == Expectation::forced && needs_delta_duality && reading == DeltaReading::literal) {
      return Expectation::check;
    }
    return expectation;
  }
};

/// The full registry, in a fixed order.
[[nodiscard]] const std::vector<TheoremEntry>& registry();
[[nodiscard]] const TheoremEntry* find_theorem(std::string_view id);

using WitnessTuple = std::vector<SubsetMask>;

struct TheoremVerdict {
  std::string theorem_id;
  InfraSpace space;
  bool passed = true;
  std::vector<WitnessTuple> witnesses;  // minimal first; empty iff passed
  std::uint64_t checked_count = 0;
};

struct CheckOptions {
  std::size_t max_witnesses = 4;
};

[[nodiscard]] TheoremVerdict check(const SpaceTables& t, const TheoremEntry& entry, const CheckOptions& opts = {});
[[nodiscard]] TheoremVerdict check(const InfraSpace& s, const TheoremEntry& entry,
                                   DeltaReading reading = DeltaReading::dual, const CheckOptions& opts = {});

/// A FORCED entry failed: the engine is wrong, not the data.
class ForcedInvariantViolated : public std::runtime_error {
 public:
  explicit ForcedInvariantViolated(TheoremVerdict verdict);
  [[nodiscard]] const TheoremVerdict& verdict() const { return verdict_; }

 private:
  TheoremVerdict verdict_;
};

struct TheoremAggregate {
  std::string theorem_id;
  Expectation expectation = Expectation::check;
  std::uint64_t spaces_passed = 0;
  std::uint64_t spaces_failed = 0;
  std::uint64_t instances = 0;
  std::optional<std::size_t> first_failing_space;  // index into the input stream
  std::optional<TheoremVerdict> first_failure;

  /// FORCED/CHECK never failing is "holds"; KNOWN_FAIL is met once it fails somewhere.
  [[nodiscard]] bool holds() const { return spaces_failed == 0; }
  [[nodiscard]] bool expectation_met() const {
    return expectation == Expectation::known_fail ? spaces_failed > 0 : expectation != Expectation::forced || holds();
  }
};

struct CheckReport {
  std::size_t space_count = 0;
  std::vector<TheoremAggregate> theorems;  // in selection order
  std::vector<TheoremVerdict> verdicts;    // (space, theorem) order; only when keep_verdicts
};

struct CheckAllOptions {
  unsigned jobs = 1;
  DeltaReading reading = DeltaReading::dual;
  bool keep_verdicts = false;
  bool throw_on_forced = true;
  CheckOptions check;
  std::vector<const TheoremEntry*> theorems;  // empty: whole registry
};

/// Checks every selected theorem on every space. Output is identical for any
/// job count. Throws ForcedInvariantViolated for the earliest (space, theorem)
/// FORCED failure when throw_on_forced is set.
[[nodiscard]] CheckReport check_all(std::span<const InfraSpace> spaces, const CheckAllOptions& opts = {});

/// One row of the cross-reference from the source's numbered items to registry ids.
struct CrossReference {
  std::string item;                    // e.g. "Thm 2.15"
  std::string topic;                   // short description
  std::vector<std::string> registry;   // ids, or prefixes ending in '*'
  std::string note;                    // out-of-scope or realization note when registry is empty
};

[[nodiscard]] const std::vector<CrossReference>& cross_reference();

/// Ids of registry entries matched by a cross-reference pattern.
[[nodiscard]] std::vector<std::string> resolve_pattern(std::string_view pattern);

}  // namespace infratop
