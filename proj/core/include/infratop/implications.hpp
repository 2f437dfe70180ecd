#pragma once

// Empirical implication matrix between set classes over a universe of spaces,
// single-cell counterexample hunting, and Graphviz output.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infratop/classes.hpp"

namespace infratop {

struct SpaceWitness {
  InfraSpace space;
  SubsetMask subset;
};

struct ImplicationCell {
  bool holds = true;
  std::uint64_t counterexamples = 0;  // (space, subset) pairs in from \ to
  std::optional<SpaceWitness> witness;  // minimal; present iff !holds
};

struct ImplicationMatrix {
  std::vector<ClassId> classes;
  std::vector<std::vector<ImplicationCell>> cells;  // [from][to]
  std::size_t space_count = 0;

  [[nodiscard]] std::optional<std::size_t> index_of(ClassId c) const;
  /// Throws std::out_of_range for classes not in the matrix.
  [[nodiscard]] const ImplicationCell& cell(ClassId from, ClassId to) const;
};

/// Witness order: ground size, then family encoding (compare_encoding), then
/// subset popcount, then subset bits. Identical for any job count.
[[nodiscard]] ImplicationMatrix implication_matrix(std::span<const InfraSpace> spaces, std::vector<ClassId> classes,
                                                   DeltaReading reading = DeltaReading::dual, unsigned jobs = 1);

/// Minimal witness of from-but-not-not_to, or nothing when the implication holds.
/// Throws std::invalid_argument when from == not_to.
[[nodiscard]] std::optional<SpaceWitness> hunt(std::span<const InfraSpace> spaces, ClassId from, ClassId not_to,
                                               DeltaReading reading = DeltaReading::dual);

/// Every subset of s in from but not in not_to, ascending by (popcount, bits).
[[nodiscard]] std::vector<SubsetMask> hunt_all(const InfraSpace& s, ClassId from, ClassId not_to,
                                               DeltaReading reading = DeltaReading::dual);

/// One node per class and one edge per holding implication (no self loops).
/// Edges whose converse fails are annotated with the converse's witness.
[[nodiscard]] std::string to_dot(const ImplicationMatrix& m);

}  // namespace infratop
