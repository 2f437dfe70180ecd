#pragma once

// JSON space files, JSONL streams and report serialization.
//
// Space file: {"ground": ["a","b","c"], "opens": [[], ["a"], ["a","b","c"]]}
// JSONL line: {"n": 3, "opens": [[], ["a"], ["a","b","c"]]}  (ground = first n letters)

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "infratop/implications.hpp"
#include "infratop/theorems.hpp"

namespace infratop {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unvalidated file content; hand it to validate() or meet_closure().
struct SpaceFile {
  GroundSet ground;
  SetFamily opens;
};

/// Accepts either the space-file or the JSONL form. Throws ParseError.
[[nodiscard]] SpaceFile parse_space_json(std::string_view text);
[[nodiscard]] SpaceFile read_space_file(const std::filesystem::path& path);

/// Pretty space file with canonically ordered opens.
[[nodiscard]] std::string space_to_json(const GroundSet& g, const SetFamily& opens);
/// Single-line form; uses {"n":..} when the ground is the first n letters, else {"ground":..}.
[[nodiscard]] std::string space_to_jsonl(const InfraSpace& s);

/// {"theorem","space_opens","status","witnesses","checked"} on one line.
[[nodiscard]] std::string verdict_to_jsonl(const TheoremVerdict& v);

[[nodiscard]] std::string matrix_to_json(const ImplicationMatrix& m);

}  // namespace infratop
