#pragma once

#include <string>
#include <vector>

#include "infratop/enumerate.hpp"
#include "infratop/space.hpp"

namespace fixtures {

using namespace infratop;

inline InfraSpace space(std::initializer_list<std::string_view> ground,
                        std::initializer_list<std::initializer_list<std::string_view>> opens) {
  GroundSet g(ground);
  std::vector<SubsetMask> members;
  for (auto o : opens) members.push_back(g.subset(o));
  return InfraSpace::make(g, SetFamily(std::move(members)));
}

inline InfraSpace ex41() { return space({"a", "b", "c", "d"}, {{}, {"a"}, {"b"}, {"a", "c"}, {"a", "b", "c", "d"}}); }
inline InfraSpace ex42() { return space({"a", "b", "c", "d"}, {{}, {"b"}, {"c"}, {"b", "c", "d"}, {"a", "b", "c", "d"}}); }
inline InfraSpace s3() { return space({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b", "c"}}); }
inline InfraSpace indiscrete2() { return space({"a", "b"}, {{}, {"a", "b"}}); }

/// Subset of a space's ground set from "a,c" notation.
inline SubsetMask set(const InfraSpace& s, std::string_view text) { return s.ground().parse(text); }

/// All labeled spaces with 1..4 points, built once.
inline const std::vector<InfraSpace>& small_universe() {
  static const auto spaces = enumerate_up_to(4);
  return spaces;
}

inline const std::vector<InfraSpace>& spaces_on(unsigned n) {
  static const auto by_n = [] {
    std::vector<std::vector<InfraSpace>> out(5);
    for (const auto& s : small_universe()) out[s.size()].push_back(s);
    return out;
  }();
  return by_n.at(n);
}

}  // namespace fixtures
