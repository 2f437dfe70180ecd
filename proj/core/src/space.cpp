#include "infratop/space.hpp"

#include <set>
#include <stdexcept>

namespace infratop {

std::string ValidationError::describe(const GroundSet& g) const {
  std::string out;
  auto line = [&out](const std::string& s) {
    if (!out.empty()) out += '\n';
    out += s;
  };
  if (missing_empty) line("missing the empty set");
  if (missing_full) line("missing the full set " + g.format(g.full()));
  for (auto m : stray_members) {
    line("member with bits outside the ground set: 0x" + std::to_string(m.bits()));
  }
  for (const auto& mm : missing_meets) {
    line("not meet-closed: " + g.format(mm.first) + " & " + g.format(mm.second) + " = " + g.format(mm.meet) +
         " is missing");
  }
  return out;
}

ValidationResult validate(GroundSet g, SetFamily f) {
  ValidationError err;
  for (auto m : f) {
    if (!g.valid(m)) err.stray_members.push_back(m);
  }
  err.missing_empty = !f.contains(SubsetMask{});
  err.missing_full = !f.contains(g.full());
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const auto m = meet(ms[i], ms[j]);
      if (!f.contains(m)) err.missing_meets.push_back({ms[i], ms[j], m});
    }
  }
  if (err.missing_empty || err.missing_full || !err.stray_members.empty() || !err.missing_meets.empty()) {
    return err;
  }
  return InfraSpace(std::move(g), std::move(f));
}

InfraSpace InfraSpace::make(GroundSet g, SetFamily opens) {
  auto result = validate(g, std::move(opens));
  if (auto* err = std::get_if<ValidationError>(&result)) {
    throw std::invalid_argument("not an infra topology:\n" + err->describe(g));
  }
  return std::get<InfraSpace>(std::move(result));
}

SetFamily meet_closure(const GroundSet& g, const SetFamily& f) {
  std::set<SubsetMask> members(f.begin(), f.end());
  members.insert(SubsetMask{});
  members.insert(g.full());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<SubsetMask> snapshot(members.begin(), members.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= members.insert(meet(snapshot[i], snapshot[j])).second;
      }
    }
  }
  return SetFamily(std::vector<SubsetMask>(members.begin(), members.end()));
}

SetFamily closed_sets(const InfraSpace& s) {
  std::vector<SubsetMask> out;
  out.reserve(s.opens().size());
  for (auto o : s.opens()) out.push_back(complement(s.ground(), o));
  return SetFamily(std::move(out));
}

SubsetMask interior(const InfraSpace& s, SubsetMask a) {
  SubsetMask out;
  for (auto o : s.opens()) {
    if (is_subset(o, a)) out = join(out, o);
  }
  return out;
}

SubsetMask closure(const InfraSpace& s, SubsetMask a) {
  SubsetMask out = s.full();
  for (auto o : s.opens()) {
    const auto c = complement(s.ground(), o);
    if (is_subset(a, c)) out = meet(out, c);
  }
  return out;
}

SubsetMask exterior(const InfraSpace& s, SubsetMask a) { return interior(s, complement(s.ground(), a)); }

SubsetMask boundary(const InfraSpace& s, SubsetMask a) {
  return complement(s.ground(), join(interior(s, a), exterior(s, a)));
}

SubsetMask derived_set(const InfraSpace& s, SubsetMask a) {
  SubsetMask out;
  for (unsigned x = 0; x < s.size(); ++x) {
    bool cluster = true;
    for (auto o : s.opens()) {
      if (o.contains(x) && meet(a, o.without(x)).empty()) {
        cluster = false;
        break;
      }
    }
    if (cluster) out = out.with(x);
  }
  return out;
}

}  // namespace infratop
