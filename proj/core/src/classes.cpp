#include "infratop/classes.hpp"

#include <stdexcept>

namespace infratop {

namespace {

struct ClassName {
  ClassKind kind;
  std::string_view stem;  // name without the "-open" / "-closed" suffix
};

constexpr std::array<ClassName, kClassKindCount> kNames = {{
    {ClassKind::open, ""},
    {ClassKind::regular_open, "regular"},
    {ClassKind::delta_open, "delta"},
    {ClassKind::pre_open, "pre"},
    {ClassKind::semi_open, "semi"},
    {ClassKind::delta_pre_open, "delta-pre"},
    {ClassKind::delta_semi_open, "delta-semi"},
    {ClassKind::e_open, "e"},
    {ClassKind::e_star_open, "e-star"},
    {ClassKind::a_open, "a"},
    {ClassKind::beta_open, "beta"},
}};

}  // namespace

std::string ClassId::name() const {
  for (const auto& n : kNames) {
    if (n.kind != kind) continue;
    std::string out(n.stem);
    if (!out.empty()) out += '-';
    out += closed ? "closed" : "open";
    return out;
  }
  return "?";
}

std::optional<ClassId> ClassId::parse(std::string_view name) {
  for (const auto& c : all_classes()) {
    if (c.name() == name) return c;
  }
  return std::nullopt;
}

std::vector<ClassId> open_classes() {
  std::vector<ClassId> out;
  for (auto k : kAllClassKinds) out.push_back({k, false});
  return out;
}

std::vector<ClassId> all_classes() {
  auto out = open_classes();
  for (auto k : kAllClassKinds) out.push_back({k, true});
  return out;
}

std::vector<std::string> class_names() {
  std::vector<std::string> out;
  for (const auto& c : all_classes()) out.push_back(c.name());
  return out;
}

bool is_regular_open(const InfraSpace& s, SubsetMask a) { return a == interior(s, closure(s, a)); }

ClassEvaluator::ClassEvaluator(InfraSpace s, DeltaReading reading) : s_(std::move(s)), reading_(reading) {
  if (s_.size() > kMaxClassGroundSize) {
    throw std::invalid_argument("class computations support at most " + std::to_string(kMaxClassGroundSize) +
                                " ground elements");
  }
  const auto count = s_.ground().subset_count();
  std::vector<SubsetMask> ro;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(static_cast<std::uint32_t>(bits));
    if (is_regular_open(s_, a)) ro.push_back(a);
  }
  regular_open_ = SetFamily(std::move(ro));
}

SubsetMask ClassEvaluator::delta_interior(SubsetMask a) const {
  SubsetMask out;
  for (auto r : regular_open_) {
    if (is_subset(r, a)) out = join(out, r);
  }
  return out;
}

SubsetMask ClassEvaluator::delta_closure(SubsetMask a) const {
  if (reading_ == DeltaReading::dual) {
    return complement(s_.ground(), delta_interior(complement(s_.ground(), a)));
  }
  SubsetMask out = s_.full();
  for (auto r : regular_open_) {
    if (is_subset(a, r)) out = meet(out, r);
  }
  return out;
}

SubsetMask ClassEvaluator::delta_frontier(SubsetMask a) const {
  return meet(delta_closure(a), complement(s_.ground(), delta_interior(a)));
}

bool ClassEvaluator::member_open_kind(ClassKind k, SubsetMask a) const {
  const auto& s = s_;
  switch (k) {
    case ClassKind::open:
      return s.is_open(a);
    case ClassKind::regular_open:
      return regular_open_.contains(a);
    case ClassKind::delta_open:
      return a == delta_interior(a);
    case ClassKind::pre_open:
      return is_subset(a, interior(s, closure(s, a)));
    case ClassKind::semi_open:
      return is_subset(a, closure(s, interior(s, a)));
    case ClassKind::delta_pre_open:
      return is_subset(a, interior(s, delta_closure(a)));
    case ClassKind::delta_semi_open:
      return is_subset(a, closure(s, delta_interior(a)));
    case ClassKind::e_open:
      return is_subset(a, join(closure(s, delta_interior(a)), interior(s, delta_closure(a))));
    case ClassKind::e_star_open:
      return is_subset(a, closure(s, interior(s, delta_closure(a))));
    case ClassKind::a_open:
      return is_subset(a, interior(s, closure(s, delta_interior(a))));
    case ClassKind::beta_open:
      return is_subset(a, closure(s, interior(s, closure(s, a))));
  }
  return false;
}

bool ClassEvaluator::member(ClassId c, SubsetMask a) const {
  return member_open_kind(c.kind, c.closed ? complement(s_.ground(), a) : a);
}

SetFamily ClassEvaluator::family(ClassId c) const {
  std::vector<SubsetMask> out;
  const auto count = s_.ground().subset_count();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const SubsetMask a(static_cast<std::uint32_t>(bits));
    if (member(c, a)) out.push_back(a);
  }
  return SetFamily(std::move(out));
}

SetFamily regular_open_sets(const InfraSpace& s) { return ClassEvaluator(s).regular_open(); }

SubsetMask delta_interior(const InfraSpace& s, SubsetMask a) { return ClassEvaluator(s).delta_interior(a); }

SubsetMask delta_closure(const InfraSpace& s, SubsetMask a, DeltaReading reading) {
  return ClassEvaluator(s, reading).delta_closure(a);
}

SubsetMask delta_frontier(const InfraSpace& s, SubsetMask a, DeltaReading reading) {
  return ClassEvaluator(s, reading).delta_frontier(a);
}

bool is_member(const InfraSpace& s, ClassId c, SubsetMask a, DeltaReading reading) {
  if (c.kind == ClassKind::open) {
    return c.closed ? s.is_closed(a) : s.is_open(a);
  }
  return ClassEvaluator(s, reading).member(c, a);
}

SetFamily family_of(const InfraSpace& s, ClassId c, DeltaReading reading) {
  return ClassEvaluator(s, reading).family(c);
}

std::vector<ClassId> classify(const InfraSpace& s, SubsetMask a, DeltaReading reading) {
  const ClassEvaluator eval(s, reading);
  std::vector<ClassId> out;
  for (const auto& c : all_classes()) {
    if (eval.member(c, a)) out.push_back(c);
  }
  return out;
}

}  // namespace infratop
