#include "infratop/genops.hpp"

#include <stdexcept>

namespace infratop {

FamilyView::FamilyView(GroundSet ground, SetFamily opens_like)
    : ground_(std::move(ground)), family_(std::move(opens_like)) {
  if (!family_.contains(SubsetMask{}) || !family_.contains(ground_.full())) {
    throw std::invalid_argument("family view needs both the empty set and the full set");
  }
}

SubsetMask f_interior(const FamilyView& v, SubsetMask a) {
  SubsetMask out;
  for (auto o : v.opens_like()) {
    if (is_subset(o, a)) out = join(out, o);
  }
  return out;
}

SubsetMask f_closure(const FamilyView& v, SubsetMask a) {
  SubsetMask out = v.full();
  for (auto o : v.opens_like()) {
    const auto c = complement(v.ground(), o);
    if (is_subset(a, c)) out = meet(out, c);
  }
  return out;
}

SubsetMask f_derived(const FamilyView& v, SubsetMask a) {
  SubsetMask out;
  for (unsigned x = 0; x < v.ground().size(); ++x) {
    bool cluster = true;
    for (auto o : v.opens_like()) {
      if (o.contains(x) && meet(a, o.without(x)).empty()) {
        cluster = false;
        break;
      }
    }
    if (cluster) out = out.with(x);
  }
  return out;
}

SubsetMask f_exterior(const FamilyView& v, SubsetMask a) { return f_interior(v, complement(v.ground(), a)); }

SubsetMask f_boundary(const FamilyView& v, SubsetMask a) {
  return complement(v.ground(), join(f_interior(v, a), f_exterior(v, a)));
}

}  // namespace infratop
