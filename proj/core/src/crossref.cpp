#include "infratop/theorems.hpp"

namespace infratop {

namespace {

std::vector<CrossReference> build() {
  using R = std::vector<std::string>;
  return {
      {"Def 2.1", "infra topology", {}, "axioms enforced by validate(); not a claim"},
      {"Def 2.2", "infra open / infra closed sets", R{"T2.17.i-forward", "T2.17.i-converse"}, ""},
      {"Def 2.3", "infra closed sets via complements", R{"T-ICS-INT.i"}, ""},
      {"Thm 2.4", "every topology is an infra topology", {},
       "out of scope: union-closed families trivially pass validate()"},
      {"Thm 2.5", "0, X open; intersections of opens are open", {}, "enforced by validate() invariants"},
      {"Thm 2.6", "intersection of two infra topologies", {}, "out of scope: relates two spaces on one set"},
      {"Def 2.7", "infra cluster point", R{"T2.15.*"}, ""},
      {"Def 2.8", "infra derived set", R{"T2.15.*"}, ""},
      {"Thm (ICS axioms)", "0, X closed; finite intersections of closed sets", R{"T-ICS-INT.i", "T-ICS-INT"}, ""},
      {"Def 2.9", "infra closure", R{"T2.16.*"}, ""},
      {"Rmk 2.10", "closure is the smallest closed superset", R{"T2.16.i-converse"},
       "the claim that I.CL(A) is closed is decided by the converse entry"},
      {"Def 2.11", "infra interior", R{"T2.17.*"}, ""},
      {"Rmk 2.12", "interior is the largest open subset", R{"T2.17.i-converse"},
       "the claim that I.INT(A) is open is decided by the converse entry"},
      {"Def 2.13", "infra exterior", R{"T2.18.*"}, ""},
      {"Def 2.14", "infra boundary", R{"T2.19.*"}, ""},
      {"Thm 2.15", "derived set axioms", R{"T2.15.*"}, ""},
      {"Thm 2.16", "closure axioms", R{"T2.16.*"}, ""},
      {"Thm 2.17", "interior axioms", R{"T2.17.*"}, ""},
      {"Thm 2.18", "exterior axioms", R{"T2.18.*"}, ""},
      {"Thm 2.19", "boundary axioms", R{"T2.19.*"}, ""},
      {"Thm 2.20", "relations between the operators", R{"T2.20.*"}, ""},

      {"Def 3.1", "delta interior", R{"L-δP-δS.*", "TH-δSOS-ESTAR*"}, ""},
      {"Def 3.2", "delta closure", R{"L-δS-ID.*"}, "realized as the dual of the delta interior"},
      {"Def 3.3", "the ten generalized open classes", R{"IMP:*"}, ""},
      {"Def 3.4", "closed duals", R{"TH-ROS-EQ*", "L-ESTAR.1-corrected"}, ""},
      {"Def 3.5", "class cluster points", R{"T3.2.*", "T3.3.*", "T3.4.*"}, ""},
      {"Def 3.6", "class derived sets", R{"T3.2.*", "T3.3.*", "T3.4.*"}, ""},
      {"Thm (ICS axioms, repeated)", "0, X closed; finite intersections of closed sets",
       R{"T-ICS-INT.i", "T-ICS-INT"}, ""},
      {"Def 3.7", "class closures", R{"T3.5.*", "T3.6.*", "T3.7.*"}, ""},
      {"Def 3.8", "class interiors", R{"T3.8.*", "T3.9.*", "T3.10.*"}, ""},
      {"Def 3.9", "class exteriors", R{"T3.11.*", "T3.12.*", "T3.13.*"}, ""},
      {"Def 3.10", "class boundaries", R{"T3.14.*", "T3.15.*", "T3.16.*"}, ""},
      {"Thm 3.2", "e derived set axioms", R{"T3.2.*"}, ""},
      {"Thm 3.3", "e* derived set axioms", R{"T3.3.*"}, ""},
      {"Thm 3.4", "a derived set axioms", R{"T3.4.*"}, ""},
      {"Thm 3.5", "e closure axioms", R{"T3.5.*"}, ""},
      {"Thm 3.6", "e* closure axioms", R{"T3.6.*"}, ""},
      {"Thm 3.7", "a closure axioms", R{"T3.7.*"}, ""},
      {"Thm 3.8", "e interior axioms", R{"T3.8.*"}, ""},
      {"Thm 3.9", "e* interior axioms", R{"T3.9.*"}, ""},
      {"Thm 3.10", "a interior axioms", R{"T3.10.*"}, ""},
      {"Thm 3.11", "e exterior axioms", R{"T3.11.*"}, ""},
      {"Thm 3.12", "e* exterior axioms", R{"T3.12.*"}, ""},
      {"Thm 3.13", "a exterior axioms", R{"T3.13.*"}, ""},
      {"Thm 3.14", "e boundary axioms", R{"T3.14.*"}, ""},
      {"Thm 3.15", "e* boundary axioms", R{"T3.15.*"}, ""},
      {"Thm 3.16", "a boundary axioms", R{"T3.16.*"}, ""},
      {"Thm 3.17", "e operator relations", R{"T3.17.*"}, ""},
      {"Thm 3.18", "e* operator relations", R{"T3.18.*"}, ""},
      {"Thm 3.19", "a operator relations", R{"T3.19.*"}, ""},
      {"Thm l1", "delta-pre / delta-semi closure and interior bounds", R{"L-δP-δS.*"}, ""},
      {"Prop (e-open)", "when e-open sets are delta-pre or delta-semi open", R{"P-E1.*"}, ""},
      {"Thm (e-open char.)", "e-open iff union of delta-pre and delta-semi interiors", R{"TH-ECHAR*"}, ""},
      {"Prop (eCL)", "e closure / interior under complement, union, intersection", R{"P-ECL-COMPL.*"}, ""},
      {"Prop p1", "bounds on e closure and e interior", R{"P-ECL-BOUND.*"}, ""},
      {"Thm (eCL meet)", "e closure as meet of delta-pre and delta-semi closures", R{"TH-ECL-MEET"}, ""},
      {"Lemma (dS identities)", "delta-semi interior / closure identities", R{"L-δS-ID.*"}, ""},
      {"Lemma (e*)", "e* closure lemma", R{"L-ESTAR.*"}, ""},
      {"Thm (e* char.)", "e* open / closed characterizations and formulas", R{"TH-ESTAR.*"}, ""},
      {"Thm (ROS equivalence)", "regular open equivalences", R{"TH-ROS-EQ*"}, ""},
      {"Thm (dSOS char.)", "delta-semi open via e* and the delta frontier", R{"TH-δSOS-ESTAR*"}, ""},
      {"Thm (aO meet)", "a-open family as a meet of families", R{"TH-AO-MEET"}, ""},
  };
}

}  // namespace

const std::vector<CrossReference>& cross_reference() {
  static const std::vector<CrossReference> table = build();
  return table;
}

std::vector<std::string> resolve_pattern(std::string_view pattern) {
  std::vector<std::string> out;
  if (!pattern.empty() && pattern.back() == '*') {
    const auto prefix = pattern.substr(0, pattern.size() - 1);
    for (const auto& e : registry()) {
      if (std::string_view(e.id).starts_with(prefix)) out.push_back(e.id);
    }
  } else if (find_theorem(pattern) != nullptr) {
    out.emplace_back(pattern);
  }
  return out;
}

}  // namespace infratop
