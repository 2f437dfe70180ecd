#include "infratop/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace infratop {

namespace {

using Args = std::span<const SubsetMask>;
using T = const SpaceTables&;
using M = SubsetMask;

constexpr M kEmpty{};

bool sub(M a, M b) { return is_subset(a, b); }
bool disjoint(M a, M b) { return meet(a, b).empty(); }

template <class F>
Predicate nullary(F f) {
  return [f](T t, Args) { return f(t); };
}
template <class F>
Predicate unary(F f) {
  return [f](T t, Args a) { return f(t, a[0]); };
}
template <class F>
Predicate binary(F f) {
  return [f](T t, Args a) { return f(t, a[0], a[1]); };
}

constexpr auto kForced = Expectation::forced;
constexpr auto kCheck = Expectation::check;
constexpr auto kKnownFail = Expectation::known_fail;

class Builder {
 public:
  template <class F>
  void add0(std::string id, std::string anchor, Expectation e, F f) {
    push(std::move(id), std::move(anchor), 0, e, nullary(std::move(f)));
  }
  template <class F>
  void add1(std::string id, std::string anchor, Expectation e, F f) {
    push(std::move(id), std::move(anchor), 1, e, unary(std::move(f)));
  }
  template <class F>
  void add2(std::string id, std::string anchor, Expectation e, F f) {
    push(std::move(id), std::move(anchor), 2, e, binary(std::move(f)));
  }

  TheoremEntry& last() { return entries_.back(); }
  std::vector<TheoremEntry> take() { return std::move(entries_); }

 private:
  void push(std::string id, std::string anchor, unsigned arity, Expectation e, Predicate p) {
    TheoremEntry entry;
    entry.id = std::move(id);
    entry.anchor = std::move(anchor);
    entry.arity = arity;
    entry.expectation = e;
    entry.predicate = std::move(p);
    entries_.push_back(std::move(entry));
  }

  std::vector<TheoremEntry> entries_;
};

// Claims about the infra operators themselves.
void add_space_claims(Builder& b) {
  b.add0("T2.15.i", "Thm 2.15(i): IDS(0) = 0", kForced, [](T t) { return t.derived(kEmpty).empty(); });
  b.add2("T2.15.ii", "Thm 2.15(ii): A c B => IDS(A) c IDS(B)", kForced,
         [](T t, M a, M c) { return !sub(a, c) || sub(t.derived(a), t.derived(c)); });
  b.add1("T2.15.iii", "Thm 2.15(iii): x in IDS(A) => x in IDS(A \\ {x})", kForced, [](T t, M a) {
    const M d = t.derived(a);
    for (unsigned x = 0; x < t.ground().size(); ++x) {
      if (d.contains(x) && !t.derived(a.without(x)).contains(x)) return false;
    }
    return true;
  });
  b.add2("T2.15.iv", "Thm 2.15(iv): IDS(A n B) c IDS(A) n IDS(B)", kForced,
         [](T t, M a, M c) { return sub(t.derived(meet(a, c)), meet(t.derived(a), t.derived(c))); });
  b.add2("T2.15.v", "Thm 2.15(v): IDS(A u B) = IDS(A) u IDS(B)", kForced,
         [](T t, M a, M c) { return t.derived(join(a, c)) == join(t.derived(a), t.derived(c)); });

  b.add1("T2.16.i", "Thm 2.16(i): A is ICS iff A = I.CL(A)", kKnownFail,
         [](T t, M a) { return t.is_closed(a) == (t.closure(a) == a); });
  b.add1("T2.16.i-forward", "Thm 2.16(i) =>: A is ICS => A = I.CL(A)", kForced,
         [](T t, M a) { return !t.is_closed(a) || t.closure(a) == a; });
  b.add1("T2.16.i-converse", "Thm 2.16(i) <=: A = I.CL(A) => A is ICS", kKnownFail,
         [](T t, M a) { return t.closure(a) != a || t.is_closed(a); });
  b.add0("T2.16.ii", "Thm 2.16(ii): I.CL(0) = 0 and I.CL(X) = X", kForced,
         [](T t) { return t.closure(kEmpty).empty() && t.closure(t.full()) == t.full(); });
  b.add1("T2.16.iii", "Thm 2.16(iii): I.CL(I.CL(A)) = I.CL(A)", kForced,
         [](T t, M a) { return t.closure(t.closure(a)) == t.closure(a); });
  b.add2("T2.16.iv", "Thm 2.16(iv): A c B => I.CL(A) c I.CL(B)", kForced,
         [](T t, M a, M c) { return !sub(a, c) || sub(t.closure(a), t.closure(c)); });
  b.add2("T2.16.v", "Thm 2.16(v): I.CL(A n B) c I.CL(A) n I.CL(B)", kForced,
         [](T t, M a, M c) { return sub(t.closure(meet(a, c)), meet(t.closure(a), t.closure(c))); });

  b.add1("T2.17.i", "Thm 2.17(i): A is IOS iff A = I.INT(A)", kKnownFail,
         [](T t, M a) { return t.is_open(a) == (t.interior(a) == a); });
  b.add1("T2.17.i-forward", "Thm 2.17(i) =>: A is IOS => A = I.INT(A)", kForced,
         [](T t, M a) { return !t.is_open(a) || t.interior(a) == a; });
  b.add1("T2.17.i-converse", "Thm 2.17(i) <=: A = I.INT(A) => A is IOS", kKnownFail,
         [](T t, M a) { return t.interior(a) != a || t.is_open(a); });
  b.add0("T2.17.ii", "Thm 2.17(ii): I.INT(X) = X and I.INT(0) = 0", kForced,
         [](T t) { return t.interior(t.full()) == t.full() && t.interior(kEmpty).empty(); });
  b.add1("T2.17.iii", "Thm 2.17(iii): I.INT(I.INT(A)) = I.INT(A)", kForced,
         [](T t, M a) { return t.interior(t.interior(a)) == t.interior(a); });
  b.add2("T2.17.iv", "Thm 2.17(iv): A c B => I.INT(A) c I.INT(B)", kForced,
         [](T t, M a, M c) { return !sub(a, c) || sub(t.interior(a), t.interior(c)); });
  b.add2("T2.17.v", "Thm 2.17(v): I.INT(A n B) = I.INT(A) n I.INT(B)", kForced,
         [](T t, M a, M c) { return t.interior(meet(a, c)) == meet(t.interior(a), t.interior(c)); });

  b.add0("T2.18.i", "Thm 2.18(i): IEP(X) = 0 and IEP(0) = X", kForced,
         [](T t) { return t.exterior(t.full()).empty() && t.exterior(kEmpty) == t.full(); });
  b.add1("T2.18.ii", "Thm 2.18(ii): IEP(A) c X \\ A", kForced, [](T t, M a) { return sub(t.exterior(a), t.comp(a)); });
  b.add2("T2.18.iii", "Thm 2.18(iii): IEP(A u B) = IEP(A) n IEP(B)", kForced,
         [](T t, M a, M c) { return t.exterior(join(a, c)) == meet(t.exterior(a), t.exterior(c)); });
  b.add2("T2.18.iv", "Thm 2.18(iv): A c B => IEP(B) c IEP(A)", kForced,
         [](T t, M a, M c) { return !sub(a, c) || sub(t.exterior(c), t.exterior(a)); });
  // Fails already on the indiscrete two-point space with A = {a}, B = {b}.
  b.add2("T2.18.v", "Thm 2.18(v): IEP(A n B) c IEP(A) u IEP(B)", kCheck,
         [](T t, M a, M c) { return sub(t.exterior(meet(a, c)), join(t.exterior(a), t.exterior(c))); });

  b.add0("T2.19.i", "Thm 2.19(i): IBP(X) = IBP(0) = 0", kForced,
         [](T t) { return t.boundary(t.full()).empty() && t.boundary(kEmpty).empty(); });
  b.add2("T2.19.ii", "Thm 2.19(ii): IBP(A n B) = IBP(A) u IBP(B)", kKnownFail,
         [](T t, M a, M c) { return t.boundary(meet(a, c)) == join(t.boundary(a), t.boundary(c)); });

  b.add1("T2.20.i", "Thm 2.20(i): A c I.CL(A) -> IDS(A) c IDS(I.CL(A))", kForced,
         [](T t, M a) { return sub(t.derived(a), t.derived(t.closure(a))); });
  b.add1("T2.20.ii", "Thm 2.20(ii): I.INT(A) c A -> IDS(I.INT(A)) c IDS(A)", kForced,
         [](T t, M a) { return sub(t.derived(t.interior(a)), t.derived(a)); });
  b.add1("T2.20.iii", "Thm 2.20(iii): A is ICS => IDS(A) c A", kForced,
         [](T t, M a) { return !t.is_closed(a) || sub(t.derived(a), a); });
  b.add1("T2.20.iv", "Thm 2.20(iv): I.CL(A) = A u IDS(A)", kForced,
         [](T t, M a) { return t.closure(a) == join(a, t.derived(a)); });
  b.add1("T2.20.v", "Thm 2.20(v): IB(A) = I.CL(A) \\ I.INT(A)", kForced,
         [](T t, M a) { return t.boundary(a) == minus(t.closure(a), t.interior(a)); });
  b.add1("T2.20.vi", "Thm 2.20(vi): I.CL(A) = IBP(A) u I.INT(A)", kForced,
         [](T t, M a) { return t.closure(a) == join(t.boundary(a), t.interior(a)); });
  b.add1("T2.20.vii", "Thm 2.20(vii): IBP(A) c I.CL(A)", kForced,
         [](T t, M a) { return sub(t.boundary(a), t.closure(a)); });
  b.add1("T2.20.viii", "Thm 2.20(viii): I.INT(A) n IBP(A) = 0", kForced,
         [](T t, M a) { return disjoint(t.interior(a), t.boundary(a)); });

  b.add0("T-ICS-INT.i", "Thm (ICS axioms)(i): 0 and X are ICS", kForced,
         [](T t) { return t.is_closed(kEmpty) && t.is_closed(t.full()); });
  b.add2("T-ICS-INT", "Thm (ICS axioms)(ii): finite intersections of ICS are ICS", kKnownFail,
         [](T t, M c1, M c2) { return !(t.is_closed(c1) && t.is_closed(c2)) || t.is_closed(meet(c1, c2)); });
  b.last().coordinates = Coordinates::complement;
}

// The per-class families of claims, identical in shape for e, e* and a.
void add_class_claims(Builder& b, ClassKind k, const std::string& sym, int offset) {
  const ClassId open_tag{k, false};
  const ClassId closed_tag{k, true};
  auto id = [offset](int base, const std::string& item) {
    return "T3." + std::to_string(base + offset) + "." + item;
  };
  auto at = [offset](int base, const std::string& item, const std::string& formula) {
    return "Thm 3." + std::to_string(base + offset) + "(" + item + "): " + formula;
  };
  const std::string DS = "I." + sym + "DS";
  const std::string CL = "I." + sym + "CL";
  const std::string INT = "I." + sym + "INT";
  const std::string EP = "I." + sym + "EP";
  const std::string B = "I." + sym + "B";

  // derived sets
  b.add0(id(2, "i"), at(2, "i", DS + "(0) = 0"), kForced, [k](T t) { return t.f_derived(k, kEmpty).empty(); });
  b.add2(id(2, "ii"), at(2, "ii", "A c B => " + DS + "(A) c " + DS + "(B)"), kForced,
         [k](T t, M a, M c) { return !sub(a, c) || sub(t.f_derived(k, a), t.f_derived(k, c)); });
  b.add1(id(2, "iii"), at(2, "iii", "x in " + DS + "(A) => x in " + DS + "(A \\ {x})"), kForced, [k](T t, M a) {
    const M d = t.f_derived(k, a);
    for (unsigned x = 0; x < t.ground().size(); ++x) {
      if (d.contains(x) && !t.f_derived(k, a.without(x)).contains(x)) return false;
    }
    return true;
  });
  b.add2(id(2, "iv"), at(2, "iv", DS + "(A n B) c " + DS + "(A) n " + DS + "(B)"), kForced, [k](T t, M a, M c) {
    return sub(t.f_derived(k, meet(a, c)), meet(t.f_derived(k, a), t.f_derived(k, c)));
  });
  b.add2(id(2, "v"), at(2, "v", DS + "(A u B) = " + DS + "(A) u " + DS + "(B)"), kCheck, [k](T t, M a, M c) {
    return t.f_derived(k, join(a, c)) == join(t.f_derived(k, a), t.f_derived(k, c));
  });

  // closures
  b.add1(id(5, "i"), at(5, "i", "A is closed iff A = " + CL + "(A)"), kCheck,
         [k, closed_tag](T t, M a) { return t.member(closed_tag, a) == (t.f_closure(k, a) == a); });
  b.add1(id(5, "i-forward"), at(5, "i", "A is closed => A = " + CL + "(A)"), kForced,
         [k, closed_tag](T t, M a) { return !t.member(closed_tag, a) || t.f_closure(k, a) == a; });
  b.add1(id(5, "i-converse"), at(5, "i", "A = " + CL + "(A) => A is closed"), kCheck,
         [k, closed_tag](T t, M a) { return t.f_closure(k, a) != a || t.member(closed_tag, a); });
  b.add0(id(5, "ii"), at(5, "ii", CL + "(0) = 0 and " + CL + "(X) = X"), kForced,
         [k](T t) { return t.f_closure(k, kEmpty).empty() && t.f_closure(k, t.full()) == t.full(); });
  b.add1(id(5, "iii"), at(5, "iii", CL + "(" + CL + "(A)) = " + CL + "(A)"), kForced,
         [k](T t, M a) { return t.f_closure(k, t.f_closure(k, a)) == t.f_closure(k, a); });
  b.add2(id(5, "iv"), at(5, "iv", "A c B => " + CL + "(A) c " + CL + "(B)"), kForced,
         [k](T t, M a, M c) { return !sub(a, c) || sub(t.f_closure(k, a), t.f_closure(k, c)); });
  b.add2(id(5, "v"), at(5, "v", CL + "(A n B) c " + CL + "(A) n " + CL + "(B)"), kForced, [k](T t, M a, M c) {
    return sub(t.f_closure(k, meet(a, c)), meet(t.f_closure(k, a), t.f_closure(k, c)));
  });

  // interiors
  b.add1(id(8, "i"), at(8, "i", "A is open iff A = " + INT + "(A)"), kCheck,
         [k, open_tag](T t, M a) { return t.member(open_tag, a) == (t.f_interior(k, a) == a); });
  b.add1(id(8, "i-forward"), at(8, "i", "A is open => A = " + INT + "(A)"), kForced,
         [k, open_tag](T t, M a) { return !t.member(open_tag, a) || t.f_interior(k, a) == a; });
  b.add1(id(8, "i-converse"), at(8, "i", "A = " + INT + "(A) => A is open"), kCheck,
         [k, open_tag](T t, M a) { return t.f_interior(k, a) != a || t.member(open_tag, a); });
  b.add0(id(8, "ii"), at(8, "ii", INT + "(X) = X and " + INT + "(0) = 0"), kForced,
         [k](T t) { return t.f_interior(k, t.full()) == t.full() && t.f_interior(k, kEmpty).empty(); });
  b.add1(id(8, "iii"), at(8, "iii", INT + "(" + INT + "(A)) = " + INT + "(A)"), kForced,
         [k](T t, M a) { return t.f_interior(k, t.f_interior(k, a)) == t.f_interior(k, a); });
  b.add2(id(8, "iv"), at(8, "iv", "A c B => " + INT + "(A) c " + INT + "(B)"), kForced,
         [k](T t, M a, M c) { return !sub(a, c) || sub(t.f_interior(k, a), t.f_interior(k, c)); });
  b.add2(id(8, "v"), at(8, "v", INT + "(A n B) = " + INT + "(A) n " + INT + "(B)"), kCheck, [k](T t, M a, M c) {
    return t.f_interior(k, meet(a, c)) == meet(t.f_interior(k, a), t.f_interior(k, c));
  });

  // exteriors
  b.add0(id(11, "i"), at(11, "i", EP + "(X) = 0 and " + EP + "(0) = X"), kForced,
         [k](T t) { return t.f_exterior(k, t.full()).empty() && t.f_exterior(k, kEmpty) == t.full(); });
  b.add1(id(11, "ii"), at(11, "ii", EP + "(A) c X \\ A"), kForced,
         [k](T t, M a) { return sub(t.f_exterior(k, a), t.comp(a)); });
  b.add2(id(11, "iii"), at(11, "iii", EP + "(A u B) = " + EP + "(A) n " + EP + "(B)"), kCheck, [k](T t, M a, M c) {
    return t.f_exterior(k, join(a, c)) == meet(t.f_exterior(k, a), t.f_exterior(k, c));
  });
  b.add2(id(11, "iv"), at(11, "iv", "A c B => " + EP + "(B) c " + EP + "(A)"), kForced,
         [k](T t, M a, M c) { return !sub(a, c) || sub(t.f_exterior(k, c), t.f_exterior(k, a)); });
  b.add2(id(11, "v"), at(11, "v", EP + "(A n B) c " + EP + "(A) u " + EP + "(B)"), kCheck, [k](T t, M a, M c) {
    return sub(t.f_exterior(k, meet(a, c)), join(t.f_exterior(k, a), t.f_exterior(k, c)));
  });

  // boundaries
  b.add0(id(14, "i"), at(14, "i", B + "(X) = " + B + "(0) = 0"), kForced,
         [k](T t) { return t.f_boundary(k, t.full()).empty() && t.f_boundary(k, kEmpty).empty(); });
  b.add2(id(14, "ii"), at(14, "ii", B + "(A n B) = " + B + "(A) u " + B + "(B)"), kCheck, [k](T t, M a, M c) {
    return t.f_boundary(k, meet(a, c)) == join(t.f_boundary(k, a), t.f_boundary(k, c));
  });

  // relations between the operators
  b.add1(id(17, "i"), at(17, "i", DS + "(A) c " + DS + "(" + CL + "(A))"), kForced,
         [k](T t, M a) { return sub(t.f_derived(k, a), t.f_derived(k, t.f_closure(k, a))); });
  b.add1(id(17, "ii"), at(17, "ii", DS + "(" + INT + "(A)) c " + DS + "(A)"), kForced,
         [k](T t, M a) { return sub(t.f_derived(k, t.f_interior(k, a)), t.f_derived(k, a)); });
  b.add1(id(17, "iii"), at(17, "iii", "A is ICS => " + DS + "(A) c A"), kCheck,
         [k](T t, M a) { return !t.is_closed(a) || sub(t.f_derived(k, a), a); });
  b.add1(id(17, "iv"), at(17, "iv", CL + "(A) = A u " + DS + "(A)"), kForced,
         [k](T t, M a) { return t.f_closure(k, a) == join(a, t.f_derived(k, a)); });
  b.add1(id(17, "v"), at(17, "v", B + "(A) = " + CL + "(A) \\ " + INT + "(A)"), kForced,
         [k](T t, M a) { return t.f_boundary(k, a) == minus(t.f_closure(k, a), t.f_interior(k, a)); });
  b.add1(id(17, "vi"), at(17, "vi", CL + "(A) = " + B + "(A) u " + INT + "(A)"), kForced,
         [k](T t, M a) { return t.f_closure(k, a) == join(t.f_boundary(k, a), t.f_interior(k, a)); });
  b.add1(id(17, "vii"), at(17, "vii", B + "(A) c " + CL + "(A)"), kForced,
         [k](T t, M a) { return sub(t.f_boundary(k, a), t.f_closure(k, a)); });
  b.add1(id(17, "viii"), at(17, "viii", INT + "(A) n " + B + "(A) = 0"), kForced,
         [k](T t, M a) { return disjoint(t.f_interior(k, a), t.f_boundary(k, a)); });
}

constexpr ClassKind kE = ClassKind::e_open;
constexpr ClassKind kEStar = ClassKind::e_star_open;
constexpr ClassKind kDP = ClassKind::delta_pre_open;
constexpr ClassKind kDS = ClassKind::delta_semi_open;

bool in(T t, ClassKind k, M a) { return t.member(ClassId{k, false}, a); }
bool in_closed(T t, ClassKind k, M a) { return t.member(ClassId{k, true}, a); }

// cl(int_delta(A)) and int(cl_delta(A)), the two halves of the e-open condition.
M cl_dint(T t, M a) { return t.closure(t.delta_interior(a)); }
M int_dcl(T t, M a) { return t.interior(t.delta_closure(a)); }

// The characterization results about e, e*, a and the delta classes.
void add_characterizations(Builder& b) {
  b.add1("L-δP-δS.i-cl", "Thm l1(i): I.dPCL(A) ) A u I.CL(I.INT_d(A))", kForced,
         [](T t, M a) { return sub(join(a, cl_dint(t, a)), t.f_closure(kDP, a)); });
  b.last().needs_delta_duality = true;
  b.add1("L-δP-δS.i-int", "Thm l1(i): I.dPINT(A) c A n I.INT(I.CL_d(A))", kForced,
         [](T t, M a) { return sub(t.f_interior(kDP, a), meet(a, int_dcl(t, a))); });
  b.add1("L-δP-δS.ii-cl", "Thm l1(ii): I.dSCL(A) ) A u I.INT(I.CL_d(A))", kForced,
         [](T t, M a) { return sub(join(a, int_dcl(t, a)), t.f_closure(kDS, a)); });
  b.last().needs_delta_duality = true;
  b.add1("L-δP-δS.ii-int", "Thm l1(ii): I.dSINT(A) c A n I.CL(I.INT_d(A))", kForced,
         [](T t, M a) { return sub(t.f_interior(kDS, a), meet(a, cl_dint(t, a))); });

  b.add1("P-E1.i", "Prop (e-open)(i): A e-open and I.INT_d(A) = 0 => A d-pre-open", kForced,
         [](T t, M a) { return !(in(t, kE, a) && t.delta_interior(a).empty()) || in(t, kDP, a); });
  b.add1("P-E1.ii", "Prop (e-open)(ii): A e-open and I.CL_d(A) = 0 => A d-semi-open", kCheck,
         [](T t, M a) { return !(in(t, kE, a) && t.delta_closure(a).empty()) || in(t, kDS, a); });
  b.add1("P-E1.iii", "Prop (e-open)(iii): A e-open and d-closed => A d-semi-open", kCheck, [](T t, M a) {
    return !(in(t, kE, a) && in_closed(t, ClassKind::delta_open, a)) || in(t, kDS, a);
  });
  b.add1("P-E1.iv", "Prop (e-open)(iv): A d-semi-open and d-closed => A e-open", kCheck, [](T t, M a) {
    return !(in(t, kDS, a) && in_closed(t, ClassKind::delta_open, a)) || in(t, kE, a);
  });

  auto echar = [](T t, M a) { return a == join(t.f_interior(kDP, a), t.f_interior(kDS, a)); };
  b.add1("TH-ECHAR", "Thm (e-open char.): A e-open iff A = I.dPINT(A) u I.dSINT(A)", kCheck,
         [echar](T t, M a) { return in(t, kE, a) == echar(t, a); });
  b.add1("TH-ECHAR-forward", "Thm (e-open char.) =>", kCheck,
         [echar](T t, M a) { return !in(t, kE, a) || echar(t, a); });
  b.add1("TH-ECHAR-converse", "Thm (e-open char.) <=", kCheck,
         [echar](T t, M a) { return !echar(t, a) || in(t, kE, a); });

  b.add1("P-ECL-COMPL.i-cl", "Prop (eCL)(i): I.eCL(X \\ A) = X \\ I.eINT(A)", kCheck,
         [](T t, M a) { return t.f_closure(kE, t.comp(a)) == t.comp(t.f_interior(kE, a)); });
  b.add1("P-ECL-COMPL.i-int", "Prop (eCL)(i): I.eINT(X \\ A) = X \\ I.eCL(A)", kCheck,
         [](T t, M a) { return t.f_interior(kE, t.comp(a)) == t.comp(t.f_closure(kE, a)); });
  b.add2("P-ECL-COMPL.ii-cl", "Prop (eCL)(ii): I.eCL(A u B) ) I.eCL(A) u I.eCL(B)", kCheck, [](T t, M a, M c) {
    return sub(join(t.f_closure(kE, a), t.f_closure(kE, c)), t.f_closure(kE, join(a, c)));
  });
  b.add2("P-ECL-COMPL.ii-int", "Prop (eCL)(ii): I.eINT(A u B) ) I.eINT(A) u I.eINT(B)", kCheck, [](T t, M a, M c) {
    return sub(join(t.f_interior(kE, a), t.f_interior(kE, c)), t.f_interior(kE, join(a, c)));
  });
  b.add2("P-ECL-COMPL.iii-cl", "Prop (eCL)(iii): I.eCL(A n B) c I.eCL(A) n I.eCL(B)", kCheck, [](T t, M a, M c) {
    return sub(t.f_closure(kE, meet(a, c)), meet(t.f_closure(kE, a), t.f_closure(kE, c)));
  });
  b.add2("P-ECL-COMPL.iii-int", "Prop (eCL)(iii): I.eINT(A n B) c I.eINT(A) n I.eINT(B)", kCheck,
         [](T t, M a, M c) {
           return sub(t.f_interior(kE, meet(a, c)), meet(t.f_interior(kE, a), t.f_interior(kE, c)));
         });

  b.add1("P-ECL-BOUND.i", "Prop p1(i): I.eCL(A) ) I.CL(I.INT_d(A)) n I.INT(I.CL_d(A))", kCheck,
         [](T t, M a) { return sub(meet(cl_dint(t, a), int_dcl(t, a)), t.f_closure(kE, a)); });
  b.add1("P-ECL-BOUND.ii", "Prop p1(ii): I.eINT(A) c I.CL(I.INT_d(A)) u I.INT(I.CL_d(A))", kCheck,
         [](T t, M a) { return sub(t.f_interior(kE, a), join(cl_dint(t, a), int_dcl(t, a))); });

  b.add1("TH-ECL-MEET", "Thm (eCL meet): I.eCL(A) = I.dPCL(A) n I.dSCL(A)", kCheck,
         [](T t, M a) { return t.f_closure(kE, a) == meet(t.f_closure(kDP, a), t.f_closure(kDS, a)); });

  b.add1("L-δS-ID.1-int", "Lemma (dS identities)(1): I.dSINT(A) = A n I.CL(I.INT_d(A))", kCheck,
         [](T t, M a) { return t.f_interior(kDS, a) == meet(a, cl_dint(t, a)); });
  b.add1("L-δS-ID.1-cl", "Lemma (dS identities)(1): I.dSCL(A) = A u I.INT(I.CL_d(A))", kCheck,
         [](T t, M a) { return t.f_closure(kDS, a) == join(a, int_dcl(t, a)); });
  b.add1("L-δS-ID.2", "Lemma (dS identities)(2): I.dPCL(A) = A u I.CL(I.INT_d(A))", kCheck,
         [](T t, M a) { return t.f_closure(kDP, a) == join(a, cl_dint(t, a)); });
  b.add1("L-δS-ID.3-cl", "Lemma (dS identities)(3): I.dSCL(I.dSINT(A)) = I.dSINT(A) u I.INT(I.CL(I.INT_d(A)))",
         kCheck, [](T t, M a) {
           const M sint = t.f_interior(kDS, a);
           return t.f_closure(kDS, sint) == join(sint, t.interior(cl_dint(t, a)));
         });
  b.add1("L-δS-ID.3-int", "Lemma (dS identities)(3): I.dSINT(I.dSCL(A)) = I.dSCL(A) n I.CL(I.INT(I.CL_d(A)))",
         kCheck, [](T t, M a) {
           const M scl = t.f_closure(kDS, a);
           return t.f_interior(kDS, scl) == meet(scl, t.closure(int_dcl(t, a)));
         });
  b.add1("L-δS-ID.4", "Lemma (dS identities)(4): I.CL_d(I.dSINT(A)) = I.CL(I.INT_d(A))", kCheck,
         [](T t, M a) { return t.delta_closure(t.f_interior(kDS, a)) == cl_dint(t, a); });
  b.add1("L-δS-ID.5", "Lemma (dS identities)(5): I.dSCL(I.INT_d(A)) = I.INT(I.CL(I.INT_d(A)))", kCheck,
         [](T t, M a) { return t.f_closure(kDS, t.delta_interior(a)) == t.interior(cl_dint(t, a)); });

  b.add1("L-ESTAR.1-literal", "Lemma (e*)(1) as printed: I.e*CL(A) is e*-open", kCheck,
         [](T t, M a) { return in(t, kEStar, t.f_closure(kEStar, a)); });
  b.add1("L-ESTAR.1-corrected", "Lemma (e*)(1) closed reading: I.e*CL(A) is e*-closed", kCheck,
         [](T t, M a) { return in_closed(t, kEStar, t.f_closure(kEStar, a)); });
  b.add1("L-ESTAR.2", "Lemma (e*)(2): X \\ I.e*CL(A) = I.e*INT(X \\ A)", kCheck,
         [](T t, M a) { return t.comp(t.f_closure(kEStar, a)) == t.f_interior(kEStar, t.comp(a)); });

  b.add1("TH-ESTAR.i", "Thm (e* char.)(i): A e*-open iff A = A n I.CL(I.INT(I.CL_d(A)))", kCheck,
         [](T t, M a) { return in(t, kEStar, a) == (a == meet(a, t.closure(int_dcl(t, a)))); });
  b.add1("TH-ESTAR.ii", "Thm (e* char.)(ii): A e*-closed iff A = A u I.INT(I.CL(I.INT_d(A)))", kCheck,
         [](T t, M a) { return in_closed(t, kEStar, a) == (a == join(a, t.interior(cl_dint(t, a)))); });
  b.add1("TH-ESTAR.iii", "Thm (e* char.)(iii): I.e*CL(A) = A u I.INT(I.CL(I.INT_d(A)))", kCheck,
         [](T t, M a) { return t.f_closure(kEStar, a) == join(a, t.interior(cl_dint(t, a))); });
  b.add1("TH-ESTAR.iv", "Thm (e* char.)(iv): I.e*INT(A) = A n I.CL(I.INT(I.CL_d(A)))", kCheck,
         [](T t, M a) { return t.f_interior(kEStar, a) == meet(a, t.closure(int_dcl(t, a))); });

  auto ros_i = [](T t, M a) { return in(t, ClassKind::regular_open, a); };
  auto ros_ii = [](T t, M a) { return in(t, ClassKind::a_open, a) && in_closed(t, kEStar, a); };
  auto ros_iii = [](T t, M a) { return in(t, kDP, a) && in_closed(t, kDS, a); };
  b.add1("TH-ROS-EQ", "Thm (ROS equivalence): ROS <=> (a-open and e*-closed) <=> (d-pre-open and d-semi-closed)",
         kCheck, [=](T t, M a) { return ros_i(t, a) == ros_ii(t, a) && ros_i(t, a) == ros_iii(t, a); });
  b.add1("TH-ROS-EQ.i-ii", "Thm (ROS equivalence) (i) => (ii)", kCheck,
         [=](T t, M a) { return !ros_i(t, a) || ros_ii(t, a); });
  b.add1("TH-ROS-EQ.ii-i", "Thm (ROS equivalence) (ii) => (i)", kCheck,
         [=](T t, M a) { return !ros_ii(t, a) || ros_i(t, a); });
  b.add1("TH-ROS-EQ.i-iii", "Thm (ROS equivalence) (i) => (iii)", kCheck,
         [=](T t, M a) { return !ros_i(t, a) || ros_iii(t, a); });
  b.add1("TH-ROS-EQ.iii-i", "Thm (ROS equivalence) (iii) => (i)", kCheck,
         [=](T t, M a) { return !ros_iii(t, a) || ros_i(t, a); });

  auto dsos_rhs = [](T t, M a) { return in(t, kEStar, a) && t.delta_interior(t.delta_frontier(a)).empty(); };
  b.add1("TH-δSOS-ESTAR", "Thm (dSOS char.): A d-semi-open iff A e*-open and I.INT_d(I.dFR(A)) = 0", kCheck,
         [=](T t, M a) { return in(t, kDS, a) == dsos_rhs(t, a); });
  b.add1("TH-δSOS-ESTAR-forward", "Thm (dSOS char.) =>", kCheck,
         [=](T t, M a) { return !in(t, kDS, a) || dsos_rhs(t, a); });
  b.add1("TH-δSOS-ESTAR-converse", "Thm (dSOS char.) <=", kCheck,
         [=](T t, M a) { return !dsos_rhs(t, a) || in(t, kDS, a); });

  b.add0("TH-AO-MEET", "Thm (aO meet): I.aO(X) = I.dSO(X) n I.dPO(X)", kCheck, [](T t) {
    for (std::uint32_t bits = 0; bits < t.subset_count(); ++bits) {
      const M a(bits);
      if (in(t, ClassKind::a_open, a) != (in(t, kDS, a) && in(t, kDP, a))) return false;
    }
    return true;
  });
}

// Implications between classes that follow directly from the definitions.
void add_forced_implications(Builder& b) {
  const std::pair<ClassKind, ClassKind> pairs[] = {
      {ClassKind::open, ClassKind::pre_open},
      {ClassKind::open, ClassKind::semi_open},
      {ClassKind::delta_pre_open, ClassKind::e_open},
      {ClassKind::delta_semi_open, ClassKind::e_open},
      {ClassKind::a_open, ClassKind::delta_semi_open},
      {ClassKind::pre_open, ClassKind::beta_open},
  };
  for (const auto& [from, to] : pairs) {
    const ClassId f{from, false};
    const ClassId g{to, false};
    b.add1("IMP:" + f.name() + "=>" + g.name(), "Def 3.3: every " + f.name() + " set is " + g.name(), kForced,
           [f, g](T t, M a) { return !t.member(f, a) || t.member(g, a); });
  }
}

std::vector<TheoremEntry> build_registry() {
  Builder b;
  add_space_claims(b);
  add_class_claims(b, ClassKind::e_open, "e", 0);
  add_class_claims(b, ClassKind::e_star_open, "e*", 1);
  add_class_claims(b, ClassKind::a_open, "a", 2);
  add_characterizations(b);
  add_forced_implications(b);
  return b.take();
}

struct Candidate {
  unsigned weight;
  WitnessTuple coords;
};

bool witness_less(const Candidate& x, const Candidate& y) {
  if (x.weight != y.weight) return x.weight < y.weight;
  return x.coords < y.coords;
}

}  // namespace

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::forced:
      return "FORCED";
    case Expectation::check:
      return "CHECK";
    case Expectation::known_fail:
      return "KNOWN-FAIL";
  }
  return "?";
}

const std::vector<TheoremEntry>& registry() {
  static const std::vector<TheoremEntry> entries = build_registry();
  return entries;
}

const TheoremEntry* find_theorem(std::string_view id) {
  static const auto index = [] {
    std::unordered_map<std::string_view, const TheoremEntry*> m;
    for (const auto& e : registry()) m.emplace(e.id, &e);
    return m;
  }();
  const auto it = index.find(id);
  return it == index.end() ? nullptr : it->second;
}

TheoremVerdict check(const SpaceTables& t, const TheoremEntry& entry, const CheckOptions& opts) {
  TheoremVerdict v{entry.id, t.space(), true, {}, 0};
  std::vector<Candidate> failing;
  WitnessTuple args(entry.arity);
  WitnessTuple coords(entry.arity);

  auto visit = [&] {
    for (unsigned i = 0; i < entry.arity; ++i) {
      args[i] = entry.coordinates == Coordinates::complement ? t.comp(coords[i]) : coords[i];
    }
    ++v.checked_count;
    if (!entry.predicate(t, args)) {
      unsigned weight = 0;
      for (auto c : coords) weight += c.size();
      failing.push_back({weight, coords});
    }
  };

  const std::uint32_t count = t.subset_count();
  switch (entry.arity) {
    case 0:
      visit();
      break;
    case 1:
      for (std::uint32_t a = 0; a < count; ++a) {
        coords[0] = M(a);
        visit();
      }
      break;
    case 2:
      for (std::uint32_t a = 1; a < count; ++a) {
        for (std::uint32_t c = 1; c < count; ++c) {
          coords[0] = M(a);
          coords[1] = M(c);
          visit();
        }
      }
      break;
    default:
      throw std::logic_error("unsupported arity for " + entry.id);
  }

  if (!failing.empty()) {
    v.passed = false;
    const auto keep = std::min(std::max<std::size_t>(opts.max_witnesses, 1), failing.size());
    std::partial_sort(failing.begin(), failing.begin() + static_cast<std::ptrdiff_t>(keep), failing.end(),
                      witness_less);
    failing.resize(keep);
    for (auto& f : failing) {
      if (entry.coordinates == Coordinates::complement) {
        for (auto& c : f.coords) c = t.comp(c);
      }
      v.witnesses.push_back(std::move(f.coords));
    }
  }
  return v;
}

TheoremVerdict check(const InfraSpace& s, const TheoremEntry& entry, DeltaReading reading, const CheckOptions& opts) {
  return check(SpaceTables(s, reading), entry, opts);
}

namespace {

std::string describe_violation(const TheoremVerdict& v) {
  std::string out = "FORCED claim " + v.theorem_id + " failed on space " + format_family(v.space.ground(), v.space.opens());
  if (!v.witnesses.empty()) {
    out += " with witness (";
    for (std::size_t i = 0; i < v.witnesses.front().size(); ++i) {
      if (i != 0) out += ", ";
      out += v.space.ground().format(v.witnesses.front()[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace

ForcedInvariantViolated::ForcedInvariantViolated(TheoremVerdict verdict)
    : std::runtime_error(describe_violation(verdict)), verdict_(std::move(verdict)) {}

CheckReport check_all(std::span<const InfraSpace> spaces, const CheckAllOptions& opts) {
  std::vector<const TheoremEntry*> selected = opts.theorems;
  if (selected.empty()) {
    for (const auto& e : registry()) selected.push_back(&e);
  }

  struct SpaceResult {
    std::vector<std::uint64_t> checked;        // per selected theorem
    std::vector<TheoremVerdict> verdicts;      // all (keep_verdicts) or failing only
  };
  std::vector<SpaceResult> results(spaces.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spaces.size(); i = next++) {
      const SpaceTables tables(spaces[i], opts.reading);
      auto& r = results[i];
      r.checked.reserve(selected.size());
      for (const auto* e : selected) {
        auto v = check(tables, *e, opts.check);
        r.checked.push_back(v.checked_count);
        if (opts.keep_verdicts || !v.passed) r.verdicts.push_back(std::move(v));
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(spaces.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CheckReport report;
  report.space_count = spaces.size();
  std::unordered_map<std::string_view, std::size_t> slot;
  for (const auto* e : selected) {
    slot.emplace(e->id, report.theorems.size());
    TheoremAggregate agg;
    agg.theorem_id = e->id;
    agg.expectation = e->expectation_for(opts.reading);
    report.theorems.push_back(std::move(agg));
  }

  for (std::size_t i = 0; i < spaces.size(); ++i) {
    auto& r = results[i];
    std::size_t failing_seen = 0;
    for (std::size_t k = 0; k < selected.size(); ++k) {
      report.theorems[k].instances += r.checked[k];
    }
    for (auto& v : r.verdicts) {
      auto& agg = report.theorems[slot.at(v.theorem_id)];
      if (v.passed) continue;
      ++failing_seen;
      if (!agg.first_failure) {
        agg.first_failing_space = i;
        agg.first_failure = v;
      }
      if (agg.expectation == Expectation::forced && opts.throw_on_forced) {
        throw ForcedInvariantViolated(v);
      }
    }
    // every selected theorem not failing on this space passed
    for (auto& agg : report.theorems) ++agg.spaces_passed;
    for (const auto& v : r.verdicts) {
      if (!v.passed) {
        auto& agg = report.theorems[slot.at(v.theorem_id)];
        --agg.spaces_passed;
        ++agg.spaces_failed;
      }
    }
    (void)failing_seen;
    if (opts.keep_verdicts) {
      for (auto& v : r.verdicts) report.verdicts.push_back(std::move(v));
    }
    r = SpaceResult{};
  }
  return report;
}

}  // namespace infratop
