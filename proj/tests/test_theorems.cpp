#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "infratop/theorems.hpp"

using namespace infratop;
using fixtures::set;

namespace {

const TheoremEntry& entry(std::string_view id) {
  const auto* e = find_theorem(id);
  REQUIRE_MESSAGE(e != nullptr, id);
  return *e;
}

WitnessTuple tuple(const InfraSpace& s, std::initializer_list<std::string_view> sets) {
  WitnessTuple out;
  for (auto t : sets) out.push_back(set(s, t));
  return out;
}

const TheoremAggregate& aggregate(const CheckReport& r, std::string_view id) {
  auto it = std::find_if(r.theorems.begin(), r.theorems.end(), [&](const auto& a) { return a.theorem_id == id; });
  REQUIRE(it != r.theorems.end());
  return *it;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = registry();
  CHECK(reg.size() >= 90);
  std::set<std::string> ids;
  for (const auto& e : reg) {
    CHECK_MESSAGE(ids.insert(e.id).second, e.id);
    CHECK_FALSE(e.anchor.empty());
    CHECK(e.arity <= 2);
    CHECK(static_cast<bool>(e.predicate));
  }
  CHECK(entry("T2.20.iv").arity == 1);
  CHECK(entry("T2.19.ii").arity == 2);
  CHECK(entry("TH-AO-MEET").arity == 0);
  CHECK(entry("T2.16.i").expectation == Expectation::known_fail);
  CHECK(entry("T2.16.i-forward").expectation == Expectation::forced);
  CHECK(entry("T-ICS-INT").coordinates == Coordinates::complement);
  CHECK(find_theorem("T9.99") == nullptr);
  CHECK(to_string(Expectation::forced) == "FORCED");
  CHECK(to_string(Expectation::known_fail) == "KNOWN-FAIL");
}

TEST_CASE("single-space checks count their instances") {
  const auto s = fixtures::ex41();
  const auto v = check(s, entry("T2.20.v"));
  CHECK(v.passed);
  CHECK(v.witnesses.empty());
  CHECK(v.checked_count == 16);
  CHECK(check(s, entry("TH-AO-MEET")).checked_count == 1);
  CHECK(check(s, entry("T2.19.ii")).checked_count == 15 * 15);
}

TEST_CASE("pinned minimal counterexamples") {
  const auto s3 = fixtures::s3();
  CHECK(check(s3, entry("T2.16.i")).witnesses.front() == tuple(s3, {"c"}));
  CHECK(check(s3, entry("T2.17.i")).witnesses.front() == tuple(s3, {"a,b"}));
  CHECK(check(s3, entry("T2.16.i-converse")).witnesses.front() == tuple(s3, {"c"}));
  CHECK(check(s3, entry("T2.17.i-converse")).witnesses.front() == tuple(s3, {"a,b"}));
  CHECK(check(s3, entry("T2.16.i-forward")).passed);
  CHECK(check(s3, entry("T2.17.i-forward")).passed);
  CHECK(check(s3, entry("T-ICS-INT")).witnesses.front() == tuple(s3, {"b,c", "a,c"}));
  const auto s = fixtures::ex41();
  const auto v = check(s, entry("T2.19.ii"));
  CHECK_FALSE(v.passed);
  CHECK(v.witnesses.front() == tuple(s, {"a", "b"}));
  const auto i = fixtures::indiscrete2();
  CHECK(check(i, entry("T2.18.v")).witnesses.front() == tuple(i, {"a", "b"}));
}

TEST_CASE("witness lists are minimal first and capped") {
  const auto s = fixtures::ex41();
  const auto v = check(s, entry("T2.19.ii"), DeltaReading::dual, CheckOptions{2});
  REQUIRE(v.witnesses.size() == 2);
  auto weight = [](const WitnessTuple& t) {
    unsigned w = 0;
    for (auto m : t) w += m.size();
    return w;
  };
  CHECK(weight(v.witnesses[0]) <= weight(v.witnesses[1]));
  CHECK(check(s, entry("T2.19.ii"), DeltaReading::dual, CheckOptions{0}).witnesses.size() == 1);
}

TEST_CASE("check_all over every space on three points") {
  const auto spaces = fixtures::spaces_on(3);
  REQUIRE(spaces.size() == 45);
  CheckAllOptions opts;
  opts.theorems = {&entry("T2.20.iv"), &entry("T-ICS-INT"), &entry("TH-AO-MEET")};
  const auto r = check_all(spaces, opts);
  CHECK(r.space_count == 45);
  CHECK(aggregate(r, "T2.20.iv").spaces_passed == 45);
  CHECK(aggregate(r, "T2.20.iv").instances == 45 * 8);
  const auto& ics = aggregate(r, "T-ICS-INT");
  CHECK(ics.spaces_failed > 0);
  CHECK(ics.expectation_met());
  REQUIRE(ics.first_failure.has_value());
  CHECK_FALSE(ics.first_failure->passed);
  CHECK(aggregate(r, "TH-AO-MEET").holds());
}

TEST_CASE("check_all is independent of the job count") {
  const auto& spaces = fixtures::spaces_on(3);
  CheckAllOptions a;
  a.keep_verdicts = true;
  CheckAllOptions b = a;
  b.jobs = 4;
  const auto ra = check_all(spaces, a);
  const auto rb = check_all(spaces, b);
  REQUIRE(ra.theorems.size() == rb.theorems.size());
  for (std::size_t i = 0; i < ra.theorems.size(); ++i) {
    CHECK(ra.theorems[i].theorem_id == rb.theorems[i].theorem_id);
    CHECK(ra.theorems[i].spaces_failed == rb.theorems[i].spaces_failed);
    CHECK(ra.theorems[i].instances == rb.theorems[i].instances);
    CHECK(ra.theorems[i].first_failing_space == rb.theorems[i].first_failing_space);
  }
  REQUIRE(ra.verdicts.size() == rb.verdicts.size());
  CHECK(ra.verdicts.size() == spaces.size() * registry().size());
  for (std::size_t i = 0; i < ra.verdicts.size(); ++i) {
    CHECK(ra.verdicts[i].theorem_id == rb.verdicts[i].theorem_id);
    CHECK(ra.verdicts[i].witnesses == rb.verdicts[i].witnesses);
  }
}

TEST_CASE("a failing forced entry raises ForcedInvariantViolated") {
  TheoremEntry bogus;
  bogus.id = "BOGUS";
  bogus.anchor = "no two distinct points";
  bogus.arity = 0;
  bogus.expectation = Expectation::forced;
  bogus.predicate = [](const SpaceTables& t, std::span<const SubsetMask>) { return t.ground().size() < 2; };
  const auto& spaces = fixtures::small_universe();
  CheckAllOptions opts;
  opts.theorems = {&bogus};
  opts.jobs = 3;
  try {
    (void)check_all(spaces, opts);
    FAIL("expected ForcedInvariantViolated");
  } catch (const ForcedInvariantViolated& e) {
    CHECK(e.verdict().theorem_id == "BOGUS");
    CHECK(e.verdict().space.size() == 2);
  }
  opts.throw_on_forced = false;
  const auto r = check_all(spaces, opts);
  CHECK(r.theorems[0].spaces_passed == 1);
  CHECK_FALSE(r.theorems[0].expectation_met());
  CHECK(r.theorems[0].first_failing_space == std::size_t{1});
}

TEST_CASE("every expectation is met on all spaces with at most four points") {
  for (auto reading : {DeltaReading::dual, DeltaReading::literal}) {
    CheckAllOptions opts;
    opts.reading = reading;
    opts.jobs = 2;
    const auto r = check_all(fixtures::small_universe(), opts);
    CHECK(r.space_count == 1 + 4 + 45 + 2271);
    for (const auto& a : r.theorems) {
      INFO(a.theorem_id, " reading=", reading == DeltaReading::dual ? "dual" : "literal");
      CHECK(a.expectation_met());
      CHECK(a.expectation == entry(a.theorem_id).expectation_for(reading));
    }
  }
}

TEST_CASE("literal reading degrades duality-dependent forced entries") {
  bool any = false;
  for (const auto& e : registry()) {
    if (e.expectation == Expectation::forced && e.needs_delta_duality) {
      any = true;
      CHECK(e.expectation_for(DeltaReading::literal) == Expectation::check);
      CHECK(e.expectation_for(DeltaReading::dual) == Expectation::forced);
    }
  }
  CHECK(any);
}

TEST_CASE("cross-reference covers every numbered item and every registry id") {
  const auto& xref = cross_reference();
  std::set<std::string> referenced;
  std::set<std::string> items;
  for (const auto& row : xref) {
    INFO(row.item);
    CHECK(items.insert(row.item).second);
    CHECK_FALSE(row.topic.empty());
    CHECK((row.registry.empty() != row.note.empty() || !row.registry.empty()));
    for (const auto& p : row.registry) {
      const auto ids = resolve_pattern(p);
      CHECK_MESSAGE(!ids.empty(), p);
      referenced.insert(ids.begin(), ids.end());
    }
  }
  for (const auto& e : registry()) CHECK_MESSAGE(referenced.count(e.id) == 1, e.id);

  for (int k = 15; k <= 20; ++k) CHECK(items.count("Thm 2." + std::to_string(k)) == 1);
  for (int k = 2; k <= 19; ++k) CHECK(items.count("Thm 3." + std::to_string(k)) == 1);
  for (int k = 1; k <= 10; ++k) CHECK(items.count("Def 3." + std::to_string(k)) == 1);
  CHECK(resolve_pattern("T3.2.*").size() >= 5);
  CHECK(resolve_pattern("nothing-like-this").empty());
}
