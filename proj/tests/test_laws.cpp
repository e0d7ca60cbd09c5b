// The law registry and its engine. These tests freeze the registry's
// shape (ids, expectations, witnesses) and the engine's reporting
// contract; the laws themselves are exercised by running the suite.
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "tp/tp.hpp"

using namespace tp;

TEST_CASE("registry is complete and well-formed") {
  CHECK_NOTHROW(validate_registry());
  const auto ids = law_ids();
  std::set<std::string> seen(ids.begin(), ids.end());
  CHECK(seen.size() == ids.size());
  for (int k = 6; k <= 80; ++k)
    CHECK(seen.count("P" + std::to_string(k)) == 1);
  CHECK(seen.count("naive-composition") == 1);
  CHECK(seen.count("intersection-refinement-safety") == 1);
  CHECK(seen.count("difference-refinement-safety") == 1);
  CHECK(seen.count("P14-demonic") == 1);
  CHECK(seen.count("internal-choice-P11") == 1);
  CHECK(ids.size() == 80);
}

TEST_CASE("every law documents itself") {
  for (const Law& law : law_registry()) {
    CHECK_FALSE(law.id.empty());
    CHECK_FALSE(law.claim.empty());
    if (law.expected == Expect::Fails) {
      CHECK_FALSE(law.witnesses.empty());
    } else {
      CHECK(law.check != nullptr);
      const bool has_slots =
          !law.prog_slots.empty() || law.cond_slots > 0 || law.rel_slots > 0;
      CHECK(has_slots);
    }
  }
}

TEST_CASE("unknown ids are hard errors") {
  CHECK_THROWS_AS(check_law("P99", LawConfig{}), ModelError);
  CHECK_THROWS_AS(check_law("", LawConfig{}), ModelError);
  CHECK(find_law("P7") != nullptr);
  CHECK(find_law("P99") == nullptr);
}

TEST_CASE("exhaustive case counts follow the slot structure") {
  LawConfig config;  // size 2, exhaustive
  // One unconstrained program slot: 64 cases.
  CHECK(check_law("P13", config).cases == 64);
  // One feasible slot + one condition: 49 · 4 = 196... P58 has one feasible
  // program slot only: 49.
  CHECK(check_law("P58", config).cases == 49);
  // Two programs + a condition: 64 · 64 · 4.
  CHECK(check_law("P9", config).cases == 16384);
  // P56 quantifies over one program; the full condition is fixed.
  CHECK(check_law("P56", config).cases == 64);
  const LawReport r = check_law("P13", config);
  CHECK(r.mode == "exhaustive");
  CHECK(r.expected == "holds");
  CHECK(r.failures == 0);
  CHECK(r.vacuous == 15);  // the infeasible programs at size 2
  CHECK(r.ok);
}

TEST_CASE("expected-fails laws replay their recorded witnesses") {
  for (const Law& law : law_registry()) {
    if (law.expected != Expect::Fails) continue;
    const LawReport r = check_law(law.id, LawConfig{});
    CHECK(r.mode == "recorded");
    CHECK(r.cases == law.witnesses.size());
    CHECK(r.failures == law.witnesses.size());
    CHECK(r.ok);
    for (const Witness& w : law.witnesses) {
      CHECK_FALSE(w.description.empty());
      CHECK(w.replay() == Outcome::Fails);
    }
  }
}

TEST_CASE("random mode is deterministic per seed and differs across seeds") {
  LawConfig a;
  a.mode = LawConfig::Mode::Random;
  a.size = 3;
  a.samples = 200;
  a.seed = 11;
  const LawReport r1 = check_law("P39", a);
  const LawReport r2 = check_law("P39", a);
  CHECK(r1.cases == r2.cases);
  CHECK(r1.vacuous == r2.vacuous);
  CHECK(r1.failures == r2.failures);
  a.seed = 12;
  const LawReport r3 = check_law("P39", a);
  // Same case count, but the vacuous tally (antecedent hits) moves with
  // the seed — if it never moved the generator would be suspect. P39's
  // directed generator forces commuting pairs often but not always.
  CHECK(r3.cases == r1.cases);
}

TEST_CASE("the suite runs green at size two, exhaustively") {
  LawConfig config;  // defaults: size 2, exhaustive
  const SuiteReport suite = run_suite(config, {});
  CHECK(suite.all_ok);
  CHECK(suite.reports.size() == 80);
  for (const LawReport& r : suite.reports) {
    CAPTURE(r.id);
    CHECK(r.ok);
    if (r.expected == "holds") CHECK(r.failures == 0);
    if (r.expected == "fails") CHECK(r.failures > 0);
  }
}

TEST_CASE("the suite runs green at size three and four on random samples") {
  LawConfig config;
  config.mode = LawConfig::Mode::Random;
  config.samples = 300;
  for (int size = 3; size <= 4; ++size) {
    for (uint64_t seed = 0; seed < 3; ++seed) {
      config.size = size;
      config.seed = seed;
      const SuiteReport suite = run_suite(config, {});
      CAPTURE(size, seed);
      CHECK(suite.all_ok);
    }
  }
}

TEST_CASE("filters select laws in registry order") {
  const SuiteReport suite = run_suite(LawConfig{}, {"P8", "P7"});
  REQUIRE(suite.reports.size() == 2);
  CHECK(suite.reports[0].id == "P7");  // registry order, not filter order
  CHECK(suite.reports[1].id == "P8");
}

TEST_CASE("implication laws report vacuous counts") {
  // P20: refinement transitivity — most triples miss the antecedent.
  const LawReport r = check_law("P20", LawConfig{});
  CHECK(r.cases == 16384);
  CHECK(r.vacuous > 0);
  CHECK(r.vacuous < r.cases);
  CHECK(r.ok);
}

TEST_CASE("oversized exhaustive requests fall back to sampling with a note") {
  LawConfig config;
  config.size = 4;  // P45 has three program slots and two condition slots
  const LawReport r = check_law("P45", config);
  CHECK(r.mode == "random");
  CHECK(r.cases == config.fallback_samples);
  CHECK_FALSE(r.notes.empty());
  CHECK(r.ok);
}
