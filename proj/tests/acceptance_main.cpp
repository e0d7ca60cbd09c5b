// Acceptance harness: seven end-to-end checks over the engine, the law
// registry, and the shipped example corpus.  Prints one PASS/FAIL line per
// criterion and exits 0 only when every criterion passes.
//
// Pinned tolerances:
//   - kExhaustiveBudgetMillis: wall-clock budget for the exhaustive
//     two-atom law suite (criterion 1);
//   - kRandomSamples / kSeeds: sampling depth and the five seeds for the
//     randomized suite at four atoms (criterion 2);
//   - kMinRandomLoops: minimum number of random loops swept for the
//     feasibility implication (criterion 4).
#include <chrono>
#include <cctype>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tp/cli.hpp"
#include "tp/tp.hpp"

namespace {

using namespace tp;

constexpr double kExhaustiveBudgetMillis = 60'000.0;
constexpr uint64_t kRandomSamples = 1000;
constexpr uint64_t kSeeds[] = {1, 2, 3, 4, 5};
constexpr int kMinRandomLoops = 1000;

// Collects the first failure; a criterion is one Checker.
struct Checker {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Numeric part of a law id like "P45", or -1 for the named extras.
int law_number(const std::string& id) {
  if (id.size() < 2 || id[0] != 'P') return -1;
  for (size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
  return std::stoi(id.substr(1));
}

// Criterion 1: every law with at most three program slots in the core
// numbered ranges holds on *all* two-atom instances, and the whole suite
// (including the heavyweight and recorded entries) finishes in budget.
Checker criterion_exhaustive() {
  Checker c;
  LawConfig config;
  config.size = 2;
  config.mode = LawConfig::Mode::Exhaustive;
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport suite = run_suite(config);
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  c.require(suite.all_ok, "a law report came back not ok");
  for (const auto& r : suite.reports) {
    if (r.expected == "holds")
      c.require(r.failures == 0, r.id + " recorded " + std::to_string(r.failures) + " failures");
    const Law* law = find_law(r.id);
    const int n = law_number(r.id);
    const bool core = (n >= 6 && n <= 62) || (n >= 70 && n <= 79);
    if (core && law != nullptr && r.expected == "holds" && law->prog_slots.size() <= 3)
      c.require(r.mode == "exhaustive", r.id + " did not run exhaustively (mode " + r.mode + ")");
  }
  c.require(millis < kExhaustiveBudgetMillis,
            "exhaustive suite took " + std::to_string(millis) + " ms");
  return c;
}

// Criterion 2: the full suite passes on seeded random instances at four
// atoms, at least kRandomSamples cases per law, for five distinct seeds,
// loop laws included.
Checker criterion_random() {
  Checker c;
  for (const uint64_t seed : kSeeds) {
    LawConfig config;
    config.size = 4;
    config.mode = LawConfig::Mode::Random;
    config.samples = kRandomSamples;
    config.seed = seed;
    const SuiteReport suite = run_suite(config);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    c.require(suite.all_ok, tag + "a law report came back not ok");
    bool saw_loop_law[7] = {};
    for (const auto& r : suite.reports) {
      if (r.expected != "holds") continue;  // recorded entries replay their witnesses
      c.require(r.failures == 0, tag + r.id + " failed on a sampled instance");
      c.require(r.cases >= kRandomSamples,
                tag + r.id + " drew only " + std::to_string(r.cases) + " samples");
      const int n = law_number(r.id);
      if (n >= 63 && n <= 69) saw_loop_law[n - 63] = true;
    }
    for (int i = 0; i < 7; ++i)
      c.require(saw_loop_law[i], tag + "loop law P" + std::to_string(63 + i) + " missing");
  }
  return c;
}

// Criterion 3: the recorded counterexamples reproduce, both through the
// registry's replay mode and as direct value-level assertions.
Checker criterion_counterexamples() {
  Checker c;
  LawConfig config;
  config.size = 2;
  for (const char* id :
       {"P21", "P24", "P31", "P32", "P35", "P36", "naive-composition",
        "intersection-refinement-safety", "difference-refinement-safety", "P14-demonic",
        "internal-choice-P11"}) {
    const LawReport r = check_law(id, config);
    c.require(r.ok && r.mode == "recorded" && r.cases > 0 && r.failures == r.cases,
              std::string(id) + " witnesses did not replay");
  }

  StateSpace s3("A3", {"s0", "s1", "s2"});
  StateSpace s2("A2", {"s0", "s1"});

  // (a) The bare relational product keeps the run (s1,s2) whose midpoint the
  // second step rejects; composition drops it.
  const Program f1(&s3, Relation::from_pairs(&s3, {{"s1", "s1"}, {"s1", "s2"}}),
                   Condition::of(&s3, {"s1"}));
  const Program f2(&s3, Relation::from_pairs(&s3, {{"s1", "s1"}, {"s2", "s2"}}),
                   Condition::of(&s3, {"s1"}));
  c.require(rel_compose(f1.post(), f2.post()) ==
                Relation::from_pairs(&s3, {{"s1", "s1"}, {"s1", "s2"}}),
            "bare product mismatch");
  c.require(seq(f1, f2) == Program(&s3, Relation::from_pairs(&s3, {{"s1", "s1"}}),
                                   Condition::of(&s3, {"s1"})),
            "composition mismatch");

  // (b) Intersecting two implementations preserves refinement but can kill
  // feasibility, so intersection is no implementation mechanism.
  const Program spec(&s2, Relation::from_pairs(&s2, {{"s0", "s0"}, {"s0", "s1"}}),
                     Condition::of(&s2, {"s0"}));
  const Program q1(&s2, Relation::from_pairs(&s2, {{"s0", "s0"}}), Condition::of(&s2, {"s0"}));
  const Program q2(&s2, Relation::from_pairs(&s2, {{"s0", "s1"}}), Condition::of(&s2, {"s0"}));
  c.require(refines(q1, spec) && refines(q2, spec) && is_feasible(q1) && is_feasible(q2),
            "intersection witness pieces broken");
  const Program qq = program_intersection(q1, q2);
  c.require(refines(qq, program_intersection(spec, spec)) && !is_feasible(qq),
            "intersection unsafety did not reproduce");

  // (c) Composition does not distribute over internal choice from the left:
  // the left side's precondition collapses to empty.
  const Program q(&s3, Relation::from_pairs(&s3, {{"s0", "s1"}, {"s0", "s2"}}),
                  Condition::of(&s3, {"s0"}));
  const Program b1(&s3, Relation::from_pairs(&s3, {{"s1", "s0"}}), Condition::of(&s3, {"s1"}));
  const Program b2(&s3, Relation::from_pairs(&s3, {{"s2", "s0"}}), Condition::of(&s3, {"s2"}));
  const Program lhs = seq(q, internal_choice(b1, b2));
  const Program rhs = internal_choice(seq(q, b1), seq(q, b2));
  c.require(lhs.pre().is_empty() && rhs.pre() == Condition::of(&s3, {"s0"}) && !(lhs == rhs),
            "internal-choice distribution counterexample did not reproduce");

  // (d) fail is an identity of angelic choice but not of internal choice.
  const Program demonic = internal_choice(skip_program(&s2), fail_program(&s2));
  c.require(choice(skip_program(&s2), fail_program(&s2)) == skip_program(&s2),
            "fail should be an identity of angelic choice");
  c.require(!(demonic == skip_program(&s2)) && demonic.pre().is_empty(),
            "fail should not be an identity of internal choice");

  // (e) havoc commutes with itself; the two total constants do not commute.
  const Program c0(&s2, Relation::from_pairs(&s2, {{"s0", "s0"}, {"s1", "s0"}}),
                   Condition::full(&s2));
  const Program c1(&s2, Relation::from_pairs(&s2, {{"s0", "s1"}, {"s1", "s1"}}),
                   Condition::full(&s2));
  c.require(commutes(havoc_program(&s2), havoc_program(&s2)), "havoc should self-commute");
  c.require(!commutes(c0, c1), "the total constants should not commute");

  // (f) wp is strict across a union of targets: the demonic body satisfies
  // the disjunction while satisfying neither disjunct.
  const Program body(&s2, Relation::from_pairs(&s2, {{"s0", "s0"}, {"s0", "s1"}}),
                     Condition::of(&s2, {"s0"}));
  const Relation t1 = Relation::from_pairs(&s2, {{"s0", "s0"}});
  const Relation t2 = Relation::from_pairs(&s2, {{"s0", "s1"}});
  c.require(wp(body, t1).is_empty() && wp(body, t2).is_empty(), "single-target wp should be empty");
  c.require(wp(body, rel_union(t1, t2)) == Condition::of(&s2, {"s0"}),
            "union-target wp should be {s0}");
  return c;
}

// Criterion 4: loop semantics — the counting loop's value and unrollings,
// the never-exiting loop, P68 over generated (loop, invariant) pairs, and
// the sufficient-implies-direct feasibility implication on random loops.
Checker criterion_loops() {
  Checker c;
  StateSpace s("L3", {"s0", "s1", "s2"});
  const Program init(&s, Relation::from_pairs(&s, {{"s0", "s0"}}), Condition::of(&s, {"s0"}));
  const Program step(&s, Relation::from_pairs(&s, {{"s0", "s1"}, {"s1", "s2"}}),
                     Condition::of(&s, {"s0", "s1"}));
  const LoopSpec counting{init, Condition::of(&s, {"s2"}), step};
  const Program expected(&s, Relation::from_pairs(&s, {{"s0", "s2"}}), Condition::of(&s, {"s0"}));
  c.require(while_loop(counting) == expected, "counting loop value mismatch");
  c.require(loop_unrolling(counting, 0) == fail_program(&s), "unrolling 0 should be fail");
  c.require(loop_unrolling(counting, 1) == fail_program(&s), "unrolling 1 should be fail");
  c.require(loop_unrolling(counting, 2) == expected, "unrolling 2 mismatch");

  StateSpace s2("L2", {"s0", "s1"});
  const LoopSpec spin{skip_program(&s2), Condition::empty(&s2), skip_program(&s2)};
  c.require(while_loop(spin) == fail_program(&s2), "never-exiting loop should equal fail");
  c.require(!check_loop_feasibility(spin).direct,
            "direct feasibility verdict should be false for the never-exiting loop");

  LawConfig exhaustive;
  exhaustive.size = 2;
  const LawReport p68 = check_law("P68", exhaustive);
  c.require(p68.ok && p68.mode == "exhaustive" && p68.failures == 0,
            "P68 failed on an exhaustive two-atom pair");
  LawConfig sampled;
  sampled.size = 4;
  sampled.mode = LawConfig::Mode::Random;
  sampled.samples = kRandomSamples;
  sampled.seed = 7;
  const LawReport p68r = check_law("P68", sampled);
  c.require(p68r.ok && p68r.failures == 0, "P68 failed on a sampled four-atom pair");

  // Sufficient conditions must imply the direct verdict on every loop; the
  // checker throws if its internal theorem is ever violated.
  int loops = 0;
  std::mt19937_64 rng(20260819);
  for (int n = 2; n <= 4; ++n) {
    StateSpace space("R" + std::to_string(n), default_atoms(n));
    for (int k = 0; k < 400; ++k) {
      const LoopSpec ls{random_feasible_program(&space, rng), random_condition(&space, rng),
                        random_feasible_program(&space, rng)};
      try {
        const LoopFeasibility f = check_loop_feasibility(ls);
        if (f.sufficient && !f.direct)
          c.require(false, "sufficient verdict without the direct verdict");
      } catch (const ModelError& e) {
        c.require(false, std::string("loop feasibility checker threw: ") + e.what());
      }
      ++loops;
    }
  }
  c.require(loops >= kMinRandomLoops,
            "swept only " + std::to_string(loops) + " random loops");
  const LawReport p69 = check_law("P69", sampled);
  c.require(p69.ok && p69.failures == 0, "P69 failed on a sampled loop");
  return c;
}

// Criterion 5: the feasibility characterization P80 holds exhaustively at
// two and three atoms.
Checker criterion_feasibility_characterization() {
  Checker c;
  LawConfig two;
  two.size = 2;
  const LawReport r2 = check_law("P80", two);
  c.require(r2.ok && r2.mode == "exhaustive" && r2.cases == 64 && r2.failures == 0,
            "P80 at two atoms: expected 64 exhaustive cases, zero failures");
  LawConfig three;
  three.size = 3;
  const LawReport r3 = check_law("P80", three);
  c.require(r3.ok && r3.mode == "exhaustive" && r3.cases == 4096 && r3.failures == 0,
            "P80 at three atoms: expected 4096 exhaustive cases, zero failures");
  return c;
}

// Criterion 6: the subtraction formula and the refinement+feasibility
// definition of contract correctness agree on every two-atom instance, and
// the sp/wp squeeze holds on every correct instance.
Checker criterion_correctness_agreement() {
  Checker c;
  StateSpace t("C2", {"t0", "t1"});
  uint64_t instances = 0;
  uint64_t correct_instances = 0;
  for (uint64_t idx = 0; idx < program_count(2); ++idx) {
    const Program body = program_at(&t, idx);
    for (uint64_t post_mask = 0; post_mask < relation_count(2); ++post_mask) {
      const Relation post = relation_at(&t, post_mask);
      for (uint32_t pre_bits = 0; pre_bits < 4; ++pre_bits) {
        const Condition pre(&t, pre_bits);
        const ContractedProgram cp(pre, post, body);
        ++instances;
        const bool by_definition = correct_by_definition(cp);
        if (by_definition != correct_by_formula(cp)) {
          c.require(false, "formulations disagree on " + to_text(body));
          continue;
        }
        if (by_definition) {
          ++correct_instances;
          c.require(rel_subset(sp(body, pre), post) && cond_implies(pre, wp(body, post)),
                    "sp/wp squeeze violated on a correct instance of " + to_text(body));
        }
      }
    }
  }
  c.require(instances == 4096, "expected 64x16x4 = 4096 contract instances");
  c.require(correct_instances > 0, "no correct instances found");
  LawConfig two;
  two.size = 2;
  const LawReport p72 = check_law("P72", two);
  c.require(p72.ok && p72.cases == 4096 && p72.failures == 0, "P72 registry check failed");
  const LawReport p71 = check_law("P71", two);
  c.require(p71.ok && p71.failures == 0 && p71.vacuous < p71.cases,
            "P71 registry check failed or proved vacuous");
  return c;
}

// Criterion 7: canonical-print round-trip is the identity on the corpus,
// and the four example files produce their documented exit codes.
Checker criterion_corpus(const std::string& dir) {
  Checker c;
  const struct {
    const char* name;
    int exit_code;
    const char* summary;
  } files[] = {
      {"counting.tp", 0, " 0 failed, 0 errors"},
      {"infeasible_loop.tp", 1, " 1 failed, 0 errors"},
      {"bank.tp", 0, " 0 failed, 0 errors"},
      {"counterexamples.tp", 0, " 0 failed, 0 errors"},
  };
  for (const auto& f : files) {
    const std::string path = dir + "/" + f.name;
    const std::optional<std::string> source = cli::read_file(path);
    if (!source) {
      c.require(false, "cannot read " + path);
      continue;
    }

    const lang::ParseResult parsed = lang::parse(*source);
    c.require(parsed.diagnostics.empty(), path + " has parse diagnostics");
    const lang::ElabResult elaborated = lang::elaborate(parsed.ast);
    c.require(elaborated.ok, path + " has elaboration diagnostics");
    if (!parsed.diagnostics.empty() || !elaborated.ok) continue;

    // Round trip: the canonical printer emits the dialect the parser reads,
    // and printing is idempotent across a reparse.
    const std::string printed = lang::print_model(elaborated.model);
    const lang::ParseResult reparsed = lang::parse(printed);
    c.require(reparsed.diagnostics.empty(), path + " canonical print does not reparse");
    if (!reparsed.diagnostics.empty()) continue;
    const lang::ElabResult reelaborated = lang::elaborate(reparsed.ast);
    c.require(reelaborated.ok, path + " canonical print does not re-elaborate");
    if (!reelaborated.ok) continue;
    c.require(lang::print_model(reelaborated.model) == printed,
              path + " round-trip is not the identity");

    std::ostringstream sink;
    const int code = cli::cmd_run({path}, "text", sink);
    c.require(code == f.exit_code, path + " exited " + std::to_string(code) + ", expected " +
                                       std::to_string(f.exit_code));
    c.require(sink.str().find(f.summary) != std::string::npos,
              path + " summary line mismatch");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::string examples_dir = "examples";
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--examples" && i + 1 < argc) examples_dir = argv[++i];

  int failed = 0;
  const auto report = [&failed](int number, const std::string& name, const Checker& c) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << number << ". " << name << "\n";
    if (!c.ok) {
      std::cout << "      " << c.detail << "\n";
      ++failed;
    }
  };

  try {
    report(1, "exhaustive law verification at two atoms, in budget", criterion_exhaustive());
    report(2, "randomized law verification at four atoms, five seeds", criterion_random());
    report(3, "recorded counterexamples reproduce exactly", criterion_counterexamples());
    report(4, "loop semantics: counting loop, never-exiting loop, P68, P69",
           criterion_loops());
    report(5, "feasibility characterization P80, exhaustive at two and three atoms",
           criterion_feasibility_characterization());
    report(6, "correctness formulations agree; sp/wp squeeze on correct instances",
           criterion_correctness_agreement());
    report(7, "corpus round-trip and documented exit codes", criterion_corpus(examples_dir));
  } catch (const std::exception& e) {
    std::cout << "FAIL  harness aborted: " << e.what() << "\n";
    return 1;
  }

  if (failed == 0) {
    std::cout << "acceptance: all 7 criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failed << " criteria failed\n";
  return 1;
}
