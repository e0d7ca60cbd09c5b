#ifndef TP_LAWS_HPP
#define TP_LAWS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tp/contracts.hpp"
#include "tp/generate.hpp"
#include "tp/loops.hpp"
#include "tp/program.hpp"

namespace tp {

// --- law model ---------------------------------------------------------

enum class Outcome { Holds, Fails, Vacuous };

inline Outcome outcome_of(bool b) { return b ? Outcome::Holds : Outcome::Fails; }
inline Outcome implied(bool antecedent, bool consequent) {
  if (!antecedent) return Outcome::Vacuous;
  return outcome_of(consequent);
}

inline bool rel_subset(const Relation& r, const Relation& s) { return rel_diff(r, s).is_empty(); }

// Domain requirement for one program slot. "Normal" programs carry no
// postcondition pairs outside their precondition (the canonical
// representatives of equivalence); several distribution laws need them.
enum class SlotReq { Any, Feasible, Normal, FeasibleNormal };

enum class EqMode { Exact, Equivalence, Predicate };
enum class Expect { Holds, Fails };

struct LawInstance {
  const StateSpace* space = nullptr;
  std::vector<Program> progs;
  std::vector<Condition> conds;
  std::vector<Relation> rels;
};

struct Witness {
  std::string description;
  std::function<Outcome()> replay;  // reproduces ⟺ returns Fails
};

struct Law {
  std::string id;
  std::string claim;
  std::vector<SlotReq> prog_slots;
  int cond_slots = 0;
  int rel_slots = 0;
  EqMode eq = EqMode::Exact;
  Expect expected = Expect::Holds;
  std::function<Outcome(const LawInstance&)> check;
  // Optional sampler for antecedent-heavy laws; fills the instance honoring
  // the slot requirements. Defaults to independent per-slot draws.
  std::function<void(LawInstance&, std::mt19937_64&)> gen;
  std::vector<Witness> witnesses;
  std::string notes;
};

struct LawConfig {
  int size = 2;
  enum class Mode { Exhaustive, Random } mode = Mode::Exhaustive;
  uint64_t samples = 1000;
  uint64_t seed = 0;
  // Exhaustive case spaces beyond the cap fall back to seeded sampling.
  uint64_t case_cap = 20'000'000;
  uint64_t fallback_samples = 100'000;
  int max_recorded_failures = 3;
};

struct LawReport {
  std::string id;
  std::string claim;
  std::string mode;      // exhaustive | random | recorded
  std::string expected;  // holds | fails
  std::string eq;        // exact | equivalence | predicate
  uint64_t cases = 0;
  uint64_t vacuous = 0;
  uint64_t failures = 0;
  std::vector<std::string> examples;  // printed failing instances / replayed witnesses
  double millis = 0.0;
  bool ok = false;  // outcome matched expectation
  std::string notes;
};

inline std::string to_text(const LawInstance& inst) {
  std::string out;
  for (size_t i = 0; i < inst.progs.size(); ++i)
    out += (out.empty() ? "" : " ") + ("p" + std::to_string(i + 1) + "=" + to_text(inst.progs[i]));
  for (size_t i = 0; i < inst.conds.size(); ++i)
    out += (out.empty() ? "" : " ") + ("C" + std::to_string(i + 1) + "=" + to_text(inst.conds[i]));
  for (size_t i = 0; i < inst.rels.size(); ++i)
    out += (out.empty() ? "" : " ") + ("r" + std::to_string(i + 1) + "=" + to_text(inst.rels[i]));
  return out;
}

// --- engine ------------------------------------------------------------

inline bool meets(SlotReq req, const Program& p) {
  switch (req) {
    case SlotReq::Any: return true;
    case SlotReq::Feasible: return is_feasible(p);
    case SlotReq::Normal: return is_normal(p);
    case SlotReq::FeasibleNormal: return is_feasible(p) && is_normal(p);
  }
  return false;
}

inline Program draw_for(SlotReq req, const StateSpace* s, std::mt19937_64& rng) {
  switch (req) {
    case SlotReq::Any: return random_program(s, rng);
    case SlotReq::Feasible: return random_feasible_program(s, rng);
    case SlotReq::Normal: return random_normal_program(s, rng);
    case SlotReq::FeasibleNormal: return random_feasible_normal_program(s, rng);
  }
  throw ModelError("unknown slot requirement");
}

inline std::vector<std::string> default_atoms(int n) {
  std::vector<std::string> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back("s" + std::to_string(i));
  return atoms;
}

inline LawReport check_law(const Law& law, const LawConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  LawReport report;
  report.id = law.id;
  report.claim = law.claim;
  report.expected = law.expected == Expect::Holds ? "holds" : "fails";
  report.eq = law.eq == EqMode::Exact ? "exact"
              : law.eq == EqMode::Equivalence ? "equivalence"
                                              : "predicate";
  report.notes = law.notes;

  if (law.expected == Expect::Fails) {
    // The claim is known false; the check replays the recorded witnesses
    // and passes exactly when each still falsifies the claim.
    report.mode = "recorded";
    report.ok = true;
    for (const auto& w : law.witnesses) {
      ++report.cases;
      const Outcome o = w.replay();
      if (o == Outcome::Fails) {
        ++report.failures;
        report.examples.push_back(w.description);
      } else {
        report.ok = false;
        report.examples.push_back("WITNESS NO LONGER FAILS: " + w.description);
      }
    }
    report.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }

  StateSpace space("S" + std::to_string(config.size), default_atoms(config.size));
  const int n = space.size();
  LawInstance inst;
  inst.space = &space;
  inst.progs.reserve(law.prog_slots.size());
  inst.conds.reserve(static_cast<size_t>(law.cond_slots));
  inst.rels.reserve(static_cast<size_t>(law.rel_slots));

  const auto tally = [&](Outcome o) {
    ++report.cases;
    if (o == Outcome::Vacuous) ++report.vacuous;
    if (o == Outcome::Fails) {
      ++report.failures;
      if (report.examples.size() < static_cast<size_t>(config.max_recorded_failures))
        report.examples.push_back(to_text(inst));
    }
  };

  // Work out whether the full case space fits the exhaustive budget.
  bool over = n > 4;  // enumeration bound for exhaustive sweeps
  uint64_t total = 1;
  std::vector<std::vector<uint64_t>> prog_domains;
  if (config.mode != LawConfig::Mode::Exhaustive) over = true;
  if (!over) {
    for (SlotReq req : law.prog_slots) {
      std::vector<uint64_t> domain;
      for (uint64_t idx = 0; idx < program_count(n); ++idx)
        if (meets(req, program_at(&space, idx))) domain.push_back(idx);
      prog_domains.push_back(std::move(domain));
    }
    const auto mult = [&](uint64_t m) {
      if (!over && (m == 0 || total > config.case_cap / m))
        over = true;
      else if (!over)
        total *= m;
    };
    for (const auto& d : prog_domains) mult(d.size());
    for (int i = 0; i < law.cond_slots; ++i) mult(uint64_t{1} << n);
    for (int i = 0; i < law.rel_slots; ++i) mult(relation_count(n));
  }

  if (config.mode == LawConfig::Mode::Exhaustive && !over) {
    report.mode = "exhaustive";
    // Cache small program domains as values; index the rest lazily.
    std::vector<std::vector<Program>> caches;
    for (const auto& d : prog_domains) {
      std::vector<Program> cache;
      if (d.size() <= 65536) {
        cache.reserve(d.size());
        for (uint64_t idx : d) cache.push_back(program_at(&space, idx));
      }
      caches.push_back(std::move(cache));
    }
    const size_t np = law.prog_slots.size();
    const size_t nc = static_cast<size_t>(law.cond_slots);
    const size_t nr = static_cast<size_t>(law.rel_slots);
    std::vector<uint64_t> ctr(np + nc + nr, 0);
    std::vector<uint64_t> radix;
    for (const auto& d : prog_domains) radix.push_back(d.size());
    for (size_t i = 0; i < nc; ++i) radix.push_back(uint64_t{1} << n);
    for (size_t i = 0; i < nr; ++i) radix.push_back(relation_count(n));
    for (;;) {
      inst.progs.clear();
      inst.conds.clear();
      inst.rels.clear();
      for (size_t i = 0; i < np; ++i)
        inst.progs.push_back(caches[i].empty() ? program_at(&space, prog_domains[i][ctr[i]])
                                               : caches[i][ctr[i]]);
      for (size_t i = 0; i < nc; ++i)
        inst.conds.push_back(Condition(&space, static_cast<uint32_t>(ctr[np + i])));
      for (size_t i = 0; i < nr; ++i) inst.rels.push_back(relation_at(&space, ctr[np + nc + i]));
      tally(law.check(inst));
      size_t k = 0;
      while (k < ctr.size()) {
        if (++ctr[k] < radix[k]) break;
        ctr[k] = 0;
        ++k;
      }
      if (k == ctr.size() || ctr.empty()) break;
    }
  } else {
    report.mode = "random";
    if (config.mode == LawConfig::Mode::Exhaustive)
      report.notes += std::string(report.notes.empty() ? "" : "; ") +
                      "case space exceeds the exhaustive cap; seeded sampling used";
    const uint64_t samples =
        config.mode == LawConfig::Mode::Exhaustive ? config.fallback_samples : config.samples;
    std::mt19937_64 rng(config.seed);
    for (uint64_t i = 0; i < samples; ++i) {
      inst.progs.clear();
      inst.conds.clear();
      inst.rels.clear();
      if (law.gen) {
        law.gen(inst, rng);
      } else {
        for (SlotReq req : law.prog_slots) inst.progs.push_back(draw_for(req, &space, rng));
        for (int c = 0; c < law.cond_slots; ++c) inst.conds.push_back(random_condition(&space, rng));
        for (int r = 0; r < law.rel_slots; ++r) inst.rels.push_back(random_relation(&space, rng));
      }
      tally(law.check(inst));
    }
  }

  report.ok = report.failures == 0;
  report.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// --- registry ----------------------------------------------------------

inline std::vector<Law> build_law_registry() {
  std::vector<Law> laws;
  const auto add = [&laws](Law law) { laws.push_back(std::move(law)); };

  // Shorthands used throughout the checkers.
  const auto EQ = [](const Program& a, const Program& b) { return outcome_of(a == b); };
  const auto gc2 = [](const Condition& c1, const Program& p1, const Condition& c2,
                      const Program& p2) {
    return guarded_conditional(std::vector<std::pair<Condition, Program>>{{c1, p1}, {c2, p2}});
  };
  const auto contained = [](const Program& small, const Program& large) {
    return cond_implies(small.pre(), large.pre()) && rel_subset(small.post(), large.post());
  };
  // Least invariant of p containing the seed: close under the image map.
  const auto invariant_closure = [](const Program& p, Condition i) {
    for (;;) {
      const Condition next = cond_or(i, image(p.post(), cond_and(i, p.pre())));
      if (next == i) return i;
      i = next;
    }
  };

  // P6 ---------------------------------------------------------------
  add({.id = "P6",
       .claim = "feasible operands yield feasible results under every operator",
       .prog_slots = {SlotReq::Feasible, SlotReq::Feasible},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [gc2](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1];
         const Condition& c = in.conds[0];
         const bool all = is_feasible(choice(p1, p2)) && is_feasible(internal_choice(p1, p2)) &&
                          is_feasible(seq(p1, p2)) && is_feasible(restrict(c, p1)) &&
                          is_feasible(corestrict(p1, c)) &&
                          is_feasible(atomic_concurrency(p1, p2)) &&
                          is_feasible(gc2(c, p1, cond_not(c), p2)) &&
                          is_feasible(if_then_else(c, p1, p2)) &&
                          is_feasible(fixed_repetition(p1, 2)) &&
                          is_feasible(arbitrary_repetition(p1)) &&
                          is_feasible(while_loop(LoopSpec(p1, c, p2)));
         return outcome_of(all);
       },
       .notes = "includes the derived operators (conditionals, repetitions, loops)"});

  // P7–P10: restriction algebra ---------------------------------------
  add({.id = "P7",
       .claim = "restrictions commute: C1:(C2:p) = C2:(C1:p)",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .check = [EQ](const LawInstance& in) {
         return EQ(restrict(in.conds[0], restrict(in.conds[1], in.progs[0])),
                   restrict(in.conds[1], restrict(in.conds[0], in.progs[0])));
       }});
  add({.id = "P8",
       .claim = "restrictions compose by intersection: (C1 ∧ C2):p = C1:(C2:p)",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .check = [EQ](const LawInstance& in) {
         return EQ(restrict(cond_and(in.conds[0], in.conds[1]), in.progs[0]),
                   restrict(in.conds[0], restrict(in.conds[1], in.progs[0])));
       }});
  add({.id = "P9",
       .claim = "restriction distributes over choice",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(restrict(in.conds[0], choice(in.progs[0], in.progs[1])),
                   choice(restrict(in.conds[0], in.progs[0]), restrict(in.conds[0], in.progs[1])));
       }});
  add({.id = "P10",
       .claim = "restriction applies to the first step: C:(p1;p2) = (C:p1);p2",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(restrict(in.conds[0], seq(in.progs[0], in.progs[1])),
                   seq(restrict(in.conds[0], in.progs[0]), in.progs[1]));
       }});

  // P11–P12: composition over choice -----------------------------------
  add({.id = "P11",
       .claim = "composition distributes over choice from the left: q;(p1|p2) = (q;p1)|(q;p2)",
       .prog_slots = {SlotReq::Any, SlotReq::Normal, SlotReq::Normal},
       .check = [EQ](const LawInstance& in) {
         const Program &q = in.progs[0], &p1 = in.progs[1], &p2 = in.progs[2];
         return EQ(seq(q, choice(p1, p2)), choice(seq(q, p1), seq(q, p2)));
       },
       .notes = "choice operands must be canonical: junk outcomes outside an operand's "
                "precondition leak through the left-hand composition otherwise"});
  add({.id = "P12",
       .claim = "composition distributes over choice from the right: (p1|p2);q = (p1;q)|(p2;q)",
       .prog_slots = {SlotReq::Normal, SlotReq::Normal, SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &q = in.progs[2];
         return EQ(seq(choice(p1, p2), q), choice(seq(p1, q), seq(p2, q)));
       },
       .notes = "choice operands must be canonical"});

  // P13–P17: units and absorbers ---------------------------------------
  add({.id = "P13",
       .claim = "skip is a unit of composition: p;skip = p exactly, skip;p ≡ p (feasible p)",
       .prog_slots = {SlotReq::Any},
       .check = [](const LawInstance& in) {
         const Program& p = in.progs[0];
         const Program sk = skip_program(in.space);
         return implied(is_feasible(p),
                        seq(p, sk) == p && equivalent(seq(sk, p), p));
       },
       .notes = "skip;p equals the canonical form of p, so the left identity is exact only for "
                "canonical p"});
  add({.id = "P14",
       .claim = "fail is an identity of choice",
       .prog_slots = {SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         const Program f = fail_program(in.space);
         const Outcome a = EQ(choice(in.progs[0], f), in.progs[0]);
         const Outcome b = EQ(choice(f, in.progs[0]), in.progs[0]);
         return outcome_of(a == Outcome::Holds && b == Outcome::Holds);
       }});
  add({.id = "P15",
       .claim = "fail is a zero of composition",
       .prog_slots = {SlotReq::Any},
       .check = [](const LawInstance& in) {
         const Program f = fail_program(in.space);
         return outcome_of(seq(in.progs[0], f) == f && seq(f, in.progs[0]) == f);
       }});
  add({.id = "P16",
       .claim = "havoc absorbs choice",
       .prog_slots = {SlotReq::Any},
       .check = [](const LawInstance& in) {
         const Program h = havoc_program(in.space);
         return outcome_of(choice(in.progs[0], h) == h && choice(h, in.progs[0]) == h);
       }});
  add({.id = "P17",
       .claim = "p;havoc ≡ pre(p):havoc for feasible p",
       .prog_slots = {SlotReq::Feasible},
       .eq = EqMode::Equivalence,
       .check = [](const LawInstance& in) {
         const Program h = havoc_program(in.space);
         return outcome_of(equivalent(seq(in.progs[0], h), restrict(in.progs[0].pre(), h)));
       },
       .notes = "exact equality additionally needs a canonical operand"});

  // P18–P25: refinement facts ------------------------------------------
  add({.id = "P18",
       .claim = "a program refines each of its restrictions",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         return outcome_of(refines(in.progs[0], restrict(in.conds[0], in.progs[0])));
       }});
  add({.id = "P19",
       .claim = "D ⊆ C implies C:p refines D:p",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Condition &c = in.conds[0], &d = in.conds[1];
         return implied(cond_implies(d, c),
                        refines(restrict(c, in.progs[0]), restrict(d, in.progs[0])));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         in.progs.push_back(random_program(in.space, rng));
         const Condition c = random_condition(in.space, rng);
         in.conds.push_back(c);
         in.conds.push_back(cond_and(c, random_condition(in.space, rng)));
       }});
  add({.id = "P20",
       .claim = "restriction is refinement-safe: q ⊒ p implies C:q ⊒ C:p",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program &q = in.progs[0], &p = in.progs[1];
         return implied(refines(q, p),
                        refines(restrict(in.conds[0], q), restrict(in.conds[0], p)));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program p = random_program(in.space, rng);
         in.progs.push_back(random_refinement(p, rng));
         in.progs.push_back(p);
         in.conds.push_back(random_condition(in.space, rng));
       }});
  add({.id = "P21",
       .claim = "choice and composition are refinement-safe",
       .expected = Expect::Fails,
       .witnesses =
           {{"choice: q1=<{(s0,s0),(s1,s0)},{s0,s1}> refines p1=<{(s0,s0)},{s0}> and q2=p2="
             "<{(s1,s1)},{s1}>, but q1|q2 adds the outcome (s1,s0) inside pre(p1|p2) and does "
             "not refine p1|p2",
             []() {
               StateSpace s("S2", {"s0", "s1"});
               const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                Condition::of(&s, {"s0"}));
               const Program q1(&s, Relation::from_pairs(&s, {{"s0", "s0"}, {"s1", "s0"}}),
                                Condition::of(&s, {"s0", "s1"}));
               const Program p2(&s, Relation::from_pairs(&s, {{"s1", "s1"}}),
                                Condition::of(&s, {"s1"}));
               const bool ante = refines(q1, p1) && refines(p2, p2);
               return implied(ante, refines(choice(q1, p2), choice(p1, p2)));
             }},
            {"composition: q1=<{(s0,s1)},{s0}> refines p1=<{(s0,s0),(s0,s1)},{s0}>, q2=p2="
             "<{(s0,s0)},{s0}>, yet q1;q2 = fail loses pre(p1;p2)={s0}",
             []() {
               StateSpace s("S2", {"s0", "s1"});
               const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s0"}, {"s0", "s1"}}),
                                Condition::of(&s, {"s0"}));
               const Program q1(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                Condition::of(&s, {"s0"}));
               const Program p2(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                Condition::of(&s, {"s0"}));
               const bool ante = refines(q1, p1);
               return implied(ante, refines(seq(q1, p2), seq(p1, p2)));
             }}},
       .notes = "restriction (P20) and corestriction-by-the-same-condition of *equivalent* "
                "operands stay safe; the general operator claim fails"});
  add({.id = "P22",
       .claim = "every program refines havoc restricted to its precondition",
       .prog_slots = {SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         return outcome_of(
             refines(in.progs[0], restrict(in.progs[0].pre(), havoc_program(in.space))));
       }});
  add({.id = "P23",
       .claim = "every total program refines havoc",
       .prog_slots = {SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         return implied(in.progs[0].pre().is_full(), refines(in.progs[0], havoc_program(in.space)));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         Program p = random_program(in.space, rng);
         if (rng() & 1) p = Program(in.space, p.post(), Condition::full(in.space));
         in.progs.push_back(p);
       }});
  add({.id = "P24",
       .claim = "only fail refines fail",
       .expected = Expect::Fails,
       .witnesses = {{"<{},{s0,s1}> refines fail (refinement over fail's empty precondition is "
                      "vacuous) yet differs from it",
                      []() {
                        StateSpace s("S2", {"s0", "s1"});
                        const Program q(&s, Relation::empty(&s), Condition::full(&s));
                        const Program f = fail_program(&s);
                        const bool claim = !refines(q, f) || q == f;
                        return outcome_of(claim);
                      }}},
       .notes = "the converse direction holds: fail refines only programs equivalent to fail "
                "(see P25)"});
  add({.id = "P25",
       .claim = "fail refines p exactly when p is equivalent to fail",
       .prog_slots = {SlotReq::Any},
       .eq = EqMode::Equivalence,
       .check = [](const LawInstance& in) {
         const Program f = fail_program(in.space);
         return outcome_of(refines(f, in.progs[0]) == equivalent(in.progs[0], f));
       }});

  // P26–P31: corestriction ----------------------------------------------
  add({.id = "P26",
       .claim = "corestriction is composition with a restricted skip: p\\C = p;(C:skip)",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(corestrict(in.progs[0], in.conds[0]),
                   seq(in.progs[0], restrict(in.conds[0], skip_program(in.space))));
       }});
  add({.id = "P27",
       .claim = "corestriction distributes over choice (canonical operands)",
       .prog_slots = {SlotReq::Normal, SlotReq::Normal},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(corestrict(choice(in.progs[0], in.progs[1]), in.conds[0]),
                   choice(corestrict(in.progs[0], in.conds[0]),
                          corestrict(in.progs[1], in.conds[0])));
       },
       .notes = "junk in one operand can promise an outcome the other operand's precondition "
                "claims, so canonical operands are required"});
  add({.id = "P28",
       .claim = "corestriction applies to the last step: (p1;p2)\\C = p1;(p2\\C)",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(corestrict(seq(in.progs[0], in.progs[1]), in.conds[0]),
                   seq(in.progs[0], corestrict(in.progs[1], in.conds[0])));
       }});
  add({.id = "P29",
       .claim = "the range of p\\C lies inside C",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         return outcome_of(
             cond_implies(program_range(corestrict(in.progs[0], in.conds[0])), in.conds[0]));
       }});
  add({.id = "P30",
       .claim = "corestriction is monotone in the condition, componentwise",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [contained](const LawInstance& in) {
         const Condition &c = in.conds[0], &d = in.conds[1];
         return implied(cond_implies(d, c), contained(corestrict(in.progs[0], d),
                                                      corestrict(in.progs[0], c)));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         in.progs.push_back(random_program(in.space, rng));
         const Condition c = random_condition(in.space, rng);
         in.conds.push_back(c);
         in.conds.push_back(cond_and(c, random_condition(in.space, rng)));
       },
       .notes = "read componentwise (postcondition and precondition each grow with the "
                "condition); the pair ordering is not refinement"});
  add({.id = "P31",
       .claim = "every operator is refinement-safe",
       .expected = Expect::Fails,
       .witnesses =
           {{"corestriction: q=<{(s0,s0)},{s0}> refines p=<{(s0,s0),(s0,s1)},{s0}>, but "
             "q\\{s1} = fail does not refine p\\{s1} = <{(s0,s1)},{s0}>",
             []() {
               StateSpace s("S2", {"s0", "s1"});
               const Program p(&s, Relation::from_pairs(&s, {{"s0", "s0"}, {"s0", "s1"}}),
                               Condition::of(&s, {"s0"}));
               const Program q(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                               Condition::of(&s, {"s0"}));
               const Condition c = Condition::of(&s, {"s1"});
               return implied(refines(q, p), refines(corestrict(q, c), corestrict(p, c)));
             }},
            {"atomic concurrency: q1=<{(s0,s0),(s1,s0)},{s0,s1}> refines p1=<{(s0,s0)},{s0}>, "
             "q2=p2=<{(s0,s1)},{s0}>, but q1||q2 allows (s0,s0) inside pre(p1||p2)",
             []() {
               StateSpace s("S2", {"s0", "s1"});
               const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                Condition::of(&s, {"s0"}));
               const Program q1(&s, Relation::from_pairs(&s, {{"s0", "s0"}, {"s1", "s0"}}),
                                Condition::of(&s, {"s0", "s1"}));
               const Program p2(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                Condition::of(&s, {"s0"}));
               const bool ante = refines(q1, p1);
               return implied(ante, refines(atomic_concurrency(q1, p2),
                                            atomic_concurrency(p1, p2)));
             }}},
       .notes = "restriction and internal choice are safe; choice/composition fail (P21); "
                "intersection preserves refinement but loses feasibility (see "
                "intersection-refinement-safety)"});

  // P32–P43: concurrency -------------------------------------------------
  add({.id = "P32",
       .claim = "atomic concurrency is associative and refinement-safe",
       .expected = Expect::Fails,
       .witnesses =
           {{"associativity: p1=<{(s0,s1)},{s0}>, p2=<{(s1,s0)},{s1}>, p3=<{(s0,s0)},{s0}>: "
             "(p1||p2)||p3 = <{(s0,s0)},{s0}> but p1||(p2||p3) = <{(s0,s0),(s1,s1)},{s0,s1}>",
             []() {
               StateSpace s("S2", {"s0", "s1"});
               const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                Condition::of(&s, {"s0"}));
               const Program p2(&s, Relation::from_pairs(&s, {{"s1", "s0"}}),
                                Condition::of(&s, {"s1"}));
               const Program p3(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                Condition::of(&s, {"s0"}));
               return outcome_of(atomic_concurrency(atomic_concurrency(p1, p2), p3) ==
                                 atomic_concurrency(p1, atomic_concurrency(p2, p3)));
             }},
            {"refinement-safety: the atomic-concurrency witness of P31",
             []() {
               StateSpace s("S2", {"s0", "s1"});
               const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                Condition::of(&s, {"s0"}));
               const Program q1(&s, Relation::from_pairs(&s, {{"s0", "s0"}, {"s1", "s0"}}),
                                Condition::of(&s, {"s0", "s1"}));
               const Program p2(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                Condition::of(&s, {"s0"}));
               return implied(refines(q1, p1),
                              refines(atomic_concurrency(q1, p2), atomic_concurrency(p1, p2)));
             }}},
       .notes = "the commutative half is true (the operator is symmetric by construction) and "
                "is covered by the unit suite"});
  add({.id = "P33",
       .claim = "atomic concurrency distributes over choice from the left (canonical choice "
                "operands)",
       .prog_slots = {SlotReq::Any, SlotReq::Normal, SlotReq::Normal},
       .check = [EQ](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &p3 = in.progs[2];
         return EQ(atomic_concurrency(p1, choice(p2, p3)),
                   choice(atomic_concurrency(p1, p2), atomic_concurrency(p1, p3)));
       }});
  add({.id = "P34",
       .claim = "atomic concurrency distributes over choice from the right (canonical choice "
                "operands)",
       .prog_slots = {SlotReq::Normal, SlotReq::Normal, SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &p3 = in.progs[2];
         return EQ(atomic_concurrency(choice(p1, p2), p3),
                   choice(atomic_concurrency(p1, p3), atomic_concurrency(p2, p3)));
       }});
  add({.id = "P35",
       .claim = "restriction enters concurrency one-sided: C:(p1||p2) = (C:p1)||p2",
       .expected = Expect::Fails,
       .witnesses = {{"C={s0}, p1=<{(s0,s1)},{s0}>, p2=<{(s1,s0)},{s1}>: the right side keeps "
                      "the interleaving that starts with p2 outside C",
                      []() {
                        StateSpace s("S2", {"s0", "s1"});
                        const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                         Condition::of(&s, {"s0"}));
                        const Program p2(&s, Relation::from_pairs(&s, {{"s1", "s0"}}),
                                         Condition::of(&s, {"s1"}));
                        const Condition c = Condition::of(&s, {"s0"});
                        return outcome_of(restrict(c, atomic_concurrency(p1, p2)) ==
                                          atomic_concurrency(restrict(c, p1), p2));
                      }}},
       .notes = "the two-sided identity C:(p1||p2) = ((C:p1);p2) | ((C:p2);p1) is exact for all "
                "operands and is covered by the unit suite"});
  add({.id = "P36",
       .claim = "corestriction leaves concurrency one-sided: (p1||p2)\\C = p1||(p2\\C)",
       .expected = Expect::Fails,
       .witnesses = {{"C={s0}, p1=<{(s0,s1)},{s0}>, p2=<{(s1,s0)},{s1}>: the right side keeps "
                      "outcomes of p1 outside C",
                      []() {
                        StateSpace s("S2", {"s0", "s1"});
                        const Program p1(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                         Condition::of(&s, {"s0"}));
                        const Program p2(&s, Relation::from_pairs(&s, {{"s1", "s0"}}),
                                         Condition::of(&s, {"s1"}));
                        const Condition c = Condition::of(&s, {"s0"});
                        return outcome_of(corestrict(atomic_concurrency(p1, p2), c) ==
                                          atomic_concurrency(p1, corestrict(p2, c)));
                      }}},
       .notes = "the two-sided identity (p1||p2)\\C = (p1;(p2\\C)) | (p2;(p1\\C)) holds for "
                "canonical operands and is covered by the unit suite"});
  add({.id = "P37",
       .claim = "a composition is contained in the concurrency of its operands, componentwise",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [contained](const LawInstance& in) {
         return outcome_of(contained(seq(in.progs[0], in.progs[1]),
                                     atomic_concurrency(in.progs[0], in.progs[1])));
       }});
  add({.id = "P38",
       .claim = "the reversed composition is contained in the concurrency, componentwise",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [contained](const LawInstance& in) {
         return outcome_of(contained(seq(in.progs[1], in.progs[0]),
                                     atomic_concurrency(in.progs[0], in.progs[1])));
       }});
  add({.id = "P39",
       .claim = "commuting programs collapse concurrency to composition",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1];
         return implied(commutes(p1, p2), atomic_concurrency(p1, p2) == seq(p1, p2));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program p1 = random_program(in.space, rng);
         in.progs.push_back(p1);
         switch (rng() & 3u) {
           case 0: in.progs.push_back(p1); break;
           case 1: in.progs.push_back(skip_program(in.space)); break;
           default: in.progs.push_back(random_program(in.space, rng)); break;
         }
       }});
  add({.id = "P40",
       .claim = "non-atomic concurrency over two steps is the three-way interleaving choice "
                "(canonical operands)",
       .prog_slots = {SlotReq::Normal, SlotReq::Normal, SlotReq::Normal},
       .check = [EQ](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &q = in.progs[2];
         const Program expect = choice(choice(seq(seq(q, p1), p2), seq(seq(p1, q), p2)),
                                       seq(seq(p1, p2), q));
         return EQ(nonatomic_concurrency(std::vector<Program>{p1, p2}, q), expect);
       }});
  add({.id = "P41",
       .claim = "((p1||q);p2) is contained in ((p1,p2)||q), componentwise",
       .prog_slots = {SlotReq::Any, SlotReq::Any, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [contained](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &q = in.progs[2];
         return outcome_of(contained(seq(atomic_concurrency(p1, q), p2),
                                     nonatomic_concurrency(std::vector<Program>{p1, p2}, q)));
       }});
  add({.id = "P42",
       .claim = "(p1;(p2||q)) is contained in ((p1,p2)||q), componentwise",
       .prog_slots = {SlotReq::Any, SlotReq::Any, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [contained](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &q = in.progs[2];
         return outcome_of(contained(seq(p1, atomic_concurrency(p2, q)),
                                     nonatomic_concurrency(std::vector<Program>{p1, p2}, q)));
       }});
  add({.id = "P43",
       .claim = "((p||q1);q2) is contained in ((q1,q2)||p), componentwise",
       .prog_slots = {SlotReq::Any, SlotReq::Any, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [contained](const LawInstance& in) {
         const Program &p = in.progs[0], &q1 = in.progs[1], &q2 = in.progs[2];
         return outcome_of(contained(seq(atomic_concurrency(p, q1), q2),
                                     nonatomic_concurrency(std::vector<Program>{q1, q2}, p)));
       }});

  // P44–P55: conditionals -------------------------------------------------
  add({.id = "P44",
       .claim = "guarded branches commute",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 2,
       .check = [EQ, gc2](const LawInstance& in) {
         return EQ(gc2(in.conds[0], in.progs[0], in.conds[1], in.progs[1]),
                   gc2(in.conds[1], in.progs[1], in.conds[0], in.progs[0]));
       }});
  add({.id = "P45",
       .claim = "guarded conditionals regroup: three branches equal either two-step grouping",
       .prog_slots = {SlotReq::Any, SlotReq::Any, SlotReq::Any},
       .cond_slots = 3,
       .check = [gc2](const LawInstance& in) {
         const Program gc3 = guarded_conditional(std::vector<std::pair<Condition, Program>>{
             {in.conds[0], in.progs[0]}, {in.conds[1], in.progs[1]}, {in.conds[2], in.progs[2]}});
         const Program left = choice(gc2(in.conds[0], in.progs[0], in.conds[1], in.progs[1]),
                                     restrict(in.conds[2], in.progs[2]));
         const Program right = choice(restrict(in.conds[0], in.progs[0]),
                                      gc2(in.conds[1], in.progs[1], in.conds[2], in.progs[2]));
         return outcome_of(gc3 == left && gc3 == right);
       }});
  add({.id = "P46",
       .claim = "conditionals distribute over choice, and branch-wise over concurrency "
                "(interpreted)",
       .prog_slots = {SlotReq::Normal, SlotReq::Normal, SlotReq::Any},
       .cond_slots = 2,
       .check = [EQ, gc2](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1], &q = in.progs[2];
         const Condition &c1 = in.conds[0], &c2 = in.conds[1];
         const bool choice_ite =
             if_then_else(c1, choice(p1, p2), q) ==
             choice(if_then_else(c1, p1, q), if_then_else(c1, p2, q));
         const bool choice_gc = gc2(c1, choice(p1, p2), c2, q) ==
                                choice(gc2(c1, p1, c2, q), gc2(c1, p2, c2, q));
         const bool conc_gc =
             atomic_concurrency(gc2(c1, p1, c2, p2), q) ==
             choice(atomic_concurrency(restrict(c1, p1), q),
                    atomic_concurrency(restrict(c2, p2), q));
         const bool conc_ite =
             atomic_concurrency(if_then_else(c1, p1, p2), q) ==
             choice(atomic_concurrency(restrict(c1, p1), q),
                    atomic_concurrency(restrict(cond_not(c1), p2), q));
         return outcome_of(choice_ite && choice_gc && conc_gc && conc_ite);
       },
       .notes = "the choice parts are exact for all operands; the concurrency parts are the "
                "branch-wise reading and need canonical branch bodies"});
  add({.id = "P47",
       .claim = "widening disjoint guards refines: D1⊆C1, D2⊆C2, C1∩C2=∅ imply the C-guarded "
                "conditional refines the D-guarded one",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 4,
       .eq = EqMode::Predicate,
       .check = [gc2](const LawInstance& in) {
         const Condition &c1 = in.conds[0], &c2 = in.conds[1], &d1 = in.conds[2],
                         &d2 = in.conds[3];
         const bool ante = cond_implies(d1, c1) && cond_implies(d2, c2) && cond_disjoint(c1, c2);
         return implied(ante, refines(gc2(c1, in.progs[0], c2, in.progs[1]),
                                      gc2(d1, in.progs[0], d2, in.progs[1])));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         in.progs.push_back(random_program(in.space, rng));
         in.progs.push_back(random_program(in.space, rng));
         const Condition c1 = random_condition(in.space, rng);
         const Condition c2 = cond_and(cond_not(c1), random_condition(in.space, rng));
         in.conds.push_back(c1);
         in.conds.push_back(c2);
         in.conds.push_back(cond_and(c1, random_condition(in.space, rng)));
         in.conds.push_back(cond_and(c2, random_condition(in.space, rng)));
       },
       .notes = "without guard disjointness the overlap region unions both branches and the "
                "refinement can fail (P21's failure mode)"});
  add({.id = "P48",
       .claim = "guarded conditional with disjoint guards is refinement-safe branch-wise",
       .prog_slots = {SlotReq::Any, SlotReq::Any, SlotReq::Any, SlotReq::Any},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [gc2](const LawInstance& in) {
         const Program &q1 = in.progs[0], &q2 = in.progs[1], &p1 = in.progs[2], &p2 = in.progs[3];
         const Condition &c1 = in.conds[0], &c2 = in.conds[1];
         const bool ante = refines(q1, p1) && refines(q2, p2) && cond_disjoint(c1, c2);
         return implied(ante, refines(gc2(c1, q1, c2, q2), gc2(c1, p1, c2, p2)));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program p1 = random_program(in.space, rng);
         const Program p2 = random_program(in.space, rng);
         in.progs.push_back(random_refinement(p1, rng));
         in.progs.push_back(random_refinement(p2, rng));
         in.progs.push_back(p1);
         in.progs.push_back(p2);
         const Condition c1 = random_condition(in.space, rng);
         in.conds.push_back(c1);
         in.conds.push_back(cond_and(cond_not(c1), random_condition(in.space, rng)));
       }});
  add({.id = "P49",
       .claim = "if-then-else is refinement-safe branch-wise",
       .prog_slots = {SlotReq::Any, SlotReq::Any, SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program &q1 = in.progs[0], &q2 = in.progs[1], &p1 = in.progs[2], &p2 = in.progs[3];
         const bool ante = refines(q1, p1) && refines(q2, p2);
         return implied(ante, refines(if_then_else(in.conds[0], q1, q2),
                                      if_then_else(in.conds[0], p1, p2)));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program p1 = random_program(in.space, rng);
         const Program p2 = random_program(in.space, rng);
         in.progs.push_back(random_refinement(p1, rng));
         in.progs.push_back(random_refinement(p2, rng));
         in.progs.push_back(p1);
         in.progs.push_back(p2);
         in.conds.push_back(random_condition(in.space, rng));
       },
       .notes = "needs no disjointness hypothesis: the two branch guards are complementary by "
                "construction"});
  add({.id = "P50",
       .claim = "if-then-else swaps branches under negation",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(if_then_else(in.conds[0], in.progs[0], in.progs[1]),
                   if_then_else(cond_not(in.conds[0]), in.progs[1], in.progs[0]));
       }});
  add({.id = "P51",
       .claim = "a one-branch guarded conditional is a restriction",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(guarded_conditional(std::vector<std::pair<Condition, Program>>{
                       {in.conds[0], in.progs[0]}}),
                   restrict(in.conds[0], in.progs[0]));
       }});
  add({.id = "P52",
       .claim = "a disjoint-guard conditional refines each branch restriction",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [gc2](const LawInstance& in) {
         const Condition &c1 = in.conds[0], &c2 = in.conds[1];
         return implied(cond_disjoint(c1, c2),
                        refines(gc2(c1, in.progs[0], c2, in.progs[1]),
                                restrict(c1, in.progs[0])));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         in.progs.push_back(random_program(in.space, rng));
         in.progs.push_back(random_program(in.space, rng));
         const Condition c1 = random_condition(in.space, rng);
         in.conds.push_back(c1);
         in.conds.push_back(cond_and(cond_not(c1), random_condition(in.space, rng)));
       },
       .notes = "overlapping guards break it: both branches apply on the overlap and the union "
                "adds outcomes"});
  add({.id = "P53",
       .claim = "restriction distributes into the guards",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 3,
       .check = [EQ, gc2](const LawInstance& in) {
         const Condition &d = in.conds[0], &c1 = in.conds[1], &c2 = in.conds[2];
         return EQ(restrict(d, gc2(c1, in.progs[0], c2, in.progs[1])),
                   gc2(cond_and(d, c1), in.progs[0], cond_and(d, c2), in.progs[1]));
       }});
  add({.id = "P54",
       .claim = "if-then-else is the guarded conditional over a condition and its complement",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ, gc2](const LawInstance& in) {
         return EQ(if_then_else(in.conds[0], in.progs[0], in.progs[1]),
                   gc2(in.conds[0], in.progs[0], cond_not(in.conds[0]), in.progs[1]));
       }});
  add({.id = "P55",
       .claim = "if-then-else swaps branches under negation (restatement of P50)",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .check = [EQ](const LawInstance& in) {
         return EQ(if_then_else(in.conds[0], in.progs[0], in.progs[1]),
                   if_then_else(cond_not(in.conds[0]), in.progs[1], in.progs[0]));
       },
       .notes = "kept under its own id so the law numbering stays contiguous"});

  // P56–P62: condition laws ------------------------------------------------
  add({.id = "P56",
       .claim = "restriction by the full condition is identity",
       .prog_slots = {SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         return EQ(restrict(Condition::full(in.space), in.progs[0]), in.progs[0]);
       }});
  add({.id = "P57",
       .claim = "restriction by the empty condition is fail",
       .prog_slots = {SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         return EQ(restrict(Condition::empty(in.space), in.progs[0]), fail_program(in.space));
       }});
  add({.id = "P58",
       .claim = "corestriction by the full condition is identity on feasible programs",
       .prog_slots = {SlotReq::Feasible},
       .check = [EQ](const LawInstance& in) {
         return EQ(corestrict(in.progs[0], Condition::full(in.space)), in.progs[0]);
       },
       .notes = "an infeasible program forfeits the unreachable part of its precondition"});
  add({.id = "P59",
       .claim = "corestriction by the empty condition is fail",
       .prog_slots = {SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         return EQ(corestrict(in.progs[0], Condition::empty(in.space)), fail_program(in.space));
       }});
  add({.id = "P60",
       .claim = "if true then p1 else p2 end = p1",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         return EQ(if_then_else(Condition::full(in.space), in.progs[0], in.progs[1]),
                   in.progs[0]);
       }});
  add({.id = "P61",
       .claim = "if false then p1 else p2 end = p2",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .check = [EQ](const LawInstance& in) {
         return EQ(if_then_else(Condition::empty(in.space), in.progs[0], in.progs[1]),
                   in.progs[1]);
       }});
  add({.id = "P62",
       .claim = "condition algebra embeds into restrictions: union, intersection, double "
                "negation",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .check = [](const LawInstance& in) {
         const Condition &c = in.conds[0], &d = in.conds[1];
         const Program& p = in.progs[0];
         const bool u = restrict(cond_or(c, d), p) == choice(restrict(c, p), restrict(d, p));
         const bool i = restrict(cond_and(c, d), p) == restrict(c, restrict(d, p));
         const bool n = restrict(cond_not(cond_not(c)), p) == restrict(c, p);
         return outcome_of(u && i && n);
       }});

  // P63–P69: loops and invariants -------------------------------------------
  add({.id = "P63",
       .claim = "a while loop is the union of its unrollings, and its range the union of their "
                "ranges (canonical body)",
       .prog_slots = {SlotReq::Any, SlotReq::Normal},
       .cond_slots = 1,
       .check = [](const LawInstance& in) {
         const LoopSpec ls(in.progs[0], in.conds[0], in.progs[1]);
         const Program l = while_loop(ls);
         const int horizon = repetition_horizon(restrict(cond_not(ls.exit), ls.body));
         Program acc = fail_program(in.space);
         Condition ranges = Condition::empty(in.space);
         for (int i = 0; i <= horizon; ++i) {
           const Program qi = loop_unrolling(ls, static_cast<unsigned>(i));
           acc = choice(acc, qi);
           ranges = cond_or(ranges, program_range(qi));
         }
         return outcome_of(acc == l && ranges == program_range(l));
       },
       .notes = "junk in the body leaks differently into the two sides, hence the canonical "
                "body requirement; see the unit suite for the frozen counterexample"});
  add({.id = "P64",
       .claim = "conditions disjoint from the precondition are invariants",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         return implied(cond_disjoint(in.conds[0], in.progs[0].pre()),
                        is_invariant(in.conds[0], in.progs[0]));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program p = random_program(in.space, rng);
         in.progs.push_back(p);
         Condition i = random_condition(in.space, rng);
         if (rng() & 1) i = cond_and(i, cond_not(p.pre()));
         in.conds.push_back(i);
       }});
  add({.id = "P65",
       .claim = "invariants are closed under union and intersection",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program& p = in.progs[0];
         const Condition &i = in.conds[0], &j = in.conds[1];
         return implied(is_invariant(i, p) && is_invariant(j, p),
                        is_invariant(cond_or(i, j), p) && is_invariant(cond_and(i, j), p));
       },
       .gen = [invariant_closure](LawInstance& in, std::mt19937_64& rng) {
         const Program p = random_program(in.space, rng);
         in.progs.push_back(p);
         for (int k = 0; k < 2; ++k) {
           Condition c = random_condition(in.space, rng);
           if (rng() & 1) c = invariant_closure(p, c);
           in.conds.push_back(c);
         }
       }});
  add({.id = "P66",
       .claim = "a refinement restricted to the specification's precondition preserves its "
                "invariants",
       .prog_slots = {SlotReq::Any, SlotReq::Any},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1];
         const Condition& i = in.conds[0];
         return implied(is_invariant(i, p1) && refines(p2, p1),
                        is_invariant(i, restrict(p1.pre(), p2)));
       },
       .gen = [invariant_closure](LawInstance& in, std::mt19937_64& rng) {
         const Program p1 = random_program(in.space, rng);
         in.progs.push_back(p1);
         in.progs.push_back(random_refinement(p1, rng));
         Condition i = random_condition(in.space, rng);
         if (rng() & 1) i = invariant_closure(p1, i);
         in.conds.push_back(i);
       }});
  add({.id = "P67",
       .claim = "every operator preserves joint invariants of its operands (canonical operands)",
       .prog_slots = {SlotReq::Normal, SlotReq::Normal},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [gc2](const LawInstance& in) {
         const Program &p1 = in.progs[0], &p2 = in.progs[1];
         const Condition &c = in.conds[0], &i = in.conds[1];
         if (!(is_invariant(i, p1) && is_invariant(i, p2))) return Outcome::Vacuous;
         const bool all = is_invariant(i, choice(p1, p2)) &&
                          is_invariant(i, internal_choice(p1, p2)) &&
                          is_invariant(i, seq(p1, p2)) && is_invariant(i, restrict(c, p1)) &&
                          is_invariant(i, corestrict(p1, c)) &&
                          is_invariant(i, atomic_concurrency(p1, p2)) &&
                          is_invariant(i, gc2(c, p1, cond_not(c), p2)) &&
                          is_invariant(i, if_then_else(c, p1, p2)) &&
                          is_invariant(i, fixed_repetition(p1, 2)) &&
                          is_invariant(i, arbitrary_repetition(p1)) &&
                          is_invariant(i, while_loop(LoopSpec(p1, c, p2)));
         return outcome_of(all);
       },
       .gen = [invariant_closure](LawInstance& in, std::mt19937_64& rng) {
         const Program p1 = random_normal_program(in.space, rng);
         const Program p2 = random_normal_program(in.space, rng);
         in.progs.push_back(p1);
         in.progs.push_back(p2);
         in.conds.push_back(random_condition(in.space, rng));
         Condition i = random_condition(in.space, rng);
         if (rng() & 1) {
           // Joint closure: iterate both programs' image maps to a fixpoint.
           for (;;) {
             const Condition next = invariant_closure(p2, invariant_closure(p1, i));
             if (next == i) break;
             i = next;
           }
         }
         in.conds.push_back(i);
       },
       .notes = "choice-shaped operators need canonical operands (junk breaks even plain "
                "choice); composition, restriction and corestriction preserve invariants "
                "unconditionally, as the unit suite checks"});
  add({.id = "P68",
       .claim = "on exit, a loop satisfies its exit condition and every loop invariant "
                "(canonical body)",
       .prog_slots = {SlotReq::Any, SlotReq::Normal},
       .cond_slots = 2,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const LoopSpec ls(in.progs[0], in.conds[0], in.progs[1]);
         const Condition& i = in.conds[1];
         if (!is_loop_invariant(i, ls)) return Outcome::Vacuous;
         return outcome_of(check_loop_correctness(ls, i).verdict == LoopVerdict::Pass);
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program a = random_program(in.space, rng);
         const Program b = random_normal_program(in.space, rng);
         const Condition c = random_condition(in.space, rng);
         in.progs.push_back(a);
         in.progs.push_back(b);
         in.conds.push_back(c);
         if (rng() & 1) {
           // Least loop invariant: start from the initialization's range and
           // close under the guarded body.
           const Program guarded = restrict(cond_not(c), b);
           Condition i = program_range(a);
           for (;;) {
             const Condition next = cond_or(i, image(guarded.post(), cond_and(i, guarded.pre())));
             if (next == i) break;
             i = next;
           }
           in.conds.push_back(i);
         } else {
           in.conds.push_back(random_condition(in.space, rng));
         }
       },
       .notes = "a junk body pair whose target sits in the exit condition escapes the invariant "
                "after one iteration, hence the canonical body requirement; the frozen "
                "counterexample lives in the unit suite"});
  add({.id = "P69",
       .claim = "invariant coverage plus a well-founded guarded body imply loop feasibility",
       .prog_slots = {SlotReq::Feasible, SlotReq::FeasibleNormal},
       .cond_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const LoopSpec ls(in.progs[0], in.conds[0], in.progs[1]);
         try {
           const LoopFeasibility f = check_loop_feasibility(ls);
           if (!f.ok) return Outcome::Vacuous;
           return implied(f.sufficient, f.direct);
         } catch (const ModelError&) {
           // check_loop_feasibility asserts this very law internally.
           return Outcome::Fails;
         }
       }});

  // P70–P79: contracts ---------------------------------------------------
  add({.id = "P70",
       .claim = "correctness survives weakening: smaller required set, larger target",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .rel_slots = 2,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program& b = in.progs[0];
         const Condition &pre1 = in.conds[0], &pre2 = in.conds[1];
         const Relation &post1 = in.rels[0], &post2 = in.rels[1];
         const bool ante = rel_subset(post1, post2) && cond_implies(pre2, pre1) &&
                           is_correct(ContractedProgram(pre1, post1, b)).correct;
         return implied(ante, is_correct(ContractedProgram(pre2, post2, b)).correct);
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         if (rng() & 1) {
           const Program b = random_feasible_program(in.space, rng);
           const Relation post1 = rel_union(b.post(), random_relation(in.space, rng));
           const Condition pre1 = cond_and(b.pre(), random_condition(in.space, rng));
           in.progs.push_back(b);
           in.conds.push_back(pre1);
           in.conds.push_back(cond_and(pre1, random_condition(in.space, rng)));
           in.rels.push_back(post1);
           in.rels.push_back(rel_union(post1, random_relation(in.space, rng)));
         } else {
           in.progs.push_back(random_program(in.space, rng));
           in.conds.push_back(random_condition(in.space, rng));
           in.conds.push_back(random_condition(in.space, rng));
           in.rels.push_back(random_relation(in.space, rng));
           in.rels.push_back(random_relation(in.space, rng));
         }
       }});
  add({.id = "P71",
       .claim = "a correct body squeezes between strongest postcondition and weakest "
                "precondition",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .rel_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program& b = in.progs[0];
         const Condition& pre = in.conds[0];
         const Relation& post = in.rels[0];
         const bool ante = is_correct(ContractedProgram(pre, post, b)).correct;
         return implied(ante, rel_subset(sp(b, pre), post) && cond_implies(pre, wp(b, post)));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         if (rng() & 1) {
           const Program b = random_feasible_program(in.space, rng);
           in.progs.push_back(b);
           in.conds.push_back(cond_and(b.pre(), random_condition(in.space, rng)));
           in.rels.push_back(rel_union(b.post(), random_relation(in.space, rng)));
         } else {
           in.progs.push_back(random_program(in.space, rng));
           in.conds.push_back(random_condition(in.space, rng));
           in.rels.push_back(random_relation(in.space, rng));
         }
       }});
  add({.id = "P72",
       .claim = "the two correctness formulations agree",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 1,
       .rel_slots = 1,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const ContractedProgram cp(in.conds[0], in.rels[0], in.progs[0]);
         return outcome_of(correct_by_definition(cp) == correct_by_formula(cp));
       }});
  add({.id = "P73",
       .claim = "sp of the empty precondition is the empty relation",
       .prog_slots = {SlotReq::Any},
       .check = [](const LawInstance& in) {
         return outcome_of(sp(in.progs[0], Condition::empty(in.space)) ==
                           Relation::empty(in.space));
       }});
  add({.id = "P74",
       .claim = "wp of the empty target is the empty condition",
       .prog_slots = {SlotReq::Any},
       .check = [](const LawInstance& in) {
         return outcome_of(wp(in.progs[0], Relation::empty(in.space)) ==
                           Condition::empty(in.space));
       }});
  add({.id = "P75",
       .claim = "sp of fail is empty",
       .cond_slots = 1,
       .check = [](const LawInstance& in) {
         return outcome_of(sp(fail_program(in.space), in.conds[0]) == Relation::empty(in.space));
       }});
  add({.id = "P76",
       .claim = "wp of fail is empty",
       .rel_slots = 1,
       .check = [](const LawInstance& in) {
         return outcome_of(wp(fail_program(in.space), in.rels[0]) == Condition::empty(in.space));
       }});
  add({.id = "P77",
       .claim = "sp distributes over condition union",
       .prog_slots = {SlotReq::Any},
       .cond_slots = 2,
       .check = [](const LawInstance& in) {
         return outcome_of(sp(in.progs[0], cond_or(in.conds[0], in.conds[1])) ==
                           rel_union(sp(in.progs[0], in.conds[0]),
                                     sp(in.progs[0], in.conds[1])));
       }});
  add({.id = "P78",
       .claim = "wp over a union of targets covers the union of wps (inclusion can be strict)",
       .prog_slots = {SlotReq::Any},
       .rel_slots = 2,
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program& b = in.progs[0];
         const Relation &r = in.rels[0], &s = in.rels[1];
         return outcome_of(cond_implies(cond_or(wp(b, r), wp(b, s)),
                                        wp(b, rel_union(r, s))));
       },
       .notes = "strictness witness in the unit suite: a two-outcome state satisfies the union "
                "of two singleton targets without satisfying either"});
  add({.id = "P79",
       .claim = "the most abstract implementation is correct, and every implementation refines "
                "its body",
       .prog_slots = {SlotReq::Feasible, SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program &p = in.progs[0], &q = in.progs[1];
         const ContractedProgram mai = most_abstract_implementation(p);
         if (!is_correct(mai).correct) return Outcome::Fails;
         if (!(refines(q, p) && is_feasible(q))) return Outcome::Holds;
         return outcome_of(refines(q, mai.body));
       },
       .gen = [](LawInstance& in, std::mt19937_64& rng) {
         const Program p = random_feasible_program(in.space, rng);
         in.progs.push_back(p);
         in.progs.push_back((rng() & 1) ? random_implementation(p, rng)
                                        : random_program(in.space, rng));
       }});
  add({.id = "P80",
       .claim = "feasibility is exactly: every required state is trivial or relevant",
       .prog_slots = {SlotReq::Any},
       .eq = EqMode::Predicate,
       .check = [](const LawInstance& in) {
         const Program& p = in.progs[0];
         bool all_useful = true;
         for (int s = 0; s < in.space->size(); ++s)
           if (p.pre().contains(s) &&
               classify_state(p, s) == StateKind::IrrelevantNontrivial)
             all_useful = false;
         return outcome_of(is_feasible(p) == all_useful);
       }});

  // Expected-failure extras ------------------------------------------------
  add({.id = "naive-composition",
       .claim = "sequential composition is the bare relational product of the postconditions "
                "over the first precondition",
       .expected = Expect::Fails,
       .witnesses = {{"p1=<{(s1,s1),(s1,s2)},{s1}>, p2=<{(s1,s1),(s2,s2)},{s1}>: the bare "
                      "product is {(s1,s1),(s1,s2)} but composition must drop the outcome "
                      "(s1,s2) whose midpoint s2 the second step does not accept, giving "
                      "<{(s1,s1)},{s1}>",
                      []() {
                        StateSpace s("S3", {"s0", "s1", "s2"});
                        const Program p1(&s,
                                         Relation::from_pairs(&s, {{"s1", "s1"}, {"s1", "s2"}}),
                                         Condition::of(&s, {"s1"}));
                        const Program p2(&s,
                                         Relation::from_pairs(&s, {{"s1", "s1"}, {"s2", "s2"}}),
                                         Condition::of(&s, {"s1"}));
                        const Program naive(&s, rel_compose(p1.post(), p2.post()), p1.pre());
                        return outcome_of(seq(p1, p2) == naive);
                      }}},
       .notes = "the composed precondition also shrinks to states guaranteed to reach the "
                "second step's precondition"});
  add({.id = "intersection-refinement-safety",
       .claim = "the intersection of implementations implements the intersection of the "
                "specifications",
       .expected = Expect::Fails,
       .witnesses = {{"p1=p2=<{(s0,s0),(s0,s1)},{s0}>, q1=<{(s0,s0)},{s0}>, q2=<{(s0,s1)},{s0}>: "
                      "q1∩q2 = <{},{s0}> still refines p1∩p2 but is infeasible, so it is no "
                      "implementation",
                      []() {
                        StateSpace s("S2", {"s0", "s1"});
                        const Program p(&s,
                                        Relation::from_pairs(&s, {{"s0", "s0"}, {"s0", "s1"}}),
                                        Condition::of(&s, {"s0"}));
                        const Program q1(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                         Condition::of(&s, {"s0"}));
                        const Program q2(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                         Condition::of(&s, {"s0"}));
                        const Program qq = program_intersection(q1, q2);
                        const Program pp = program_intersection(p, p);
                        const bool implementation = refines(qq, pp) && is_feasible(qq);
                        return outcome_of(implementation);
                      }}},
       .notes = "refinement itself survives intersection; feasibility is what dies, which is "
                "why intersection is no implementation mechanism"});
  add({.id = "difference-refinement-safety",
       .claim = "program difference is refinement-safe",
       .expected = Expect::Fails,
       .witnesses = {{"p1=p2=<{(s0,s0),(s0,s1)},{s0}>, q1=<{(s0,s0)},{s0}>, q2=<{(s0,s1)},{s0}>: "
                      "q1−q2 = <{(s0,s0)},{s0}> does not refine p1−p2 = <{},{s0}>",
                      []() {
                        StateSpace s("S2", {"s0", "s1"});
                        const Program p(&s,
                                        Relation::from_pairs(&s, {{"s0", "s0"}, {"s0", "s1"}}),
                                        Condition::of(&s, {"s0"}));
                        const Program q1(&s, Relation::from_pairs(&s, {{"s0", "s0"}}),
                                         Condition::of(&s, {"s0"}));
                        const Program q2(&s, Relation::from_pairs(&s, {{"s0", "s1"}}),
                                         Condition::of(&s, {"s0"}));
                        const bool ante = refines(q1, p) && refines(q2, p);
                        return implied(ante, refines(program_difference(q1, q2),
                                                     program_difference(p, p)));
                      }}}});
  add({.id = "P14-demonic",
       .claim = "fail is an identity of internal choice",
       .expected = Expect::Fails,
       .witnesses = {{"skip & fail = <identity,{}> loses skip's precondition: the demonic "
                      "combination must be prepared for either branch",
                      []() {
                        StateSpace s("S2", {"s0", "s1"});
                        const Program sk = skip_program(&s);
                        return outcome_of(internal_choice(sk, fail_program(&s)) == sk);
                      }}}});
  add({.id = "internal-choice-P11",
       .claim = "composition distributes over internal choice from the left",
       .expected = Expect::Fails,
       .witnesses = {{"q=<{(s0,s1),(s0,s2)},{s0}>, p1=<{(s1,s0)},{s1}>, p2=<{(s2,s0)},{s2}>: "
                      "q;(p1&p2) has precondition {} while (q;p1)&(q;p2) has {s0}",
                      []() {
                        StateSpace s("S3", {"s0", "s1", "s2"});
                        const Program q(&s,
                                        Relation::from_pairs(&s, {{"s0", "s1"}, {"s0", "s2"}}),
                                        Condition::of(&s, {"s0"}));
                        const Program p1(&s, Relation::from_pairs(&s, {{"s1", "s0"}}),
                                         Condition::of(&s, {"s1"}));
                        const Program p2(&s, Relation::from_pairs(&s, {{"s2", "s0"}}),
                                         Condition::of(&s, {"s2"}));
                        return outcome_of(seq(q, internal_choice(p1, p2)) ==
                                          internal_choice(seq(q, p1), seq(q, p2)));
                      }}}});

  return laws;
}

inline const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws = build_law_registry();
  return laws;
}

inline const Law* find_law(const std::string& id) {
  for (const auto& law : law_registry())
    if (law.id == id) return &law;
  return nullptr;
}

inline std::vector<std::string> law_ids() {
  std::vector<std::string> ids;
  for (const auto& law : law_registry()) ids.push_back(law.id);
  return ids;
}

// The registry must carry exactly P6..P80 plus the named expected-failure
// extras; anything else is a wiring bug.
inline void validate_registry() {
  std::set<std::string> ids;
  for (const auto& law : law_registry()) {
    if (!ids.insert(law.id).second) throw ModelError("duplicate law id " + law.id);
    if (law.expected == Expect::Fails) {
      if (law.witnesses.empty()) throw ModelError("law " + law.id + " expects failure but has no witness");
    } else {
      if (!law.check) throw ModelError("law " + law.id + " has no checker");
    }
  }
  std::set<std::string> expected;
  for (int i = 6; i <= 80; ++i) expected.insert("P" + std::to_string(i));
  for (const char* extra : {"naive-composition", "intersection-refinement-safety",
                            "difference-refinement-safety", "P14-demonic", "internal-choice-P11"})
    expected.insert(extra);
  if (ids != expected) {
    std::string msg = "law registry mismatch;";
    for (const auto& id : expected)
      if (!ids.count(id)) msg += " missing " + id;
    for (const auto& id : ids)
      if (!expected.count(id)) msg += " unexpected " + id;
    throw ModelError(msg);
  }
}

inline LawReport check_law(const std::string& id, const LawConfig& config) {
  const Law* law = find_law(id);
  if (!law) {
    std::string msg = "unknown law '" + id + "'; known ids:";
    for (const auto& known : law_ids()) msg += " " + known;
    throw ModelError(msg);
  }
  return check_law(*law, config);
}

struct SuiteReport {
  std::vector<LawReport> reports;
  bool all_ok = true;
};

inline SuiteReport run_suite(const LawConfig& config,
                             const std::vector<std::string>& filter = {}) {
  validate_registry();
  SuiteReport suite;
  for (const auto& law : law_registry()) {
    if (!filter.empty()) {
      bool wanted = false;
      for (const auto& id : filter) wanted |= id == law.id;
      if (!wanted) continue;
    }
    LawReport report = check_law(law, config);
    suite.all_ok = suite.all_ok && report.ok;
    suite.reports.push_back(std::move(report));
  }
  return suite;
}

}  // namespace tp

#endif
