#ifndef TP_LOOPS_HPP
#define TP_LOOPS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tp/program.hpp"

namespace tp {

// "from a until C loop b end": initialization a, exit condition C, body b.
struct LoopSpec {
  Program init;
  Condition exit;
  Program body;

  LoopSpec(Program a, Condition c, Program b)
      : init(std::move(a)), exit(std::move(c)), body(std::move(b)) {
    require_same_space(init.space(), exit.space(), "loop");
    require_same_space(init.space(), body.space(), "loop");
  }

  const StateSpace* space() const { return init.space(); }
};

// p repeated exactly i times; zero repetitions are Skip.
inline Program fixed_repetition(const Program& p, unsigned i) {
  Program acc = skip_program(p.space());
  for (unsigned k = 0; k < i; ++k) acc = seq(p, acc);
  return acc;
}

// p repeated any number of times (including zero): the union of all powers.
// The power sequence over a finite space must revisit a value, after which
// it cycles, so accumulating until the first revisit is exact.
inline Program arbitrary_repetition(const Program& p) {
  Program cur = skip_program(p.space());
  Program acc = fail_program(p.space());
  std::vector<Program> seen;
  while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
    seen.push_back(cur);
    acc = choice(acc, cur);
    cur = seq(p, cur);
  }
  return acc;
}

// Number of distinct powers of p (the stabilization horizon of the above).
inline int repetition_horizon(const Program& p) {
  Program cur = skip_program(p.space());
  std::vector<Program> seen;
  while (std::find(seen.begin(), seen.end(), cur) == seen.end()) {
    seen.push_back(cur);
    cur = seq(p, cur);
  }
  return static_cast<int>(seen.size());
}

// while-loop: run a, then the body as long as the exit condition is false,
// insisting on ending inside the exit condition.
inline Program while_loop(const LoopSpec& ls) {
  const Program stepped = restrict(cond_not(ls.exit), ls.body);
  return seq(ls.init, corestrict(arbitrary_repetition(stepped), ls.exit));
}

// The i-th partial version of the loop: exactly i body iterations.
inline Program loop_unrolling(const LoopSpec& ls, unsigned i) {
  const Program stepped = restrict(cond_not(ls.exit), ls.body);
  return seq(ls.init, corestrict(fixed_repetition(stepped, i), ls.exit));
}

// I is an invariant of p: running p from a required I-state stays in I.
inline bool is_invariant(const Condition& i, const Program& p) {
  require_same_space(i.space(), p.space(), "is_invariant");
  return cond_implies(image(p.post(), cond_and(i, p.pre())), i);
}

// I is a loop invariant: the initialization establishes it (range of a is
// inside I) and the guarded body preserves it.
inline bool is_loop_invariant(const Condition& i, const LoopSpec& ls) {
  require_same_space(i.space(), ls.space(), "is_loop_invariant");
  return cond_implies(program_range(ls.init), i) &&
         is_invariant(i, restrict(cond_not(ls.exit), ls.body));
}

// --- verdicts ---------------------------------------------------------------

enum class LoopVerdict { Pass, Fail, NotLoopInvariant };

struct LoopCorrectness {
  LoopVerdict verdict;
  Condition offending;  // states in range(while) outside exit ∧ I; empty unless Fail
};

// On-exit goal of the loop: everything the loop can end in satisfies both
// the exit condition and the invariant. Reachable failures exist only for
// bodies whose postcondition carries pairs outside their precondition; a
// canonical (junk-free) body always passes once I is a loop invariant.
inline LoopCorrectness check_loop_correctness(const LoopSpec& ls, const Condition& i) {
  require_same_space(i.space(), ls.space(), "check_loop_correctness");
  if (!is_loop_invariant(i, ls))
    return {LoopVerdict::NotLoopInvariant, Condition::empty(ls.space())};
  const Condition range = program_range(while_loop(ls));
  const Condition goal = cond_and(ls.exit, i);
  const Condition offending = cond_diff(range, goal);
  if (offending.is_empty()) return {LoopVerdict::Pass, offending};
  return {LoopVerdict::Fail, offending};
}

struct LoopFeasibility {
  bool ok = false;          // false: init or body infeasible (see error)
  bool direct = false;      // every required start state can reach the exit
  bool sufficient = false;  // invariant + well-foundedness sufficient condition
  Condition stuck;          // witness: required start states that cannot exit
  std::string error;        // nonempty iff !ok
};

// Loop feasibility per the definition (every state the initialization is
// required to handle leads to termination) together with the checkable
// sufficient condition: pre(b) ∪ C is a loop invariant — i.e. the loop
// always sits at the exit or where the body is required (and, b being
// feasible, able) to act — and the guarded body admits no infinite run.
// The sufficient condition implies the direct one; that implication is
// asserted on every call.
inline LoopFeasibility check_loop_feasibility(const LoopSpec& ls) {
  LoopFeasibility out{false, false, false, Condition::empty(ls.space()), ""};
  if (!is_feasible(ls.init)) {
    out.error = "initialization is infeasible";
    return out;
  }
  if (!is_feasible(ls.body)) {
    out.error = "body is infeasible";
    return out;
  }
  out.ok = true;
  const Program l = while_loop(ls);
  out.direct = cond_implies(ls.init.pre(), l.pre());
  out.stuck = cond_diff(ls.init.pre(), l.pre());
  out.sufficient =
      is_loop_invariant(cond_or(ls.body.pre(), ls.exit), ls) &&
      is_well_founded(rel_restrict(ls.body.post(), cond_not(ls.exit)));
  if (out.sufficient && !out.direct)
    throw ModelError("loop feasibility theorem violated (sufficient without direct): " +
                     to_text(ls.init) + " until " + to_text(ls.exit) + " loop " +
                     to_text(ls.body));
  return out;
}

// A variant: a natural-number measure, total on the space.
class Variant {
 public:
  Variant(const StateSpace* space, const std::vector<std::pair<std::string, uint64_t>>& entries)
      : space_(space), v_{} {
    if (!space) throw ModelError("variant needs a state space");
    std::array<bool, kMaxAtoms> seen{};
    for (const auto& [atom, value] : entries) {
      const int i = space->index(atom);
      if (seen[static_cast<size_t>(i)]) throw ModelError("variant maps atom '" + atom + "' twice");
      seen[static_cast<size_t>(i)] = true;
      v_[static_cast<size_t>(i)] = value;
    }
    for (int i = 0; i < space->size(); ++i)
      if (!seen[static_cast<size_t>(i)])
        throw ModelError("variant is partial: atom '" + space->atom(i) + "' unmapped");
  }

  const StateSpace* space() const { return space_; }
  uint64_t at(int i) const { return v_[static_cast<size_t>(i)]; }

 private:
  const StateSpace* space_;
  std::array<uint64_t, kMaxAtoms> v_;
};

// v strictly decreases across every body step taken outside the exit
// condition. A passing variant makes the guarded body well-founded, and
// that implication is asserted on every call.
inline bool check_variant(const Variant& v, const LoopSpec& ls) {
  require_same_space(v.space(), ls.space(), "check_variant");
  const int n = ls.space()->size();
  bool pass = true;
  for (int s = 0; s < n && pass; ++s) {
    if (ls.exit.contains(s)) continue;
    for (int t = 0; t < n; ++t)
      if (ls.body.post().contains(s, t) && v.at(t) >= v.at(s)) {
        pass = false;
        break;
      }
  }
  if (pass && !is_well_founded(rel_restrict(ls.body.post(), cond_not(ls.exit))))
    throw ModelError("variant theorem violated: passing variant but cyclic guarded body");
  return pass;
}

}  // namespace tp

#endif
