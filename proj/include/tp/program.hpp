#ifndef TP_PROGRAM_HPP
#define TP_PROGRAM_HPP

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tp/relation.hpp"

namespace tp {

// A program over a state space S is a pair <post, Pre> of a postcondition
// relation on S and a precondition subset of S. Infeasible programs (some
// required start state has no outcome) are ordinary values here, never
// errors; feasibility is a predicate one can ask about.
class Program {
 public:
  Program(const StateSpace* space, Relation post, Condition pre)
      : space_(space), post_(std::move(post)), pre_(std::move(pre)) {
    if (!space) throw ModelError("program needs a state space");
    require_same_space(space_, post_.space(), "make_program(post)");
    require_same_space(space_, pre_.space(), "make_program(pre)");
  }

  const StateSpace* space() const { return space_; }
  const Relation& post() const { return post_; }
  const Condition& pre() const { return pre_; }

  friend bool operator==(const Program& a, const Program& b) {
    return a.space_ == b.space_ && a.pre_ == b.pre_ && a.post_ == b.post_;
  }
  friend bool operator!=(const Program& a, const Program& b) { return !(a == b); }

 private:
  const StateSpace* space_;
  Relation post_;
  Condition pre_;
};

inline Program make_program(const StateSpace* space, const Relation& post, const Condition& pre) {
  return Program(space, post, pre);
}

// --- special programs ------------------------------------------------------

enum class SpecialKind { Fail, Skip, Havoc };

inline Program fail_program(const StateSpace* s) {
  return Program(s, Relation::empty(s), Condition::empty(s));
}
inline Program skip_program(const StateSpace* s) {
  return Program(s, Relation::identity(s), Condition::full(s));
}
inline Program havoc_program(const StateSpace* s) {
  return Program(s, Relation::full(s), Condition::full(s));
}

inline Program special(SpecialKind k, const StateSpace* s) {
  switch (k) {
    case SpecialKind::Fail: return fail_program(s);
    case SpecialKind::Skip: return skip_program(s);
    case SpecialKind::Havoc: return havoc_program(s);
  }
  throw ModelError("unknown special program kind");
}

// --- basic queries ----------------------------------------------------------

// Domain of the postcondition (the set written p with a bar underneath in
// blackboard notation; rendered dom(p) here).
inline Condition program_dom(const Program& p) { return rel_dom(p.post()); }

// Range of the program: states reachable from the precondition.
inline Condition program_range(const Program& p) { return image(p.post(), p.pre()); }

// Feasible: every state the program is required to handle has an outcome.
inline bool is_feasible(const Program& p) {
  return cond_implies(p.pre(), program_dom(p));
}

// Witness of infeasibility: required start states with no outcome.
inline Condition infeasibility_witness(const Program& p) {
  return cond_diff(p.pre(), program_dom(p));
}

// Normal: the postcondition carries no pairs outside the precondition.
// Normal programs are the canonical representatives of program equivalence.
inline bool is_normal(const Program& p) {
  return cond_implies(program_dom(p), p.pre());
}

inline Program normalize(const Program& p) {
  return Program(p.space(), rel_restrict(p.post(), p.pre()), p.pre());
}

// --- operators --------------------------------------------------------------

// Angelic choice: either behaviour, required wherever either is required.
inline Program choice(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "choice");
  return Program(p1.space(), rel_union(p1.post(), p2.post()), cond_or(p1.pre(), p2.pre()));
}

// Demonic variant: same outcomes, but only required where both are.
inline Program internal_choice(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "internal_choice");
  return Program(p1.space(), rel_union(p1.post(), p2.post()), cond_and(p1.pre(), p2.pre()));
}

// Sequential composition. The first step is cut down to outcomes the second
// step can take over (targets inside pre(p2)); the composite is required
// exactly where p1 is required and can guarantee such an outcome.
inline Program seq(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "seq");
  const Relation handoff = rel_corestrict(p1.post(), p2.pre());
  return Program(p1.space(), rel_compose(handoff, p2.post()),
                 cond_and(p1.pre(), preimage(p1.post(), p2.pre())));
}

// Restriction c:p — run p only from c. Both components are cut down to c,
// so restriction by the empty condition is exactly Fail and restriction
// laws hold as equalities, not merely up to equivalence.
inline Program restrict(const Condition& c, const Program& p) {
  require_same_space(c.space(), p.space(), "restrict");
  return Program(p.space(), rel_restrict(p.post(), c), cond_and(p.pre(), c));
}

// Corestriction p\c — run p insisting on an outcome in c. Required only
// where such an outcome exists.
inline Program corestrict(const Program& p, const Condition& c) {
  require_same_space(p.space(), c.space(), "corestrict");
  return Program(p.space(), rel_corestrict(p.post(), c),
                 cond_and(p.pre(), preimage(p.post(), c)));
}

// Atomic concurrency: one of the two interleavings, chosen angelically.
inline Program atomic_concurrency(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "atomic_concurrency");
  return choice(seq(p1, p2), seq(p2, p1));
}

// Non-atomic concurrency (steps)||q: q runs once, atomically, somewhere
// before, between or after the steps. Defined recursively:
//   ([p1,rest] || q) = ((p1||q);rest) u (p1;([rest]||q)).
inline Program nonatomic_concurrency(std::span<const Program> steps, const Program& q) {
  if (steps.size() < 2) throw ModelError("nonatomic_concurrency needs at least two steps");
  for (const auto& s : steps) require_same_space(s.space(), q.space(), "nonatomic_concurrency");
  const auto seq_all = [](std::span<const Program> ps) {
    Program acc = ps[0];
    for (size_t i = 1; i < ps.size(); ++i) acc = seq(acc, ps[i]);
    return acc;
  };
  if (steps.size() == 2)
    return choice(seq(atomic_concurrency(steps[0], q), steps[1]),
                  seq(steps[0], atomic_concurrency(steps[1], q)));
  const auto rest = steps.subspan(1);
  return choice(seq(atomic_concurrency(steps[0], q), seq_all(rest)),
                seq(steps[0], nonatomic_concurrency(rest, q)));
}

inline Program nonatomic_concurrency(const std::vector<Program>& steps, const Program& q) {
  return nonatomic_concurrency(std::span<const Program>(steps.data(), steps.size()), q);
}

// Guarded conditional: the choice over the guarded restrictions.
inline Program guarded_conditional(std::span<const std::pair<Condition, Program>> branches) {
  if (branches.empty()) throw ModelError("guarded_conditional needs at least one branch");
  Program acc = restrict(branches[0].first, branches[0].second);
  for (size_t i = 1; i < branches.size(); ++i)
    acc = choice(acc, restrict(branches[i].first, branches[i].second));
  return acc;
}

inline Program guarded_conditional(const std::vector<std::pair<Condition, Program>>& branches) {
  return guarded_conditional(
      std::span<const std::pair<Condition, Program>>(branches.data(), branches.size()));
}

inline Program if_then_else(const Condition& c, const Program& p1, const Program& p2) {
  return choice(restrict(c, p1), restrict(cond_not(c), p2));
}

// Componentwise intersection. Notable: can turn two feasible programs into
// an infeasible one, which is why it is not an implementation mechanism.
inline Program program_intersection(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "program_intersection");
  return Program(p1.space(), rel_inter(p1.post(), p2.post()), cond_and(p1.pre(), p2.pre()));
}

// Componentwise difference of postconditions over the common precondition.
inline Program program_difference(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "program_difference");
  return Program(p1.space(), rel_diff(p1.post(), p2.post()), cond_and(p1.pre(), p2.pre()));
}

// --- comparisons ------------------------------------------------------------

// Equivalent: same precondition and same behaviour from it. Postcondition
// pairs outside the precondition are junk and do not count.
inline bool equivalent(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "equivalent");
  return p1.pre() == p2.pre() &&
         rel_restrict(p1.post(), p1.pre()) == rel_restrict(p2.post(), p2.pre());
}

// Refinement: q refines p when q is defined on every atom of p's space,
// requires at least as much (pre(q) >= pre(p)) and, from p's precondition,
// allows no outcome p forbids. This is the one comparison that tolerates
// distinct spaces: atoms are matched by name, and q's space must contain
// every atom of p's.
inline bool refines(const Program& q, const Program& p) {
  if (q.space() == p.space()) {
    return cond_implies(p.pre(), q.pre()) &&
           rel_diff(rel_restrict(q.post(), p.pre()), p.post()).is_empty();
  }
  for (const auto& a : p.space()->atoms())
    if (!q.space()->has(a)) return false;
  for (const auto& a : p.pre().members())
    if (!q.pre().contains(a)) return false;
  for (const auto& [a, b] : q.post().pairs()) {
    if (!p.space()->has(a) || !p.pre().contains(a)) continue;
    if (!p.space()->has(b) || !p.post().contains(a, b)) return false;
  }
  return true;
}

// Commuting programs: composition order is irrelevant, exactly.
inline bool commutes(const Program& p1, const Program& p2) {
  require_same_space(p1.space(), p2.space(), "commutes");
  return seq(p1, p2) == seq(p2, p1);
}

// --- classification ---------------------------------------------------------

struct ProgramClass {
  bool deterministic = false;       // postcondition is a function
  bool functional_literal = false;  // the literal universally-quantified reading
  bool total = false;               // precondition is the whole space
  bool markovian = false;           // every column of the postcondition is all-or-nothing
};

// The literal reading of "functional": every subset c of the space is
// disjoint from its image. Checked via the pairwise reduction (each pair
// (x,y) of the postcondition already violates it with c = {x,y}), so the
// predicate holds exactly for the empty postcondition — a degenerate class
// that classify_program flags as such.
inline bool is_functional_literal(const Program& p) {
  for (int i = 0; i < p.space()->size(); ++i)
    for (int j = 0; j < p.space()->size(); ++j)
      if (p.post().contains(i, j)) {
        const Condition c(p.space(), (1u << i) | (1u << j));
        if ((image(p.post(), c).bits() & c.bits()) != 0) return false;
      }
  return true;
}

inline bool is_markovian(const Program& p) {
  const int n = p.space()->size();
  for (int j = 0; j < n; ++j) {
    int hits = 0;
    for (int i = 0; i < n; ++i)
      if (p.post().contains(i, j)) ++hits;
    if (hits != 0 && hits != n) return false;
  }
  return true;
}

inline ProgramClass classify_program(const Program& p) {
  ProgramClass c;
  c.deterministic = is_function(p.post());
  c.functional_literal = is_functional_literal(p);
  c.total = p.pre().is_full();
  c.markovian = is_markovian(p);
  return c;
}

enum class StateKind { Trivial, IrrelevantNontrivial, Relevant };

// A state is trivial when the program may end anywhere from it, irrelevant
// (but nontrivial) when the program can never start from it, and relevant
// otherwise.
inline StateKind classify_state(const Program& p, int i) {
  if (i < 0 || i >= p.space()->size()) throw ModelError("classify_state: index out of range");
  const uint16_t row = p.post().row(i);
  if (row == Condition::full_mask(p.space())) return StateKind::Trivial;
  if (row == 0) return StateKind::IrrelevantNontrivial;
  return StateKind::Relevant;
}

inline StateKind classify_state(const Program& p, const std::string& atom) {
  return classify_state(p, p.space()->index(atom));
}

// --- text rendering ---------------------------------------------------------

inline std::string to_text(const Condition& c) {
  auto ms = c.members();
  std::sort(ms.begin(), ms.end());
  std::string out = "{";
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ",";
    out += ms[i];
  }
  return out + "}";
}

inline std::string to_text(const Relation& r) {
  auto ps = r.pairs();
  std::sort(ps.begin(), ps.end());
  std::string out = "{";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += "(" + ps[i].first + "," + ps[i].second + ")";
  }
  return out + "}";
}

inline std::string to_text(const Program& p) {
  return "<" + to_text(p.post()) + "," + to_text(p.pre()) + ">";
}

inline std::string to_text(const ProgramClass& c) {
  std::vector<std::string> parts;
  if (c.deterministic) parts.push_back("deterministic");
  if (c.functional_literal) parts.push_back("functional_literal");
  if (c.total) parts.push_back("total");
  if (c.markovian) parts.push_back("markovian");
  if (parts.empty()) return "none";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

inline std::string to_text(StateKind k) {
  switch (k) {
    case StateKind::Trivial: return "trivial";
    case StateKind::IrrelevantNontrivial: return "irrelevant-nontrivial";
    case StateKind::Relevant: return "relevant";
  }
  return "?";
}

}  // namespace tp

#endif
