#ifndef TP_CONTRACTS_HPP
#define TP_CONTRACTS_HPP

#include <string>
#include <utility>

#include "tp/program.hpp"

namespace tp {

// "require Pre do b ensure post end": the assertion that b implements the
// specification <post, Pre>. Construction never checks correctness; that is
// a verdict one asks for.
struct ContractedProgram {
  Condition pre;
  Relation post;
  Program body;

  ContractedProgram(Condition pre_, Relation post_, Program body_)
      : pre(std::move(pre_)), post(std::move(post_)), body(std::move(body_)) {
    require_same_space(pre.space(), body.space(), "contract");
    require_same_space(post.space(), body.space(), "contract");
  }

  const StateSpace* space() const { return body.space(); }
};

// Correctness by definition: the body is an implementation of the contract,
// i.e. refines it and is feasible.
inline bool correct_by_definition(const ContractedProgram& cp) {
  return refines(cp.body, Program(cp.space(), cp.post, cp.pre)) && is_feasible(cp.body);
}

// Correctness by the subtraction formula: the body is feasible and every
// contract state is one the body handles (inside its precondition) with no
// outcome outside the contract's postcondition.
inline bool correct_by_formula(const ContractedProgram& cp) {
  return is_feasible(cp.body) &&
         cond_implies(cp.pre,
                      cond_diff(cp.body.pre(), rel_dom(rel_diff(cp.body.post(), cp.post))));
}

struct CorrectnessVerdict {
  bool correct;
  Condition violating;  // contract states the formula rejects; empty when correct
};

// Evaluates both formulations, asserts their agreement (a theorem), and
// returns the verdict with witness states on failure.
inline CorrectnessVerdict is_correct(const ContractedProgram& cp) {
  const bool def = correct_by_definition(cp);
  const bool formula = correct_by_formula(cp);
  if (def != formula)
    throw ModelError("correctness formulations disagree on " + to_text(cp.body));
  Condition violating = Condition::empty(cp.space());
  if (!def) {
    violating = cond_diff(
        cp.pre, cond_diff(cp.body.pre(), rel_dom(rel_diff(cp.body.post(), cp.post))));
    if (violating.is_empty() && !is_feasible(cp.body)) violating = infeasibility_witness(cp.body);
  }
  return {def, violating};
}

// Weakest precondition of b for a target postcondition: states where b
// guarantees an outcome and every outcome satisfies the target.
inline Condition wp(const Program& b, const Relation& post) {
  require_same_space(b.space(), post.space(), "wp");
  return cond_diff(rel_dom(b.post()), rel_dom(rel_diff(b.post(), post)));
}

// Strongest postcondition of b for a precondition: what b actually does
// from there.
inline Relation sp(const Program& b, const Condition& pre) {
  require_same_space(b.space(), pre.space(), "sp");
  return rel_restrict(b.post(), pre);
}

// Convenience for goals that are conditions: reach c, wherever you start.
inline Condition wp_goal(const Program& b, const Condition& c) {
  require_same_space(b.space(), c.space(), "wp_goal");
  Relation target(b.space());
  for (int i = 0; i < b.space()->size(); ++i)
    target = target.with_row(i, static_cast<uint16_t>(c.bits()));
  return wp(b, target);
}

// The weakest contract a feasible program satisfies: its own precondition
// and postcondition, with itself as body. Guaranteed correct, and every
// implementation of p refines its body.
inline ContractedProgram most_abstract_implementation(const Program& p) {
  if (!is_feasible(p))
    throw ModelError("most_abstract_implementation requires a feasible program; " + to_text(p) +
                     " is infeasible on " + to_text(infeasibility_witness(p)));
  return ContractedProgram(p.pre(), p.post(), p);
}

// Contract refinement: same specification part, refined body.
inline bool contract_refines(const ContractedProgram& cp2, const ContractedProgram& cp1) {
  require_same_space(cp2.space(), cp1.space(), "contract_refines");
  return cp2.pre == cp1.pre && cp2.post == cp1.post && refines(cp2.body, cp1.body);
}

}  // namespace tp

#endif
