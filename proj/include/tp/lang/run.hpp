#ifndef TP_LANG_RUN_HPP
#define TP_LANG_RUN_HPP

#include <string>
#include <variant>
#include <vector>

#include "tp/lang/elaborate.hpp"

namespace tp::lang {

struct DirectiveResult {
  int line = 1;
  int col = 1;
  std::string text;     // the directive, e.g. "check feasible"
  std::string verdict;  // pass | fail | error | info
  std::vector<std::string> details;
};

inline std::vector<DirectiveResult> run_directives(const Model& model) {
  std::vector<DirectiveResult> results;
  for (const ReadyDirective& d : model.directives) {
    DirectiveResult r;
    r.line = d.line;
    r.col = d.col;
    r.text = d.text;
    if (d.is_print) {
      r.verdict = "info";
      const Program& p = *d.subject;
      if (d.query == "post") r.details.push_back(to_text(p.post()));
      else if (d.query == "pre") r.details.push_back(to_text(p.pre()));
      else if (d.query == "range") r.details.push_back(to_text(program_range(p)));
      else if (d.query == "dom") r.details.push_back(to_text(program_dom(p)));
      else r.details.push_back(to_text(classify_program(p)));
      results.push_back(std::move(r));
      continue;
    }
    bool pass = false;
    bool is_error = false;
    try {
      switch (d.check) {
        case CheckKind::Feasible: {
          const Program& p = std::get<Program>(d.values[0]);
          pass = is_feasible(p);
          if (!pass)
            r.details.push_back("infeasible at " + to_text(infeasibility_witness(p)));
          break;
        }
        case CheckKind::Refines: {
          const Program& q = std::get<Program>(d.values[0]);
          const Program& p = std::get<Program>(d.values[1]);
          pass = refines(q, p);
          if (!pass) {
            if (!cond_implies(p.pre(), q.pre()))
              r.details.push_back("precondition not covered: missing " +
                                  to_text(cond_diff(p.pre(), q.pre())));
            else
              r.details.push_back(
                  "extra outcomes inside the claimed domain: " +
                  to_text(rel_diff(rel_restrict(q.post(), p.pre()), p.post())));
          }
          break;
        }
        case CheckKind::Equivalent: {
          const Program& p = std::get<Program>(d.values[0]);
          const Program& q = std::get<Program>(d.values[1]);
          pass = equivalent(p, q);
          if (!pass) {
            if (!(p.pre() == q.pre()))
              r.details.push_back("preconditions differ: " + to_text(p.pre()) + " vs " +
                                  to_text(q.pre()));
            else
              r.details.push_back(
                  "behaviors differ inside the precondition: " +
                  to_text(rel_union(
                      rel_diff(rel_restrict(p.post(), p.pre()), rel_restrict(q.post(), q.pre())),
                      rel_diff(rel_restrict(q.post(), q.pre()),
                               rel_restrict(p.post(), p.pre())))));
          }
          break;
        }
        case CheckKind::Commutes: {
          const Program& p = std::get<Program>(d.values[0]);
          const Program& q = std::get<Program>(d.values[1]);
          pass = commutes(p, q);
          if (!pass)
            r.details.push_back("p;q = " + to_text(seq(p, q)) + " but q;p = " +
                                to_text(seq(q, p)));
          break;
        }
        case CheckKind::Invariant: {
          const Condition& i = std::get<Condition>(d.values[0]);
          const Program& p = std::get<Program>(d.values[1]);
          pass = is_invariant(i, p);
          if (!pass)
            r.details.push_back(
                "escapes to " +
                to_text(cond_diff(image(p.post(), cond_and(i, p.pre())), i)));
          break;
        }
        case CheckKind::LoopInvariant: {
          const Condition& i = std::get<Condition>(d.values[0]);
          const LoopSpec& ls = *d.loop;
          pass = is_loop_invariant(i, ls);
          if (!pass) {
            const Condition a_range = program_range(ls.init);
            if (!cond_implies(a_range, i))
              r.details.push_back("initialization escapes the invariant: " +
                                  to_text(cond_diff(a_range, i)));
            else {
              const Program guarded = restrict(cond_not(ls.exit), ls.body);
              r.details.push_back(
                  "body escapes the invariant: " +
                  to_text(cond_diff(image(guarded.post(), cond_and(i, guarded.pre())), i)));
            }
          }
          break;
        }
        case CheckKind::LoopCorrect: {
          const Condition& i = std::get<Condition>(d.values[0]);
          const LoopCorrectness lc = check_loop_correctness(*d.loop, i);
          pass = lc.verdict == LoopVerdict::Pass;
          if (lc.verdict == LoopVerdict::NotLoopInvariant)
            r.details.push_back("the condition is not a loop invariant");
          else if (lc.verdict == LoopVerdict::Fail)
            r.details.push_back("exit states outside the goal: " + to_text(lc.offending));
          break;
        }
        case CheckKind::LoopFeasible: {
          const LoopFeasibility f = check_loop_feasibility(*d.loop);
          if (!f.ok) {
            is_error = true;
            r.details.push_back(f.error);
            break;
          }
          pass = f.direct;
          if (!pass)
            r.details.push_back("initial states with no guarantee of reaching the exit: " +
                                to_text(f.stuck));
          break;
        }
        case CheckKind::Correct: {
          const ContractedProgram cp(std::get<Condition>(d.values[0]),
                                     std::get<Relation>(d.values[2]),
                                     std::get<Program>(d.values[1]));
          const CorrectnessVerdict v = is_correct(cp);
          pass = v.correct;
          if (!pass) r.details.push_back("violating initial states: " + to_text(v.violating));
          break;
        }
        case CheckKind::Variant: {
          std::vector<std::pair<std::string, uint64_t>> entries;
          for (const auto& e : d.variant) entries.emplace_back(e.atom, e.value);
          const Variant v(model.space.get(), entries);
          pass = check_variant(v, *d.loop);
          if (!pass) r.details.push_back("the measure does not decrease on every body step");
          break;
        }
        case CheckKind::Law: {
          const LawReport report = check_law(d.law_id, LawConfig{});
          pass = report.ok;
          r.details.push_back("law " + d.law_id + ": mode=" + report.mode +
                              " cases=" + std::to_string(report.cases) +
                              " failures=" + std::to_string(report.failures));
          for (const auto& example : report.examples) r.details.push_back(example);
          break;
        }
      }
    } catch (const ModelError& e) {
      is_error = true;
      r.details.push_back(e.what());
    }
    if (is_error)
      r.verdict = "error";
    else
      r.verdict = (pass != d.negated) ? "pass" : "fail";
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace tp::lang

#endif
