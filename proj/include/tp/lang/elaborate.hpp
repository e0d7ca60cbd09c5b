#ifndef TP_LANG_ELABORATE_HPP
#define TP_LANG_ELABORATE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tp/contracts.hpp"
#include "tp/lang/ast.hpp"
#include "tp/lang/parser.hpp"
#include "tp/laws.hpp"
#include "tp/loops.hpp"
#include "tp/program.hpp"

namespace tp::lang {

using Value = std::variant<Condition, Relation, Program>;

inline const char* value_kind(const Value& v) {
  if (std::holds_alternative<Condition>(v)) return "condition";
  if (std::holds_alternative<Relation>(v)) return "relation";
  return "program";
}

struct ProgBinding {
  Program prog;
  std::optional<LoopSpec> loop;  // set when the binding's source is a from-until loop
};

// A directive with its arguments already evaluated, ready to run.
struct ReadyDirective {
  int line = 1;
  int col = 1;
  bool is_print = false;
  std::string text;  // "check feasible", "check not law", "print post", ...
  // check payload:
  CheckKind check = CheckKind::Feasible;
  bool negated = false;
  std::vector<Value> values;
  std::optional<LoopSpec> loop;
  std::vector<VariantEntry> variant;
  std::string law_id;
  // print payload:
  std::string query;
  std::optional<Program> subject;
};

struct Model {
  std::shared_ptr<const StateSpace> space;
  struct BindingRef {
    Item::Kind kind;
    std::string name;
  };
  std::vector<BindingRef> order;  // declaration order, for the canonical printer
  std::map<std::string, Condition> conds;
  std::map<std::string, Relation> rels;
  std::map<std::string, ProgBinding> progs;
  std::vector<ReadyDirective> directives;
};

struct ElabResult {
  Model model;
  std::vector<Diagnostic> diagnostics;
  bool ok = false;
};

class Elaborator {
 public:
  explicit Elaborator(const Ast& ast) : ast_(&ast) {}

  // Expression mode: evaluate stray expressions against an existing model
  // (used by the command-line `eval`).
  explicit Elaborator(Model existing) : ast_(nullptr), model_(std::move(existing)) {
    if (model_.space) universe_name_ = model_.space->name();
  }

  std::optional<Value> eval_expression(const ExprPtr& e) { return eval(e); }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  ElabResult run() {
    ElabResult result;
    for (const Item& item : ast_->items) {
      if (item.kind == Item::Kind::Universe) {
        declare_universe(item);
        continue;
      }
      if (!model_.space) {
        error(item.line, item.col, "the universe must be declared before any other item",
              "add 'universe S = {...}' at the top of the file");
        break;
      }
      switch (item.kind) {
        case Item::Kind::CondBind: bind_condition(item); break;
        case Item::Kind::RelBind: bind_relation(item); break;
        case Item::Kind::ProgBind: bind_program(item); break;
        case Item::Kind::Check: elaborate_check(item); break;
        case Item::Kind::Print: elaborate_print(item); break;
        case Item::Kind::Universe: break;  // unreachable
      }
    }
    if (ast_->items.empty())
      error(1, 1, "the file declares nothing", "a model needs at least a universe");
    result.model = std::move(model_);
    result.diagnostics = std::move(diagnostics_);
    result.ok = result.diagnostics.empty();
    return result;
  }

 private:
  const Ast* ast_;
  Model model_;
  std::vector<Diagnostic> diagnostics_;
  std::string universe_name_;

  void error(int line, int col, std::string message, std::string note = "") {
    diagnostics_.push_back(
        {Diagnostic::Severity::Error, line, col, std::move(message), std::move(note)});
  }

  const StateSpace* space() const { return model_.space.get(); }

  bool name_free(const Item& item) {
    const std::string& n = item.name;
    if (n == universe_name_ || model_.conds.count(n) || model_.rels.count(n) ||
        model_.progs.count(n)) {
      error(item.line, item.col, "duplicate binding of '" + n + "'",
            "every name is bound at most once");
      return false;
    }
    return true;
  }

  void declare_universe(const Item& item) {
    if (model_.space) {
      error(item.line, item.col, "duplicate universe declaration",
            "a file describes exactly one state space");
      return;
    }
    try {
      model_.space = std::make_shared<const StateSpace>(item.name, item.atoms);
      universe_name_ = item.name;
    } catch (const ModelError& e) {
      error(item.line, item.col, e.what());
    }
  }

  // --- expression evaluation ------------------------------------------

  std::optional<Value> eval(const ExprPtr& e) {
    switch (e->kind) {
      case Expr::Kind::Ident: {
        if (auto it = model_.conds.find(e->name); it != model_.conds.end()) return it->second;
        if (auto it = model_.rels.find(e->name); it != model_.rels.end()) return it->second;
        if (auto it = model_.progs.find(e->name); it != model_.progs.end())
          return it->second.prog;
        error(e->line, e->col, "unknown name '" + e->name + "'");
        return std::nullopt;
      }
      case Expr::Kind::SetLit: {
        uint32_t bits = 0;
        for (const auto& atom : e->atoms) {
          if (!space()->has(atom)) {
            error(e->line, e->col,
                  "atom '" + atom + "' is not in universe '" + universe_name_ + "'");
            return std::nullopt;
          }
          bits |= uint32_t{1} << space()->index(atom);
        }
        return Value(Condition(space(), bits));
      }
      case Expr::Kind::RelLit: {
        for (const auto& [from, to] : e->pairs)
          for (const std::string& atom : {from, to})
            if (!space()->has(atom)) {
              error(e->line, e->col,
                    "atom '" + atom + "' is not in universe '" + universe_name_ + "'");
              return std::nullopt;
            }
        return Value(Relation::from_pairs(space(), e->pairs));
      }
      case Expr::Kind::ProgLit: {
        auto rel = eval_relation(e->kids[0], "a program literal's first component");
        auto pre = eval_condition(e->kids[1], "a program literal's second component");
        if (!rel || !pre) return std::nullopt;
        return Value(Program(space(), *rel, *pre));
      }
      case Expr::Kind::Skip: return Value(skip_program(space()));
      case Expr::Kind::Fail: return Value(fail_program(space()));
      case Expr::Kind::Havoc: return Value(havoc_program(space()));
      case Expr::Kind::Not: {
        auto c = eval_condition(e->kids[0], "'not'");
        if (!c) return std::nullopt;
        return Value(cond_not(*c));
      }
      case Expr::Kind::Power: {
        auto v = eval(e->kids[0]);
        if (!v) return std::nullopt;
        if (auto* p = std::get_if<Program>(&*v)) return Value(fixed_repetition(*p, e->nat));
        if (auto* r = std::get_if<Relation>(&*v)) {
          Relation acc = Relation::identity(space());
          for (unsigned k = 0; k < e->nat; ++k) acc = rel_compose(acc, *r);
          return Value(acc);
        }
        error(e->line, e->col, "'^' needs a program or relation base");
        return std::nullopt;
      }
      case Expr::Kind::Loop: {
        auto p = eval_program(e->kids[0], "'loop'");
        if (!p) return std::nullopt;
        return Value(arbitrary_repetition(*p));
      }
      case Expr::Kind::While: {
        auto ls = eval_loop_spec(e);
        if (!ls) return std::nullopt;
        return Value(while_loop(*ls));
      }
      case Expr::Kind::Ite: {
        auto c = eval_condition(e->kids[0], "'if'");
        auto t = eval_program(e->kids[1], "the 'then' branch");
        auto f = eval_program(e->kids[2], "the 'else' branch");
        if (!c || !t || !f) return std::nullopt;
        return Value(if_then_else(*c, *t, *f));
      }
      case Expr::Kind::Guarded: {
        std::vector<std::pair<Condition, Program>> branches;
        for (size_t i = 0; i + 1 < e->kids.size(); i += 2) {
          auto g = eval_condition(e->kids[i], "a branch guard");
          auto b = eval_program(e->kids[i + 1], "a branch body");
          if (!g || !b) return std::nullopt;
          branches.emplace_back(*g, *b);
        }
        return Value(guarded_conditional(branches));
      }
      case Expr::Kind::Tuple:
        error(e->line, e->col, "a step tuple is only valid as the left operand of '||'");
        return std::nullopt;
      case Expr::Kind::BinOp: return eval_binop(e);
    }
    error(e->line, e->col, "unsupported expression");
    return std::nullopt;
  }

  std::optional<Value> eval_binop(const ExprPtr& e) {
    // Non-atomic concurrency: (p1, ..., pk) || q.
    if (e->op == OpKind::BarBar && e->kids[0]->kind == Expr::Kind::Tuple) {
      std::vector<Program> steps;
      for (const auto& kid : e->kids[0]->kids) {
        auto p = eval_program(kid, "a step of the tuple");
        if (!p) return std::nullopt;
        steps.push_back(*p);
      }
      auto q = eval_program(e->kids[1], "the right operand of '||'");
      if (!q) return std::nullopt;
      return Value(nonatomic_concurrency(steps, *q));
    }
    auto lhs = eval(e->kids[0]);
    auto rhs = eval(e->kids[1]);
    if (!lhs || !rhs) return std::nullopt;
    coerce_empty(*lhs, *rhs);
    const auto mismatch = [&]() -> std::optional<Value> {
      error(e->line, e->col,
            std::string("operator '") + op_spelling(e->op) + "' cannot combine a " +
                value_kind(*lhs) + " with a " + value_kind(*rhs));
      return std::nullopt;
    };
    switch (e->op) {
      case OpKind::Bar:
        if (auto* a = std::get_if<Condition>(&*lhs))
          if (auto* b = std::get_if<Condition>(&*rhs)) return Value(cond_or(*a, *b));
        if (auto* a = std::get_if<Relation>(&*lhs))
          if (auto* b = std::get_if<Relation>(&*rhs)) return Value(rel_union(*a, *b));
        if (auto* a = std::get_if<Program>(&*lhs))
          if (auto* b = std::get_if<Program>(&*rhs)) return Value(choice(*a, *b));
        return mismatch();
      case OpKind::Amp:
        if (auto* a = std::get_if<Condition>(&*lhs))
          if (auto* b = std::get_if<Condition>(&*rhs)) return Value(cond_and(*a, *b));
        if (auto* a = std::get_if<Relation>(&*lhs))
          if (auto* b = std::get_if<Relation>(&*rhs)) return Value(rel_inter(*a, *b));
        if (auto* a = std::get_if<Program>(&*lhs))
          if (auto* b = std::get_if<Program>(&*rhs)) return Value(internal_choice(*a, *b));
        return mismatch();
      case OpKind::Semi:
        if (auto* a = std::get_if<Relation>(&*lhs))
          if (auto* b = std::get_if<Relation>(&*rhs)) return Value(rel_compose(*a, *b));
        if (auto* a = std::get_if<Program>(&*lhs))
          if (auto* b = std::get_if<Program>(&*rhs)) return Value(seq(*a, *b));
        return mismatch();
      case OpKind::BarBar:
        if (auto* a = std::get_if<Program>(&*lhs))
          if (auto* b = std::get_if<Program>(&*rhs)) return Value(atomic_concurrency(*a, *b));
        return mismatch();
      case OpKind::Colon:
        if (auto* c = std::get_if<Condition>(&*lhs)) {
          if (auto* p = std::get_if<Program>(&*rhs)) return Value(restrict(*c, *p));
          if (auto* r = std::get_if<Relation>(&*rhs)) return Value(rel_restrict(*r, *c));
        }
        return mismatch();
      case OpKind::Backslash:
        if (auto* p = std::get_if<Program>(&*lhs))
          if (auto* c = std::get_if<Condition>(&*rhs)) return Value(corestrict(*p, *c));
        if (auto* r = std::get_if<Relation>(&*lhs)) {
          if (auto* c = std::get_if<Condition>(&*rhs)) return Value(rel_corestrict(*r, *c));
          if (auto* b = std::get_if<Relation>(&*rhs)) return Value(rel_diff(*r, *b));
        }
        if (auto* a = std::get_if<Condition>(&*lhs))
          if (auto* b = std::get_if<Condition>(&*rhs)) return Value(cond_diff(*a, *b));
        return mismatch();
    }
    return mismatch();
  }

  // "{}" elaborates to the empty condition; where the other operand of a
  // binary operator is a relation, the empty literal means the empty
  // relation instead.
  void coerce_empty(Value& lhs, Value& rhs) {
    const auto fix = [this](Value& target, const Value& other) {
      if (std::holds_alternative<Relation>(other))
        if (auto* c = std::get_if<Condition>(&target); c && c->is_empty())
          target = Relation::empty(space());
    };
    fix(lhs, rhs);
    fix(rhs, lhs);
  }

  std::optional<Condition> eval_condition(const ExprPtr& e, const std::string& where) {
    auto v = eval(e);
    if (!v) return std::nullopt;
    if (auto* c = std::get_if<Condition>(&*v)) return *c;
    error(e->line, e->col, "expected a condition in " + where + ", got a " + value_kind(*v));
    return std::nullopt;
  }

  std::optional<Relation> eval_relation(const ExprPtr& e, const std::string& where) {
    auto v = eval(e);
    if (!v) return std::nullopt;
    if (auto* r = std::get_if<Relation>(&*v)) return *r;
    if (auto* c = std::get_if<Condition>(&*v); c && c->is_empty())
      return Relation::empty(space());
    error(e->line, e->col, "expected a relation in " + where + ", got a " + value_kind(*v));
    return std::nullopt;
  }

  std::optional<Program> eval_program(const ExprPtr& e, const std::string& where) {
    auto v = eval(e);
    if (!v) return std::nullopt;
    if (auto* p = std::get_if<Program>(&*v)) return *p;
    error(e->line, e->col, "expected a program in " + where + ", got a " + value_kind(*v));
    return std::nullopt;
  }

  std::optional<LoopSpec> eval_loop_spec(const ExprPtr& e) {
    auto init = eval_program(e->kids[0], "the loop initialization");
    auto exit = eval_condition(e->kids[1], "the exit condition");
    auto body = eval_program(e->kids[2], "the loop body");
    if (!init || !exit || !body) return std::nullopt;
    return LoopSpec(*init, *exit, *body);
  }

  // Loop-shaped directive argument: either a from-until loop expression or
  // a name bound to one.
  std::optional<LoopSpec> loop_argument(const ExprPtr& e) {
    if (e->kind == Expr::Kind::While) return eval_loop_spec(e);
    if (e->kind == Expr::Kind::Ident) {
      auto it = model_.progs.find(e->name);
      if (it != model_.progs.end() && it->second.loop) return it->second.loop;
      if (it != model_.progs.end()) {
        error(e->line, e->col, "'" + e->name + "' is not bound to a from-until loop",
              "the check needs the loop's structure, not just its meaning");
        return std::nullopt;
      }
    }
    error(e->line, e->col, "this check needs a from-until loop or a name bound to one");
    return std::nullopt;
  }

  // --- items -----------------------------------------------------------

  void bind_condition(const Item& item) {
    if (!name_free(item)) return;
    auto c = eval_condition(item.expr, "a condition binding");
    if (!c) return;
    model_.conds.emplace(item.name, *c);
    model_.order.push_back({Item::Kind::CondBind, item.name});
  }

  void bind_relation(const Item& item) {
    if (!name_free(item)) return;
    auto r = eval_relation(item.expr, "a relation binding");
    if (!r) return;
    model_.rels.emplace(item.name, *r);
    model_.order.push_back({Item::Kind::RelBind, item.name});
  }

  void bind_program(const Item& item) {
    if (!name_free(item)) return;
    auto p = eval_program(item.expr, "a program binding");
    if (!p) return;
    ProgBinding binding{*p, std::nullopt};
    if (item.expr->kind == Expr::Kind::While) binding.loop = eval_loop_spec(item.expr);
    model_.progs.emplace(item.name, std::move(binding));
    model_.order.push_back({Item::Kind::ProgBind, item.name});
  }

  void elaborate_check(const Item& item) {
    ReadyDirective d;
    d.line = item.line;
    d.col = item.col;
    d.check = item.check;
    d.negated = item.negated;
    d.text = std::string("check ") + (item.negated ? "not " : "") + check_kind_name(item.check);
    switch (item.check) {
      case CheckKind::Feasible: {
        auto p = eval_program(item.args[0], "'check feasible'");
        if (!p) return;
        d.values.emplace_back(*p);
        break;
      }
      case CheckKind::Refines:
      case CheckKind::Equivalent:
      case CheckKind::Commutes: {
        auto p = eval_program(item.args[0], "the first argument");
        auto q = eval_program(item.args[1], "the second argument");
        if (!p || !q) return;
        d.values.emplace_back(*p);
        d.values.emplace_back(*q);
        break;
      }
      case CheckKind::Invariant: {
        auto c = eval_condition(item.args[0], "the invariant");
        auto p = eval_program(item.args[1], "the program");
        if (!c || !p) return;
        d.values.emplace_back(*c);
        d.values.emplace_back(*p);
        break;
      }
      case CheckKind::LoopInvariant:
      case CheckKind::LoopCorrect: {
        auto c = eval_condition(item.args[0], "the invariant");
        auto ls = loop_argument(item.args[1]);
        if (!c || !ls) return;
        d.values.emplace_back(*c);
        d.loop = ls;
        break;
      }
      case CheckKind::LoopFeasible: {
        auto ls = loop_argument(item.args[0]);
        if (!ls) return;
        d.loop = ls;
        break;
      }
      case CheckKind::Correct: {
        auto pre = eval_condition(item.args[0], "'require'");
        auto body = eval_program(item.args[1], "'do'");
        auto post = eval_relation(item.args[2], "'ensure'");
        if (!pre || !body || !post) return;
        d.values.emplace_back(*pre);
        d.values.emplace_back(*body);
        d.values.emplace_back(*post);
        break;
      }
      case CheckKind::Variant: {
        for (const auto& entry : item.variant)
          if (!space()->has(entry.atom)) {
            error(item.line, item.col,
                  "atom '" + entry.atom + "' is not in universe '" + universe_name_ + "'");
            return;
          }
        auto ls = loop_argument(item.args[0]);
        if (!ls) return;
        d.variant = item.variant;
        d.loop = ls;
        break;
      }
      case CheckKind::Law: {
        if (!find_law(item.law_id)) {
          error(item.line, item.col, "unknown law '" + item.law_id + "'",
                "the registry carries P6..P80 and the named expected-failure entries");
          return;
        }
        d.law_id = item.law_id;
        break;
      }
    }
    model_.directives.push_back(std::move(d));
  }

  void elaborate_print(const Item& item) {
    auto p = eval_program(item.expr, "'print " + item.query + "'");
    if (!p) return;
    ReadyDirective d;
    d.line = item.line;
    d.col = item.col;
    d.is_print = true;
    d.text = "print " + item.query;
    d.query = item.query;
    d.subject = *p;
    model_.directives.push_back(std::move(d));
  }
};

inline ElabResult elaborate(const Ast& ast) { return Elaborator(ast).run(); }

}  // namespace tp::lang

#endif
