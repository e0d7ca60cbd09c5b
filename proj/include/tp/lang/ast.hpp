#ifndef TP_LANG_AST_HPP
#define TP_LANG_AST_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tp::lang {

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

enum class OpKind { Bar, Amp, BarBar, Semi, Backslash, Colon };

inline const char* op_spelling(OpKind op) {
  switch (op) {
    case OpKind::Bar: return "|";
    case OpKind::Amp: return "&";
    case OpKind::BarBar: return "||";
    case OpKind::Semi: return ";";
    case OpKind::Backslash: return "\\";
    case OpKind::Colon: return ":";
  }
  return "?";
}

struct Expr {
  enum class Kind {
    Ident,    // name
    SetLit,   // atoms
    RelLit,   // pairs
    ProgLit,  // kids = {relation expr, condition expr}
    Skip,
    Fail,
    Havoc,
    Not,      // kids = {operand}
    BinOp,    // op; kids = {lhs, rhs}
    Power,    // nat; kids = {base}
    Tuple,    // kids = elements; only legal as the left operand of "||"
    Loop,     // kids = {body}
    While,    // kids = {init, exit, body}
    Ite,      // kids = {cond, then, else}
    Guarded,  // kids = alternating {guard, body, guard, body, ...}
  };
  Kind kind;
  int line = 1;
  int col = 1;
  std::string name;                                        // Ident
  std::vector<std::string> atoms;                          // SetLit
  std::vector<std::pair<std::string, std::string>> pairs;  // RelLit
  OpKind op = OpKind::Bar;                                 // BinOp
  unsigned nat = 0;                                        // Power
  std::vector<ExprPtr> kids;
};

inline ExprPtr make_expr(Expr::Kind kind, int line, int col) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->line = line;
  e->col = col;
  return e;
}

// Directive kinds for "check"; "print" queries are kept as plain strings.
enum class CheckKind {
  Feasible,
  Refines,
  Equivalent,
  Correct,
  Commutes,
  Invariant,
  LoopInvariant,
  LoopCorrect,
  LoopFeasible,
  Variant,
  Law,
};

inline const char* check_kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Feasible: return "feasible";
    case CheckKind::Refines: return "refines";
    case CheckKind::Equivalent: return "equivalent";
    case CheckKind::Correct: return "correct";
    case CheckKind::Commutes: return "commutes";
    case CheckKind::Invariant: return "invariant";
    case CheckKind::LoopInvariant: return "loop_invariant";
    case CheckKind::LoopCorrect: return "loop_correct";
    case CheckKind::LoopFeasible: return "loop_feasible";
    case CheckKind::Variant: return "variant";
    case CheckKind::Law: return "law";
  }
  return "?";
}

struct VariantEntry {
  std::string atom;
  uint64_t value = 0;
};

struct Item {
  enum class Kind { Universe, CondBind, RelBind, ProgBind, Check, Print };
  Kind kind;
  int line = 1;
  int col = 1;
  std::string name;                // binding / universe name
  std::vector<std::string> atoms;  // universe atoms, in declaration order
  ExprPtr expr;                    // binding right-hand side / print argument
  // check-directive payload:
  CheckKind check = CheckKind::Feasible;
  bool negated = false;
  std::vector<ExprPtr> args;
  std::vector<VariantEntry> variant;  // "check variant" measure table
  std::string law_id;                 // "check law"
  std::string query;                  // print query: post|pre|range|dom|classify
};

struct Ast {
  std::vector<Item> items;
};

}  // namespace tp::lang

#endif
