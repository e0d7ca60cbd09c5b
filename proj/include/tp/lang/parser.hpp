#ifndef TP_LANG_PARSER_HPP
#define TP_LANG_PARSER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tp/lang/ast.hpp"
#include "tp/lang/lexer.hpp"

namespace tp::lang {

struct ParseResult {
  Ast ast;
  std::vector<Diagnostic> diagnostics;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParseResult run() {
    ParseResult result;
    while (peek().kind != TokenKind::Eof) {
      const size_t start = pos_;
      try {
        result.ast.items.push_back(parse_item());
      } catch (const ParseError&) {
        if (pos_ == start) ++pos_;  // guarantee progress before resyncing
        sync();
      }
    }
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

  // Parse a single expression spanning the whole input (command-line eval).
  struct ExprResult {
    ExprPtr expr;  // null on error
    std::vector<Diagnostic> diagnostics;
  };
  ExprResult run_expr() {
    ExprResult result;
    try {
      result.expr = parse_expr();
      if (peek().kind != TokenKind::Eof) fail("unexpected input after the expression");
    } catch (const ParseError&) {
      result.expr = nullptr;
    }
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  struct ParseError {};

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;

  const Token& peek(int ahead = 0) const {
    const size_t i = pos_ + static_cast<size_t>(ahead);
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool match(TokenKind kind) {
    if (peek().kind != kind) return false;
    advance();
    return true;
  }
  [[noreturn]] void fail(const std::string& message) {
    const Token& t = peek();
    diagnostics_.push_back({Diagnostic::Severity::Error, t.line, t.col, message, ""});
    throw ParseError{};
  }
  const Token& expect(TokenKind kind, const std::string& context) {
    if (peek().kind != kind)
      fail("expected " + token_name(kind) + " " + context + ", got " + token_name(peek().kind) +
           (peek().text.empty() ? "" : " '" + peek().text + "'"));
    return advance();
  }
  void sync() {
    for (;;) {
      switch (peek().kind) {
        case TokenKind::Eof:
        case TokenKind::KwUniverse:
        case TokenKind::KwCondition:
        case TokenKind::KwRelation:
        case TokenKind::KwProgram:
        case TokenKind::KwCheck:
        case TokenKind::KwPrint: return;
        default: advance();
      }
    }
  }

  // --- items -----------------------------------------------------------

  Item parse_item() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::KwUniverse: return parse_universe();
      case TokenKind::KwCondition: return parse_binding(Item::Kind::CondBind, "condition");
      case TokenKind::KwRelation: return parse_binding(Item::Kind::RelBind, "relation");
      case TokenKind::KwProgram: return parse_binding(Item::Kind::ProgBind, "program");
      case TokenKind::KwCheck: return parse_check();
      case TokenKind::KwPrint: return parse_print();
      default:
        fail("expected an item (universe, condition, relation, program, check, print)");
    }
  }

  Item parse_universe() {
    Item item;
    item.kind = Item::Kind::Universe;
    const Token& kw = advance();
    item.line = kw.line;
    item.col = kw.col;
    item.name = expect(TokenKind::Ident, "after 'universe'").text;
    expect(TokenKind::Equals, "in universe declaration");
    expect(TokenKind::LBrace, "before the universe's atoms");
    if (peek().kind != TokenKind::RBrace) {
      item.atoms.push_back(expect(TokenKind::Ident, "as an atom name").text);
      while (match(TokenKind::Comma))
        item.atoms.push_back(expect(TokenKind::Ident, "as an atom name").text);
    }
    expect(TokenKind::RBrace, "after the universe's atoms");
    return item;
  }

  Item parse_binding(Item::Kind kind, const std::string& what) {
    Item item;
    item.kind = kind;
    const Token& kw = advance();
    item.line = kw.line;
    item.col = kw.col;
    item.name = expect(TokenKind::Ident, "after '" + what + "'").text;
    expect(TokenKind::Equals, "in " + what + " binding");
    item.expr = parse_expr();
    return item;
  }

  Item parse_check() {
    Item item;
    item.kind = Item::Kind::Check;
    const Token& kw = advance();
    item.line = kw.line;
    item.col = kw.col;
    item.negated = match(TokenKind::KwNot);
    const Token& kind = expect(TokenKind::Ident, "naming the check kind");
    const std::string& k = kind.text;
    if (k == "feasible") {
      item.check = CheckKind::Feasible;
      item.args.push_back(parse_expr());
    } else if (k == "refines" || k == "equivalent" || k == "commutes") {
      item.check = k == "refines"      ? CheckKind::Refines
                   : k == "equivalent" ? CheckKind::Equivalent
                                       : CheckKind::Commutes;
      item.args.push_back(parse_expr());
      item.args.push_back(parse_expr());
    } else if (k == "invariant" || k == "loop_invariant" || k == "loop_correct") {
      item.check = k == "invariant"        ? CheckKind::Invariant
                   : k == "loop_invariant" ? CheckKind::LoopInvariant
                                           : CheckKind::LoopCorrect;
      item.args.push_back(parse_expr());
      item.args.push_back(parse_expr());
    } else if (k == "loop_feasible") {
      item.check = CheckKind::LoopFeasible;
      item.args.push_back(parse_expr());
    } else if (k == "correct") {
      item.check = CheckKind::Correct;
      expect(TokenKind::KwRequire, "after 'check correct'");
      item.args.push_back(parse_expr());
      expect(TokenKind::KwDo, "after the required condition");
      item.args.push_back(parse_expr());
      expect(TokenKind::KwEnsure, "after the contract body");
      item.args.push_back(parse_expr());
      expect(TokenKind::KwEnd, "closing the contract");
    } else if (k == "variant") {
      item.check = CheckKind::Variant;
      expect(TokenKind::LBrace, "opening the variant table");
      for (;;) {
        VariantEntry entry;
        entry.atom = expect(TokenKind::Ident, "as a variant table atom").text;
        expect(TokenKind::Colon, "between atom and measure");
        entry.value = parse_nat("as a variant measure");
        item.variant.push_back(std::move(entry));
        if (!match(TokenKind::Comma)) break;
      }
      expect(TokenKind::RBrace, "closing the variant table");
      item.args.push_back(parse_expr());
    } else if (k == "law") {
      item.check = CheckKind::Law;
      item.law_id = expect(TokenKind::Ident, "naming the law").text;
    } else {
      diagnostics_.push_back({Diagnostic::Severity::Error, kind.line, kind.col,
                              "unknown check kind '" + k + "'",
                              "expected one of feasible, refines, equivalent, correct, commutes, "
                              "invariant, loop_invariant, loop_correct, loop_feasible, variant, "
                              "law"});
      throw ParseError{};
    }
    return item;
  }

  Item parse_print() {
    Item item;
    item.kind = Item::Kind::Print;
    const Token& kw = advance();
    item.line = kw.line;
    item.col = kw.col;
    const Token& q = expect(TokenKind::Ident, "naming the print query");
    if (q.text != "post" && q.text != "pre" && q.text != "range" && q.text != "dom" &&
        q.text != "classify") {
      diagnostics_.push_back({Diagnostic::Severity::Error, q.line, q.col,
                              "unknown print query '" + q.text + "'",
                              "expected one of post, pre, range, dom, classify"});
      throw ParseError{};
    }
    item.query = q.text;
    item.expr = parse_expr();
    return item;
  }

  uint64_t parse_nat(const std::string& context) {
    const Token& t = expect(TokenKind::Nat, context);
    uint64_t value = 0;
    for (char c : t.text) {
      value = value * 10 + static_cast<uint64_t>(c - '0');
      if (value > 1'000'000) {
        diagnostics_.push_back({Diagnostic::Severity::Error, t.line, t.col,
                                "number too large (max 1000000)", ""});
        throw ParseError{};
      }
    }
    return value;
  }

  // --- expressions -------------------------------------------------------
  // Precedence, tightest first: ^  :  \  ;  ||  &  |
  // All binary program operators associate to the left; ":" nests to the
  // right because its left operand is a condition.

  ExprPtr parse_expr() { return parse_bar(); }

  ExprPtr binop(OpKind op, ExprPtr lhs, ExprPtr rhs) {
    auto e = make_expr(Expr::Kind::BinOp, lhs->line, lhs->col);
    e->op = op;
    e->kids = {std::move(lhs), std::move(rhs)};
    return e;
  }

  ExprPtr parse_bar() {
    ExprPtr lhs = parse_amp();
    while (match(TokenKind::Bar)) lhs = binop(OpKind::Bar, std::move(lhs), parse_amp());
    return lhs;
  }
  ExprPtr parse_amp() {
    ExprPtr lhs = parse_barbar();
    while (match(TokenKind::Amp)) lhs = binop(OpKind::Amp, std::move(lhs), parse_barbar());
    return lhs;
  }
  ExprPtr parse_barbar() {
    ExprPtr lhs = parse_semi();
    while (match(TokenKind::BarBar)) lhs = binop(OpKind::BarBar, std::move(lhs), parse_semi());
    return lhs;
  }
  ExprPtr parse_semi() {
    ExprPtr lhs = parse_backslash();
    while (match(TokenKind::Semi)) lhs = binop(OpKind::Semi, std::move(lhs), parse_backslash());
    return lhs;
  }
  ExprPtr parse_backslash() {
    ExprPtr lhs = parse_colon();
    while (match(TokenKind::Backslash))
      lhs = binop(OpKind::Backslash, std::move(lhs), parse_colon());
    return lhs;
  }
  ExprPtr parse_colon() {
    ExprPtr lhs = parse_not();
    if (match(TokenKind::Colon)) return binop(OpKind::Colon, std::move(lhs), parse_colon());
    return lhs;
  }
  ExprPtr parse_not() {
    if (peek().kind == TokenKind::KwNot) {
      const Token& t = advance();
      auto e = make_expr(Expr::Kind::Not, t.line, t.col);
      e->kids.push_back(parse_not());
      return e;
    }
    return parse_power();
  }
  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    while (match(TokenKind::Caret)) {
      auto e = make_expr(Expr::Kind::Power, base->line, base->col);
      e->nat = static_cast<unsigned>(parse_nat("as a repetition count"));
      e->kids.push_back(std::move(base));
      base = std::move(e);
    }
    return base;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Ident: {
        advance();
        auto e = make_expr(Expr::Kind::Ident, t.line, t.col);
        e->name = t.text;
        return e;
      }
      case TokenKind::KwSkip: advance(); return make_expr(Expr::Kind::Skip, t.line, t.col);
      case TokenKind::KwFail: advance(); return make_expr(Expr::Kind::Fail, t.line, t.col);
      case TokenKind::KwHavoc: advance(); return make_expr(Expr::Kind::Havoc, t.line, t.col);
      case TokenKind::LBrace: return parse_set_or_relation_literal();
      case TokenKind::Less: {
        advance();
        auto e = make_expr(Expr::Kind::ProgLit, t.line, t.col);
        e->kids.push_back(parse_expr());
        expect(TokenKind::Comma, "between a program literal's relation and precondition");
        e->kids.push_back(parse_expr());
        expect(TokenKind::Greater, "closing the program literal");
        return e;
      }
      case TokenKind::LParen: {
        advance();
        ExprPtr first = parse_expr();
        if (peek().kind != TokenKind::Comma) {
          expect(TokenKind::RParen, "closing the parenthesis");
          return first;
        }
        auto tuple = make_expr(Expr::Kind::Tuple, t.line, t.col);
        tuple->kids.push_back(std::move(first));
        while (match(TokenKind::Comma)) tuple->kids.push_back(parse_expr());
        expect(TokenKind::RParen, "closing the step tuple");
        return tuple;
      }
      case TokenKind::KwLoop: {
        advance();
        auto e = make_expr(Expr::Kind::Loop, t.line, t.col);
        e->kids.push_back(parse_expr());
        expect(TokenKind::KwEnd, "closing 'loop'");
        return e;
      }
      case TokenKind::KwFrom: {
        advance();
        auto e = make_expr(Expr::Kind::While, t.line, t.col);
        e->kids.push_back(parse_expr());
        expect(TokenKind::KwUntil, "after the loop initialization");
        e->kids.push_back(parse_expr());
        expect(TokenKind::KwLoop, "after the exit condition");
        e->kids.push_back(parse_expr());
        expect(TokenKind::KwEnd, "closing 'from ... until ... loop'");
        return e;
      }
      case TokenKind::KwIf: return parse_if();
      default:
        fail("expected an expression, got " + token_name(t.kind) +
             (t.text.empty() ? "" : " '" + t.text + "'"));
    }
  }

  ExprPtr parse_set_or_relation_literal() {
    const Token& open = advance();  // '{'
    if (peek().kind == TokenKind::LParen) {
      auto e = make_expr(Expr::Kind::RelLit, open.line, open.col);
      do {
        expect(TokenKind::LParen, "opening a pair");
        std::string from = expect(TokenKind::Ident, "as a pair's source atom").text;
        expect(TokenKind::Comma, "between a pair's atoms");
        std::string to = expect(TokenKind::Ident, "as a pair's target atom").text;
        expect(TokenKind::RParen, "closing a pair");
        e->pairs.emplace_back(std::move(from), std::move(to));
      } while (match(TokenKind::Comma));
      expect(TokenKind::RBrace, "closing the relation literal");
      return e;
    }
    auto e = make_expr(Expr::Kind::SetLit, open.line, open.col);
    if (peek().kind != TokenKind::RBrace) {
      e->atoms.push_back(expect(TokenKind::Ident, "as a set member").text);
      while (match(TokenKind::Comma))
        e->atoms.push_back(expect(TokenKind::Ident, "as a set member").text);
    }
    expect(TokenKind::RBrace, "closing the set literal");
    return e;
  }

  // "if C then p else q end"  or  "if C1 : p1 [] C2 : p2 ... end".
  // The first branch of the guarded form parses as one ':' expression.
  ExprPtr parse_if() {
    const Token& kw = advance();
    ExprPtr first = parse_expr();
    if (match(TokenKind::KwThen)) {
      auto e = make_expr(Expr::Kind::Ite, kw.line, kw.col);
      e->kids.push_back(std::move(first));
      e->kids.push_back(parse_expr());
      expect(TokenKind::KwElse, "in if-then-else");
      e->kids.push_back(parse_expr());
      expect(TokenKind::KwEnd, "closing 'if'");
      return e;
    }
    auto e = make_expr(Expr::Kind::Guarded, kw.line, kw.col);
    const auto split_branch = [this](ExprPtr branch, std::vector<ExprPtr>& out) {
      if (branch->kind != Expr::Kind::BinOp || branch->op != OpKind::Colon) {
        diagnostics_.push_back({Diagnostic::Severity::Error, branch->line, branch->col,
                                "a guarded branch must have the form 'guard : body'", ""});
        throw ParseError{};
      }
      out.push_back(branch->kids[0]);
      out.push_back(branch->kids[1]);
    };
    split_branch(std::move(first), e->kids);
    while (match(TokenKind::Box)) split_branch(parse_expr(), e->kids);
    expect(TokenKind::KwEnd, "closing the guarded conditional");
    return e;
  }
};

inline ParseResult parse(const std::string& source) {
  LexResult lexed = tokenize(source);
  Parser parser(std::move(lexed.tokens));
  ParseResult result = parser.run();
  // Lexer diagnostics come first: they are positioned earlier in the pipeline.
  result.diagnostics.insert(result.diagnostics.begin(), lexed.diagnostics.begin(),
                            lexed.diagnostics.end());
  return result;
}

inline Parser::ExprResult parse_expression(const std::string& source) {
  LexResult lexed = tokenize(source);
  Parser parser(std::move(lexed.tokens));
  Parser::ExprResult result = parser.run_expr();
  result.diagnostics.insert(result.diagnostics.begin(), lexed.diagnostics.begin(),
                            lexed.diagnostics.end());
  if (!lexed.diagnostics.empty()) result.expr = nullptr;
  return result;
}

}  // namespace tp::lang

#endif
