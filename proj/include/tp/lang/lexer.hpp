#ifndef TP_LANG_LEXER_HPP
#define TP_LANG_LEXER_HPP

#include <cctype>
#include <string>
#include <vector>

namespace tp::lang {

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  int line = 1;
  int col = 1;
  std::string message;
  std::string note;
};

inline std::string to_text(const Diagnostic& d) {
  std::string out = (d.severity == Diagnostic::Severity::Error ? "error" : "warning");
  out += " at " + std::to_string(d.line) + ":" + std::to_string(d.col) + ": " + d.message;
  if (!d.note.empty()) out += " (" + d.note + ")";
  return out;
}

enum class TokenKind {
  Ident,
  Nat,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Less,
  Greater,
  Comma,
  Semi,
  Colon,
  Bar,
  BarBar,
  Amp,
  Backslash,
  Caret,
  Equals,
  Box,  // "[]"
  KwUniverse,
  KwCondition,
  KwRelation,
  KwProgram,
  KwCheck,
  KwPrint,
  KwNot,
  KwSkip,
  KwFail,
  KwHavoc,
  KwLoop,
  KwEnd,
  KwFrom,
  KwUntil,
  KwIf,
  KwThen,
  KwElse,
  KwRequire,
  KwDo,
  KwEnsure,
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string text;  // identifier spelling / digits
  int line = 1;
  int col = 1;
};

inline std::string token_name(TokenKind k) {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Nat: return "number";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Less: return "'<'";
    case TokenKind::Greater: return "'>'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semi: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Bar: return "'|'";
    case TokenKind::BarBar: return "'||'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::Backslash: return "'\\'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Box: return "'[]'";
    case TokenKind::KwUniverse: return "'universe'";
    case TokenKind::KwCondition: return "'condition'";
    case TokenKind::KwRelation: return "'relation'";
    case TokenKind::KwProgram: return "'program'";
    case TokenKind::KwCheck: return "'check'";
    case TokenKind::KwPrint: return "'print'";
    case TokenKind::KwNot: return "'not'";
    case TokenKind::KwSkip: return "'skip'";
    case TokenKind::KwFail: return "'fail'";
    case TokenKind::KwHavoc: return "'havoc'";
    case TokenKind::KwLoop: return "'loop'";
    case TokenKind::KwEnd: return "'end'";
    case TokenKind::KwFrom: return "'from'";
    case TokenKind::KwUntil: return "'until'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwThen: return "'then'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwRequire: return "'require'";
    case TokenKind::KwDo: return "'do'";
    case TokenKind::KwEnsure: return "'ensure'";
    case TokenKind::Eof: return "end of file";
  }
  return "?";
}

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an Eof token
  std::vector<Diagnostic> diagnostics;
};

inline TokenKind keyword_kind(const std::string& word) {
  if (word == "universe") return TokenKind::KwUniverse;
  if (word == "condition") return TokenKind::KwCondition;
  if (word == "relation") return TokenKind::KwRelation;
  if (word == "program") return TokenKind::KwProgram;
  if (word == "check") return TokenKind::KwCheck;
  if (word == "print") return TokenKind::KwPrint;
  if (word == "not") return TokenKind::KwNot;
  if (word == "skip") return TokenKind::KwSkip;
  if (word == "fail") return TokenKind::KwFail;
  if (word == "havoc") return TokenKind::KwHavoc;
  if (word == "loop") return TokenKind::KwLoop;
  if (word == "end") return TokenKind::KwEnd;
  if (word == "from") return TokenKind::KwFrom;
  if (word == "until") return TokenKind::KwUntil;
  if (word == "if") return TokenKind::KwIf;
  if (word == "then") return TokenKind::KwThen;
  if (word == "else") return TokenKind::KwElse;
  if (word == "require") return TokenKind::KwRequire;
  if (word == "do") return TokenKind::KwDo;
  if (word == "ensure") return TokenKind::KwEnsure;
  return TokenKind::Ident;
}

inline LexResult tokenize(const std::string& source) {
  LexResult result;
  int line = 1, col = 1;
  size_t i = 0;
  const auto push = [&](TokenKind kind, std::string text, int l, int c) {
    result.tokens.push_back(Token{kind, std::move(text), l, c});
  };
  while (i < source.size()) {
    const char ch = source[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '-' && i + 1 < source.size() && source[i + 1] == '-') {
      while (i < source.size() && source[i] != '\n') ++i;
      continue;  // newline handled above
    }
    const int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < source.size() && (std::isalnum(static_cast<unsigned char>(source[j])) ||
                                   source[j] == '_'))
        ++j;
      std::string word = source.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      const TokenKind kind = keyword_kind(word);
      push(kind, std::move(word), tl, tc);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
      std::string digits = source.substr(i, j - i);
      col += static_cast<int>(j - i);
      i = j;
      push(TokenKind::Nat, std::move(digits), tl, tc);
      continue;
    }
    const auto single = [&](TokenKind kind) {
      push(kind, std::string(1, ch), tl, tc);
      ++col;
      ++i;
    };
    switch (ch) {
      case '{': single(TokenKind::LBrace); continue;
      case '}': single(TokenKind::RBrace); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      case '<': single(TokenKind::Less); continue;
      case '>': single(TokenKind::Greater); continue;
      case ',': single(TokenKind::Comma); continue;
      case ';': single(TokenKind::Semi); continue;
      case ':': single(TokenKind::Colon); continue;
      case '&': single(TokenKind::Amp); continue;
      case '\\': single(TokenKind::Backslash); continue;
      case '^': single(TokenKind::Caret); continue;
      case '=': single(TokenKind::Equals); continue;
      case '|':
        if (i + 1 < source.size() && source[i + 1] == '|') {
          push(TokenKind::BarBar, "||", tl, tc);
          col += 2;
          i += 2;
        } else {
          single(TokenKind::Bar);
        }
        continue;
      case '[':
        if (i + 1 < source.size() && source[i + 1] == ']') {
          push(TokenKind::Box, "[]", tl, tc);
          col += 2;
          i += 2;
          continue;
        }
        [[fallthrough]];
      default:
        result.diagnostics.push_back(
            {Diagnostic::Severity::Error, tl, tc,
             std::string("illegal character '") + ch + "'", ""});
        ++col;
        ++i;
        continue;
    }
  }
  result.tokens.push_back(Token{TokenKind::Eof, "", line, col});
  return result;
}

}  // namespace tp::lang

#endif
