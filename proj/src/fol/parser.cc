#include "puzzle/fol/parser.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace puzzle::fol {

SyntaxError::SyntaxError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool SymbolTable::note_predicate(const std::string& name, size_t arity) {
  auto [it, inserted] = predicates_.emplace(name, arity);
  return inserted || it->second == arity;
}

bool SymbolTable::note_function(const std::string& name, size_t arity) {
  auto [it, inserted] = functions_.emplace(name, arity);
  return inserted || it->second == arity;
}

bool is_free_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'u' || name[0] > 'z') return false;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

namespace {

enum class Tok { kIdent, kLParen, kRParen, kComma, kDot, kNot, kAnd, kOr, kImplies, kIff, kEq, kNeq, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t{Tok::kEnd, "", line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (is_ident_char(c)) {
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) t.text += advance();
        t.kind = Tok::kIdent;
      } else if (starts("<->")) {
        t = punct(Tok::kIff, 3, t);
      } else if (starts("->")) {
        t = punct(Tok::kImplies, 2, t);
      } else if (starts("!=")) {
        t = punct(Tok::kNeq, 2, t);
      } else {
        switch (c) {
          case '(': t = punct(Tok::kLParen, 1, t); break;
          case ')': t = punct(Tok::kRParen, 1, t); break;
          case ',': t = punct(Tok::kComma, 1, t); break;
          case '.': t = punct(Tok::kDot, 1, t); break;
          case '-': t = punct(Tok::kNot, 1, t); break;
          case '&': t = punct(Tok::kAnd, 1, t); break;
          case '|': t = punct(Tok::kOr, 1, t); break;
          case '=': t = punct(Tok::kEq, 1, t); break;
          default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
        }
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '$';
  }

  bool starts(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  Token punct(Tok kind, size_t len, Token t) {
    for (size_t i = 0; i < len; ++i) t.text += advance();
    t.kind = kind;
    return t;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, SymbolTable* symbols) : tokens_(std::move(tokens)), symbols_(symbols) {}

  bool at_end() const { return peek().kind == Tok::kEnd; }
  const Token& peek(size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  // formula '.'
  Formula statement() {
    Formula f = iff();
    expect(Tok::kDot, "'.'");
    return f;
  }

  bool accept_ident(std::string_view word) {
    if (peek().kind == Tok::kIdent && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.column);
  }

 private:
  Formula iff() {
    Formula lhs = implies();
    while (peek().kind == Tok::kIff) {
      ++pos_;
      lhs = Formula::equivalence(std::move(lhs), implies());
    }
    return lhs;
  }

  Formula implies() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::kImplies) {
      ++pos_;
      return Formula::implication(std::move(lhs), implies());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::kOr) {
      ++pos_;
      lhs = Formula::disjunction(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::kAnd) {
      ++pos_;
      lhs = Formula::conjunction(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::kNot) {
      ++pos_;
      return Formula::negation(unary());
    }
    if (t.kind == Tok::kLParen) {
      ++pos_;
      Formula f = iff();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (t.kind == Tok::kIdent && (t.text == "all" || t.text == "exists") && peek(1).kind == Tok::kIdent) {
      bool universal = t.text == "all";
      ++pos_;
      std::string var = peek().text;
      ++pos_;
      bound_.push_back(var);
      Formula body = unary();
      bound_.pop_back();
      return universal ? Formula::forall(var, std::move(body)) : Formula::exists(var, std::move(body));
    }
    return atomic();
  }

  Formula atomic() {
    if (peek().kind != Tok::kIdent) fail("expected formula");
    const Token head = peek();
    if (peek(1).kind == Tok::kEq || peek(1).kind == Tok::kNeq || equality_after_application()) {
      Term lhs = term();
      bool negated = peek().kind == Tok::kNeq;
      if (peek().kind != Tok::kEq && peek().kind != Tok::kNeq) fail("expected '=' or '!='");
      ++pos_;
      Term rhs = term();
      Formula eq = Formula::equality(std::move(lhs), std::move(rhs));
      return negated ? Formula::negation(std::move(eq)) : eq;
    }
    ++pos_;
    std::vector<Term> args = argument_list();
    if (symbols_ && !symbols_->note_predicate(head.text, args.size()))
      throw ArityError("predicate '" + head.text + "' used with arity " + std::to_string(args.size()) +
                           ", previously " + std::to_string(symbols_->predicate_arities().at(head.text)),
                       head.line, head.column);
    return Formula::atom(head.text, std::move(args));
  }

  // Looks past `f(...)` to see whether an equality sign follows.
  bool equality_after_application() const {
    if (peek(1).kind != Tok::kLParen) return false;
    int depth = 0;
    for (size_t i = pos_ + 1; i < tokens_.size(); ++i) {
      if (tokens_[i].kind == Tok::kLParen) ++depth;
      if (tokens_[i].kind == Tok::kRParen && --depth == 0) {
        Tok next = i + 1 < tokens_.size() ? tokens_[i + 1].kind : Tok::kEnd;
        return next == Tok::kEq || next == Tok::kNeq;
      }
      if (tokens_[i].kind == Tok::kEnd) return false;
    }
    return false;
  }

  std::vector<Term> argument_list() {
    std::vector<Term> args;
    if (peek().kind != Tok::kLParen) return args;
    ++pos_;
    args.push_back(term());
    while (peek().kind == Tok::kComma) {
      ++pos_;
      args.push_back(term());
    }
    expect(Tok::kRParen, "')' or ','");
    return args;
  }

  Term term() {
    if (peek().kind != Tok::kIdent) fail("expected term");
    const Token head = peek();
    ++pos_;
    std::vector<Term> args = argument_list();
    if (args.empty()) {
      bool bound = std::find(bound_.begin(), bound_.end(), head.text) != bound_.end();
      if (bound || is_free_variable_name(head.text)) return Term::variable(head.text);
    }
    if (symbols_ && !symbols_->note_function(head.text, args.size()))
      throw ArityError("function '" + head.text + "' used with arity " + std::to_string(args.size()) +
                           ", previously " + std::to_string(symbols_->function_arities().at(head.text)),
                       head.line, head.column);
    return Term::application(head.text, std::move(args));
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  SymbolTable* symbols_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, SymbolTable* symbols) {
  Parser p(Lexer(text).run(), symbols);
  Formula f = p.statement();
  if (!p.at_end()) p.fail("expected end of input after '.'");
  return f;
}

std::vector<Formula> parse_formulas(std::string_view text, SymbolTable* symbols) {
  Parser p(Lexer(text).run(), symbols);
  std::vector<Formula> out;
  while (!p.at_end()) out.push_back(p.statement());
  return out;
}

Theory parse_theory(std::string_view text) {
  SymbolTable symbols;
  Parser p(Lexer(text).run(), &symbols);
  Theory theory;
  std::vector<Formula>* section = &theory.assumptions;
  bool in_list = false;
  while (!p.at_end()) {
    if (p.peek().kind == Tok::kIdent && p.peek().text == "formulas" && p.peek(1).kind == Tok::kLParen) {
      if (in_list) p.fail("nested formulas(...) list");
      p.accept_ident("formulas");
      p.expect(Tok::kLParen, "'('");
      if (p.accept_ident("assumptions") || p.accept_ident("sos") || p.accept_ident("usable")) {
        section = &theory.assumptions;
      } else if (p.accept_ident("goals")) {
        section = &theory.goals;
      } else {
        p.fail("expected 'assumptions' or 'goals'");
      }
      p.expect(Tok::kRParen, "')'");
      p.expect(Tok::kDot, "'.'");
      in_list = true;
      continue;
    }
    if (p.peek().kind == Tok::kIdent && p.peek().text == "end_of_list" && p.peek(1).kind == Tok::kDot) {
      if (!in_list) p.fail("end_of_list without formulas(...)");
      p.accept_ident("end_of_list");
      p.expect(Tok::kDot, "'.'");
      section = &theory.assumptions;
      in_list = false;
      continue;
    }
    section->push_back(p.statement());
  }
  if (in_list) p.fail("missing end_of_list");
  return theory;
}

}  // namespace puzzle::fol
