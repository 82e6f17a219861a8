#include "puzzle/lambda/lambda_term.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace puzzle::lambda {

using Kind = LambdaTerm::Kind;

LambdaTerm LambdaTerm::var(std::string name) { return LambdaTerm{Kind::kVar, std::move(name), {}}; }

LambdaTerm LambdaTerm::lam(std::string var, LambdaTerm body) {
  return LambdaTerm{Kind::kLam, std::move(var), {std::move(body)}};
}

LambdaTerm LambdaTerm::app(LambdaTerm fun, LambdaTerm arg) {
  return LambdaTerm{Kind::kApp, "", {std::move(fun), std::move(arg)}};
}

LambdaTerm LambdaTerm::constant(std::string name) { return LambdaTerm{Kind::kConst, std::move(name), {}}; }

LambdaTerm LambdaTerm::atom(std::string predicate, std::vector<LambdaTerm> args) {
  return LambdaTerm{Kind::kAtom, std::move(predicate), std::move(args)};
}

LambdaTerm LambdaTerm::unary(Kind kind, LambdaTerm child) { return LambdaTerm{kind, "", {std::move(child)}}; }

LambdaTerm LambdaTerm::binary(Kind kind, LambdaTerm lhs, LambdaTerm rhs) {
  return LambdaTerm{kind, "", {std::move(lhs), std::move(rhs)}};
}

LambdaTerm LambdaTerm::binder(Kind kind, std::string var, LambdaTerm body) {
  return LambdaTerm{kind, std::move(var), {std::move(body)}};
}

bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
  return a.kind == b.kind && a.name == b.name && a.children == b.children;
}

LambdaSyntaxError::LambdaSyntaxError(const std::string& message, size_t offset)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { kIdent, kBackslash, kDot, kLParen, kRParen, kComma, kNot, kAnd, kOr, kImplies, kIff, kEq, kNeq, kEnd };

struct Token {
  Tok kind;
  std::string text;
  size_t offset;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '?' || c == '\'' || c == '$';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    size_t start = i;
    char c = s[i];
    if (is_ident_char(c)) {
      while (i < s.size() && is_ident_char(s[i])) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
    Tok kind;
    size_t len = 1;
    if (starts("<->")) {
      kind = Tok::kIff;
      len = 3;
    } else if (starts("->")) {
      kind = Tok::kImplies;
      len = 2;
    } else if (starts("!=")) {
      kind = Tok::kNeq;
      len = 2;
    } else {
      switch (c) {
        case '\\': kind = Tok::kBackslash; break;
        case '.': kind = Tok::kDot; break;
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case ',': kind = Tok::kComma; break;
        case '-': kind = Tok::kNot; break;
        case '&': kind = Tok::kAnd; break;
        case '|': kind = Tok::kOr; break;
        case '=': kind = Tok::kEq; break;
        default: throw LambdaSyntaxError(std::string("unexpected character '") + c + "'", i);
      }
    }
    out.push_back({kind, std::string(s.substr(i, len)), start});
    i += len;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  LambdaTerm parse() {
    LambdaTerm t = expr();
    if (peek().kind != Tok::kEnd) fail("unexpected token");
    return t;
  }

 private:
  const Token& peek(size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw LambdaSyntaxError(message + (t.kind == Tok::kEnd ? " at end of input" : " at '" + t.text + "'"), t.offset);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  LambdaTerm expr() {
    LambdaTerm lhs = implication();
    while (accept(Tok::kIff)) lhs = LambdaTerm::binary(Kind::kIff, std::move(lhs), implication());
    return lhs;
  }

  LambdaTerm implication() {
    LambdaTerm lhs = disjunction();
    if (accept(Tok::kImplies)) return LambdaTerm::binary(Kind::kImplies, std::move(lhs), implication());
    return lhs;
  }

  LambdaTerm disjunction() {
    LambdaTerm lhs = conjunction();
    while (accept(Tok::kOr)) lhs = LambdaTerm::binary(Kind::kOr, std::move(lhs), conjunction());
    return lhs;
  }

  LambdaTerm conjunction() {
    LambdaTerm lhs = unary();
    while (accept(Tok::kAnd)) lhs = LambdaTerm::binary(Kind::kAnd, std::move(lhs), unary());
    return lhs;
  }

  LambdaTerm unary() {
    if (accept(Tok::kNot)) return LambdaTerm::unary(Kind::kNot, unary());
    if (accept(Tok::kBackslash)) return binder(Kind::kLam, true);
    if (peek().kind == Tok::kIdent && (peek().text == "all" || peek().text == "exists") &&
        peek(1).kind == Tok::kIdent) {
      Kind kind = peek().text == "all" ? Kind::kForAll : Kind::kExists;
      ++pos_;
      return binder(kind, false);
    }
    return equation();
  }

  // After `\` or the quantifier word: one or more variables, then `.` body.
  // Quantifiers also accept the Prover9 form without a dot.
  LambdaTerm binder(Kind kind, bool need_dot) {
    std::vector<std::string> vars;
    while (peek().kind == Tok::kIdent) vars.push_back(tokens_[pos_++].text);
    if (vars.empty()) fail("expected variable");
    for (const auto& v : vars) bound_.push_back(v);
    LambdaTerm body;
    if (accept(Tok::kDot)) {
      body = expr();
    } else {
      if (need_dot || vars.size() != 1) fail("expected '.'");
      body = unary();
    }
    bound_.resize(bound_.size() - vars.size());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = LambdaTerm::binder(kind, *it, std::move(body));
    return body;
  }

  LambdaTerm equation() {
    LambdaTerm lhs = application();
    if (accept(Tok::kEq)) return LambdaTerm::binary(Kind::kEquals, std::move(lhs), application());
    if (accept(Tok::kNeq))
      return LambdaTerm::unary(Kind::kNot, LambdaTerm::binary(Kind::kEquals, std::move(lhs), application()));
    return lhs;
  }

  std::vector<LambdaTerm> arguments() {
    std::vector<LambdaTerm> args;
    expect(Tok::kLParen, "'('");
    if (accept(Tok::kRParen)) return args;
    args.push_back(expr());
    while (accept(Tok::kComma)) args.push_back(expr());
    expect(Tok::kRParen, "')' or ','");
    return args;
  }

  bool is_variable(const std::string& name) const {
    return name[0] == '?' || std::find(bound_.begin(), bound_.end(), name) != bound_.end();
  }

  LambdaTerm application() {
    LambdaTerm head;
    bool applicable = true;
    if (accept(Tok::kLParen)) {
      head = expr();
      expect(Tok::kRParen, "')'");
    } else if (peek().kind == Tok::kIdent) {
      std::string name = tokens_[pos_++].text;
      if (is_variable(name)) {
        head = LambdaTerm::var(name);
      } else if (peek().kind == Tok::kLParen) {
        head = LambdaTerm::atom(name, arguments());
        applicable = false;
      } else {
        head = LambdaTerm::constant(name);
        applicable = false;
      }
    } else {
      fail("expected expression");
    }
    while (applicable && peek().kind == Tok::kLParen) {
      std::vector<LambdaTerm> args = arguments();
      if (args.empty()) fail("empty argument list");
      for (auto& a : args) head = LambdaTerm::app(std::move(head), std::move(a));
    }
    return head;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  std::vector<std::string> bound_;
};

// ---------------------------------------------------------------- printing

int precedence(const LambdaTerm& t) {
  switch (t.kind) {
    case Kind::kLam:
    case Kind::kForAll:
    case Kind::kExists: return 0;
    case Kind::kIff: return 1;
    case Kind::kImplies: return 2;
    case Kind::kOr: return 3;
    case Kind::kAnd: return 4;
    case Kind::kEquals: return 5;
    case Kind::kNot:
      return t.children[0].kind == Kind::kEquals ? 5 : 6;
    default: return 7;
  }
}

void print(std::ostream& os, const LambdaTerm& t, int min_prec);

void print_args(std::ostream& os, const std::vector<const LambdaTerm*>& args) {
  os << '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ',';
    print(os, *args[i], 0);
  }
  os << ')';
}

void print(std::ostream& os, const LambdaTerm& t, int min_prec) {
  // Binders extend to the right, so they are bracketed anywhere but the top.
  bool parens = precedence(t) < min_prec || (precedence(t) == 0 && min_prec > 0);
  if (parens) os << '(';
  switch (t.kind) {
    case Kind::kVar:
    case Kind::kConst: os << t.name; break;
    case Kind::kAtom: {
      std::vector<const LambdaTerm*> args;
      for (const auto& c : t.children) args.push_back(&c);
      os << t.name;
      print_args(os, args);
      break;
    }
    case Kind::kApp: {
      std::vector<const LambdaTerm*> args;
      const LambdaTerm* head = &t;
      while (head->kind == Kind::kApp) {
        args.push_back(&head->children[1]);
        head = &head->children[0];
      }
      std::reverse(args.begin(), args.end());
      if (head->kind == Kind::kVar) {
        os << head->name;
      } else {
        os << '(';
        print(os, *head, 0);
        os << ')';
      }
      print_args(os, args);
      break;
    }
    case Kind::kLam: os << '\\' << t.name << '.'; print(os, t.children[0], 0); break;
    case Kind::kForAll: os << "all " << t.name << '.'; print(os, t.children[0], 0); break;
    case Kind::kExists: os << "exists " << t.name << '.'; print(os, t.children[0], 0); break;
    case Kind::kEquals:
      print(os, t.children[0], 7);
      os << " = ";
      print(os, t.children[1], 7);
      break;
    case Kind::kNot:
      if (t.children[0].kind == Kind::kEquals) {
        print(os, t.children[0].children[0], 7);
        os << " != ";
        print(os, t.children[0].children[1], 7);
      } else {
        os << '-';
        print(os, t.children[0], 6);
      }
      break;
    case Kind::kAnd:
      print(os, t.children[0], 4);
      os << " & ";
      print(os, t.children[1], 5);
      break;
    case Kind::kOr:
      print(os, t.children[0], 3);
      os << " | ";
      print(os, t.children[1], 4);
      break;
    case Kind::kImplies:
      print(os, t.children[0], 3);
      os << " -> ";
      print(os, t.children[1], 2);
      break;
    case Kind::kIff:
      print(os, t.children[0], 2);
      os << " <-> ";
      print(os, t.children[1], 2);
      break;
  }
  if (parens) os << ')';
}

// ---------------------------------------------------------------- substitution

void collect_free(const LambdaTerm& t, std::vector<std::string>& bound, std::vector<std::string>& out) {
  if (t.kind == Kind::kVar) {
    if (std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
        std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
    return;
  }
  if (t.is_binder()) bound.push_back(t.name);
  for (const auto& c : t.children) collect_free(c, bound, out);
  if (t.is_binder()) bound.pop_back();
}

void collect_names(const LambdaTerm& t, std::set<std::string>& out) {
  if (t.kind == Kind::kVar || t.is_binder()) out.insert(t.name);
  for (const auto& c : t.children) collect_names(c, out);
}

class Substituter {
 public:
  LambdaTerm run(const LambdaTerm& t, const std::map<std::string, LambdaTerm>& bindings) {
    switch (t.kind) {
      case Kind::kVar: {
        auto it = bindings.find(t.name);
        return it == bindings.end() ? t : it->second;
      }
      case Kind::kLam:
      case Kind::kForAll:
      case Kind::kExists: return under_binder(t, bindings);
      default: {
        LambdaTerm out{t.kind, t.name, {}};
        out.children.reserve(t.children.size());
        for (const auto& c : t.children) out.children.push_back(run(c, bindings));
        return out;
      }
    }
  }

 private:
  LambdaTerm under_binder(const LambdaTerm& t, std::map<std::string, LambdaTerm> bindings) {
    bindings.erase(t.name);
    const LambdaTerm& body = t.children[0];
    std::vector<std::string> body_free = free_variables(body);
    // Keep only bindings that matter; an unused binding cannot capture.
    for (auto it = bindings.begin(); it != bindings.end();) {
      if (std::find(body_free.begin(), body_free.end(), it->first) == body_free.end())
        it = bindings.erase(it);
      else
        ++it;
    }
    if (bindings.empty()) return t;
    bool captures = false;
    for (const auto& [name, value] : bindings) {
      std::vector<std::string> fv = free_variables(value);
      if (std::find(fv.begin(), fv.end(), t.name) != fv.end()) captures = true;
    }
    if (!captures) return LambdaTerm::binder(t.kind, t.name, run(body, bindings));
    std::set<std::string> taken;
    collect_names(body, taken);
    for (const auto& [name, value] : bindings) {
      taken.insert(name);
      collect_names(value, taken);
    }
    std::string fresh;
    do fresh = "_v" + std::to_string(++counter_);
    while (taken.count(fresh));
    bindings[t.name] = LambdaTerm::var(fresh);
    return LambdaTerm::binder(t.kind, fresh, run(body, bindings));
  }

  int counter_ = 0;
  friend class Reducer;
};

class Reducer {
 public:
  explicit Reducer(int budget) : budget_(budget) {}

  LambdaTerm normalize(LambdaTerm t) {
    while (step(t)) {
      if (++steps_ > budget_)
        throw ReductionBudgetExceeded("beta reduction exceeded " + std::to_string(budget_) + " steps");
    }
    return t;
  }

  int steps() const { return steps_; }

 private:
  // One leftmost-outermost contraction, in place.
  bool step(LambdaTerm& t) {
    if (t.kind == Kind::kApp && t.children[0].kind == Kind::kLam) {
      LambdaTerm& lam = t.children[0];
      LambdaTerm result = subst_.run(lam.children[0], {{lam.name, t.children[1]}});
      t = std::move(result);
      return true;
    }
    for (auto& c : t.children)
      if (step(c)) return true;
    return false;
  }

  int budget_;
  int steps_ = 0;
  Substituter subst_;
};

// ---------------------------------------------------------------- formulas

using BoundStack = std::vector<std::string>;

bool is_bound(const BoundStack& b, const std::string& name) {
  return std::find(b.begin(), b.end(), name) != b.end();
}

[[noreturn]] void incomplete(const std::string& what, const LambdaTerm& t) {
  throw IncompleteSemantics(what + ": " + print_lambda(t));
}

fol::Term to_term(const LambdaTerm& t, const BoundStack& bound) {
  switch (t.kind) {
    case Kind::kConst: return fol::Term::constant(t.name);
    case Kind::kVar:
      if (!is_bound(bound, t.name)) incomplete("free variable " + t.name, t);
      return fol::Term::variable(t.name);
    case Kind::kAtom: {
      std::vector<fol::Term> args;
      for (const auto& c : t.children) args.push_back(to_term(c, bound));
      return fol::Term::application(t.name, std::move(args));
    }
    default: incomplete("expected a term", t);
  }
}

fol::Formula to_formula(const LambdaTerm& t, BoundStack& bound) {
  switch (t.kind) {
    case Kind::kConst: return fol::Formula::atom(t.name);
    case Kind::kAtom: {
      std::vector<fol::Term> args;
      for (const auto& c : t.children) args.push_back(to_term(c, bound));
      return fol::Formula::atom(t.name, std::move(args));
    }
    case Kind::kEquals: return fol::Formula::equality(to_term(t.children[0], bound), to_term(t.children[1], bound));
    case Kind::kNot: return fol::Formula::negation(to_formula(t.children[0], bound));
    case Kind::kAnd: return fol::Formula::conjunction(to_formula(t.children[0], bound), to_formula(t.children[1], bound));
    case Kind::kOr: return fol::Formula::disjunction(to_formula(t.children[0], bound), to_formula(t.children[1], bound));
    case Kind::kImplies:
      return fol::Formula::implication(to_formula(t.children[0], bound), to_formula(t.children[1], bound));
    case Kind::kIff: return fol::Formula::equivalence(to_formula(t.children[0], bound), to_formula(t.children[1], bound));
    case Kind::kForAll:
    case Kind::kExists: {
      bound.push_back(t.name);
      fol::Formula body = to_formula(t.children[0], bound);
      bound.pop_back();
      return t.kind == Kind::kForAll ? fol::Formula::forall(t.name, std::move(body))
                                     : fol::Formula::exists(t.name, std::move(body));
    }
    case Kind::kVar: incomplete("unapplied variable " + t.name, t);
    case Kind::kLam: incomplete("unapplied abstraction", t);
    case Kind::kApp: incomplete("unreduced application", t);
  }
  incomplete("unknown node", t);
}

LambdaTerm from_term(const fol::Term& t) {
  switch (t.kind) {
    case fol::Term::Kind::kVariable: return LambdaTerm::var(t.name);
    case fol::Term::Kind::kConstant: return LambdaTerm::constant(t.name);
    case fol::Term::Kind::kApplication: {
      std::vector<LambdaTerm> args;
      for (const auto& a : t.args) args.push_back(from_term(a));
      return LambdaTerm::atom(t.name, std::move(args));
    }
  }
  return LambdaTerm::constant(t.name);
}

bool alpha_eq(const LambdaTerm& a, const LambdaTerm& b, std::vector<std::pair<std::string, std::string>>& binders) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  if (a.kind == Kind::kVar) {
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      bool left = it->first == a.name;
      bool right = it->second == b.name;
      if (left || right) return left && right;
    }
    return a.name == b.name;
  }
  if (a.is_binder()) {
    binders.emplace_back(a.name, b.name);
    bool eq = alpha_eq(a.children[0], b.children[0], binders);
    binders.pop_back();
    return eq;
  }
  if (a.name != b.name) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!alpha_eq(a.children[i], b.children[i], binders)) return false;
  return true;
}

void collect_predicates(const LambdaTerm& t, std::vector<std::string>& out, bool term_position) {
  if (t.kind == Kind::kAtom && !term_position && std::find(out.begin(), out.end(), t.name) == out.end())
    out.push_back(t.name);
  bool args_are_terms = t.kind == Kind::kAtom || t.kind == Kind::kEquals;
  for (const auto& c : t.children) collect_predicates(c, out, args_are_terms);
}

}  // namespace

LambdaTerm parse_lambda(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string print_lambda(const LambdaTerm& t) {
  std::ostringstream os;
  print(os, t, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LambdaTerm& t) {
  print(os, t, 0);
  return os;
}

LambdaTerm apply(LambdaTerm fun, LambdaTerm arg) { return LambdaTerm::app(std::move(fun), std::move(arg)); }

LambdaTerm beta_reduce(const LambdaTerm& t, int budget) { return Reducer(budget).normalize(t); }

int reduction_steps(const LambdaTerm& t, int budget) {
  Reducer r(budget);
  r.normalize(t);
  return r.steps();
}

LambdaTerm substitute(const LambdaTerm& t, const std::map<std::string, LambdaTerm>& bindings) {
  return Substituter().run(t, bindings);
}

bool alpha_equivalent(const LambdaTerm& a, const LambdaTerm& b) {
  std::vector<std::pair<std::string, std::string>> binders;
  return alpha_eq(a, b, binders);
}

std::vector<std::string> free_variables(const LambdaTerm& t) {
  std::vector<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

LambdaTerm from_formula(const fol::Formula& f) {
  using FK = fol::Formula::Kind;
  switch (f.kind) {
    case FK::kAtom: {
      std::vector<LambdaTerm> args;
      for (const auto& a : f.args) args.push_back(from_term(a));
      return LambdaTerm::atom(f.name, std::move(args));
    }
    case FK::kEquality: return LambdaTerm::binary(Kind::kEquals, from_term(f.args[0]), from_term(f.args[1]));
    case FK::kNot: return LambdaTerm::unary(Kind::kNot, from_formula(f.children[0]));
    case FK::kAnd: return LambdaTerm::binary(Kind::kAnd, from_formula(f.lhs()), from_formula(f.rhs()));
    case FK::kOr: return LambdaTerm::binary(Kind::kOr, from_formula(f.lhs()), from_formula(f.rhs()));
    case FK::kImplies: return LambdaTerm::binary(Kind::kImplies, from_formula(f.lhs()), from_formula(f.rhs()));
    case FK::kIff: return LambdaTerm::binary(Kind::kIff, from_formula(f.lhs()), from_formula(f.rhs()));
    case FK::kForAll: return LambdaTerm::binder(Kind::kForAll, f.name, from_formula(f.body()));
    case FK::kExists: return LambdaTerm::binder(Kind::kExists, f.name, from_formula(f.body()));
  }
  throw std::logic_error("from_formula: unknown kind");
}

fol::Formula to_formula(const LambdaTerm& t) {
  BoundStack bound;
  return to_formula(t, bound);
}

LambdaTerm rename_predicate(const LambdaTerm& t, const std::string& from, const std::string& to) {
  LambdaTerm out{t.kind, t.name, {}};
  if (t.kind == Kind::kAtom && t.name == from) out.name = to;
  for (const auto& c : t.children) out.children.push_back(rename_predicate(c, from, to));
  return out;
}

std::vector<std::string> predicate_names(const LambdaTerm& t) {
  std::vector<std::string> out;
  collect_predicates(t, out, false);
  return out;
}

}  // namespace puzzle::lambda
