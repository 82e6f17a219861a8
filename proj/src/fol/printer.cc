#include "puzzle/fol/printer.h"

#include <sstream>

namespace puzzle::fol {

namespace {

using Kind = Formula::Kind;

int precedence(const Formula& f) {
  switch (f.kind) {
    case Kind::kIff: return 1;
    case Kind::kImplies: return 2;
    case Kind::kOr: return 3;
    case Kind::kAnd: return 4;
    case Kind::kNot:
    case Kind::kForAll:
    case Kind::kExists: return 5;
    case Kind::kAtom:
    case Kind::kEquality: return 6;
  }
  return 6;
}

const char* op_text(Kind kind) {
  switch (kind) {
    case Kind::kAnd: return " & ";
    case Kind::kOr: return " | ";
    case Kind::kImplies: return " -> ";
    case Kind::kIff: return " <-> ";
    default: return " ? ";
  }
}

void print_args(std::ostream& os, const std::vector<Term>& args) {
  if (args.empty()) return;
  os << '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ',';
    os << print_term(args[i]);
  }
  os << ')';
}

void print(std::ostream& os, const Formula& f, int min_prec);

void print_child(std::ostream& os, const Formula& f, int min_prec) {
  if (precedence(f) < min_prec) {
    os << '(';
    print(os, f, 0);
    os << ')';
  } else {
    print(os, f, min_prec);
  }
}

void print(std::ostream& os, const Formula& f, int) {
  switch (f.kind) {
    case Kind::kAtom:
      os << f.name;
      print_args(os, f.args);
      return;
    case Kind::kEquality:
      os << print_term(f.args[0]) << " = " << print_term(f.args[1]);
      return;
    case Kind::kNot:
      if (f.body().kind == Kind::kEquality) {
        os << print_term(f.body().args[0]) << " != " << print_term(f.body().args[1]);
        return;
      }
      os << '-';
      print_child(os, f.body(), 5);
      return;
    case Kind::kForAll:
    case Kind::kExists:
      os << (f.kind == Kind::kForAll ? "all " : "exists ") << f.name << ' ';
      print_child(os, f.body(), 5);
      return;
    case Kind::kAnd:
      print_child(os, f.lhs(), 4);
      os << op_text(f.kind);
      print_child(os, f.rhs(), 5);
      return;
    case Kind::kOr:
      print_child(os, f.lhs(), 3);
      os << op_text(f.kind);
      print_child(os, f.rhs(), 4);
      return;
    case Kind::kImplies:
      print_child(os, f.lhs(), 3);
      os << op_text(f.kind);
      print_child(os, f.rhs(), 2);
      return;
    case Kind::kIff:
      print_child(os, f.lhs(), 2);
      os << op_text(f.kind);
      print_child(os, f.rhs(), 2);
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::ostringstream os;
  os << t.name;
  print_args(os, t.args);
  return os.str();
}

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print(os, f, 0);
  return os.str();
}

std::string print_literal(const Literal& l) {
  std::ostringstream os;
  if (l.is_equality()) {
    os << print_term(l.args.at(0)) << (l.positive ? " = " : " != ") << print_term(l.args.at(1));
    return os.str();
  }
  if (!l.positive) os << '-';
  os << l.predicate;
  print_args(os, l.args);
  return os.str();
}

std::string print_clause(const Clause& c) {
  if (c.empty()) return "$F";
  std::string out;
  for (size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += " | ";
    out += print_literal(c.literals[i]);
  }
  return out;
}

}  // namespace puzzle::fol
