#include "puzzle/fol/syntax.h"

#include <algorithm>
#include <tuple>

#include "puzzle/fol/printer.h"

namespace puzzle::fol {

Term Term::variable(std::string name) { return Term{Kind::kVariable, std::move(name), {}}; }

Term Term::constant(std::string name) { return Term{Kind::kConstant, std::move(name), {}}; }

Term Term::application(std::string function, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(function));
  return Term{Kind::kApplication, std::move(function), std::move(args)};
}

bool Term::is_ground() const {
  if (is_variable()) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::occurs(const std::string& var) const {
  if (is_variable()) return name == var;
  return std::any_of(args.begin(), args.end(), [&](const Term& a) { return a.occurs(var); });
}

bool operator==(const Term& a, const Term& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args;
}

bool operator<(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.name != b.name) return a.name < b.name;
  return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  Formula f;
  f.kind = Kind::kAtom;
  f.name = std::move(predicate);
  f.args = std::move(args);
  return f;
}

Formula Formula::equality(Term lhs, Term rhs) {
  Formula f;
  f.kind = Kind::kEquality;
  f.args = {std::move(lhs), std::move(rhs)};
  return f;
}

Formula Formula::negation(Formula g) {
  Formula f;
  f.kind = Kind::kNot;
  f.children.push_back(std::move(g));
  return f;
}

namespace {

Formula binary(Formula::Kind kind, Formula lhs, Formula rhs) {
  Formula f;
  f.kind = kind;
  f.children.reserve(2);
  f.children.push_back(std::move(lhs));
  f.children.push_back(std::move(rhs));
  return f;
}

Formula quantifier(Formula::Kind kind, std::string var, Formula body) {
  Formula f;
  f.kind = kind;
  f.name = std::move(var);
  f.children.push_back(std::move(body));
  return f;
}

}  // namespace

Formula Formula::conjunction(Formula lhs, Formula rhs) { return binary(Kind::kAnd, std::move(lhs), std::move(rhs)); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return binary(Kind::kOr, std::move(lhs), std::move(rhs)); }
Formula Formula::implication(Formula lhs, Formula rhs) { return binary(Kind::kImplies, std::move(lhs), std::move(rhs)); }
Formula Formula::equivalence(Formula lhs, Formula rhs) { return binary(Kind::kIff, std::move(lhs), std::move(rhs)); }
Formula Formula::forall(std::string var, Formula body) { return quantifier(Kind::kForAll, std::move(var), std::move(body)); }
Formula Formula::exists(std::string var, Formula body) { return quantifier(Kind::kExists, std::move(var), std::move(body)); }

Formula Formula::conjunction(const std::vector<Formula>& parts) {
  Formula f = parts.at(0);
  for (size_t i = 1; i < parts.size(); ++i) f = conjunction(std::move(f), parts[i]);
  return f;
}

Formula Formula::disjunction(const std::vector<Formula>& parts) {
  Formula f = parts.at(0);
  for (size_t i = 1; i < parts.size(); ++i) f = disjunction(std::move(f), parts[i]);
  return f;
}

bool Formula::is_binary() const {
  return kind == Kind::kAnd || kind == Kind::kOr || kind == Kind::kImplies || kind == Kind::kIff;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args && a.children == b.children;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.name != b.name) return a.name < b.name;
  if (a.args != b.args)
    return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
  return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                      b.children.end());
}

Formula Literal::to_formula() const {
  Formula atom = is_equality() ? Formula::equality(args.at(0), args.at(1)) : Formula::atom(predicate, args);
  return positive ? atom : Formula::negation(std::move(atom));
}

bool operator==(const Literal& a, const Literal& b) {
  return a.positive == b.positive && a.predicate == b.predicate && a.args == b.args;
}

bool operator<(const Literal& a, const Literal& b) {
  if (a.predicate != b.predicate) return a.predicate < b.predicate;
  if (a.args != b.args)
    return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
  return a.positive < b.positive;
}

const char* to_string(Origin origin) {
  switch (origin) {
    case Origin::kInputAxiom: return "input-axiom";
    case Origin::kSynonymy: return "synonymy";
    case Origin::kNegatedGoal: return "negated-goal";
    case Origin::kDerived: return "derived";
  }
  return "?";
}

Clause::Clause(std::vector<Literal> lits, Provenance prov) : provenance(std::move(prov)) {
  literals.reserve(lits.size());
  for (auto& l : lits) {
    if (std::find(literals.begin(), literals.end(), l) == literals.end()) literals.push_back(std::move(l));
  }
}

bool Clause::is_tautology() const {
  for (size_t i = 0; i < literals.size(); ++i) {
    const Literal& l = literals[i];
    if (l.positive && l.is_equality() && l.args[0] == l.args[1]) return true;
    for (size_t j = i + 1; j < literals.size(); ++j) {
      const Literal& m = literals[j];
      if (l.positive != m.positive && l.predicate == m.predicate && l.args == m.args) return true;
    }
  }
  return false;
}

bool Clause::is_ground() const {
  return std::all_of(literals.begin(), literals.end(), [](const Literal& l) {
    return std::all_of(l.args.begin(), l.args.end(), [](const Term& t) { return t.is_ground(); });
  });
}

bool Clause::is_positive() const {
  return std::all_of(literals.begin(), literals.end(), [](const Literal& l) { return l.positive; });
}

std::set<std::string> Clause::variables() const {
  std::set<std::string> vars;
  for (const auto& l : literals)
    for (const auto& t : l.args) collect_variables(t, vars);
  return vars;
}

std::vector<Literal> Clause::sorted_literals() const {
  auto lits = literals;
  std::sort(lits.begin(), lits.end());
  return lits;
}

bool Clause::same_literals(const Clause& other) const { return sorted_literals() == other.sorted_literals(); }

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_variables(a, out);
}

namespace {

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atomic()) {
    std::set<std::string> vars;
    for (const auto& t : f.args) collect_variables(t, vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
    return;
  }
  if (f.is_quantifier()) {
    bool fresh = bound.insert(f.name).second;
    free_vars(f.body(), bound, out);
    if (fresh) bound.erase(f.name);
    return;
  }
  for (const auto& c : f.children) free_vars(c, bound, out);
}

void term_constants(const Term& t, std::vector<std::string>& out) {
  if (t.is_constant()) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) term_constants(a, out);
}

void formula_constants(const Formula& f, std::vector<std::string>& out) {
  for (const auto& t : f.args) term_constants(t, out);
  for (const auto& c : f.children) formula_constants(c, out);
}

void term_functions(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::kApplication) out.insert(t.name);
  for (const auto& a : t.args) term_functions(a, out);
}

void formula_predicates(const Formula& f, std::map<std::string, size_t>& out) {
  if (f.kind == Formula::Kind::kAtom) out.emplace(f.name, f.args.size());
  for (const auto& c : f.children) formula_predicates(c, out);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  free_vars(f, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_variables(f).empty(); }

std::map<std::string, size_t> predicates(const Formula& f) {
  std::map<std::string, size_t> out;
  formula_predicates(f, out);
  return out;
}

std::vector<std::string> constants(const Formula& f) {
  std::vector<std::string> out;
  formula_constants(f, out);
  return out;
}

std::vector<std::string> constants(const ClauseSet& clauses) {
  std::vector<std::string> out;
  for (const auto& c : clauses)
    for (const auto& l : c.literals)
      for (const auto& t : l.args) term_constants(t, out);
  return out;
}

std::set<std::string> functions(const ClauseSet& clauses) {
  std::set<std::string> out;
  for (const auto& c : clauses)
    for (const auto& l : c.literals)
      for (const auto& t : l.args) term_functions(t, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }
std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << print_formula(f); }
std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << print_literal(l); }
std::ostream& operator<<(std::ostream& os, const Clause& c) { return os << print_clause(c); }

}  // namespace puzzle::fol
