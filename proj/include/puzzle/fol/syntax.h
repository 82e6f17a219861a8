// First-order syntax shared by every stage of the solver: terms, formulas,
// literals and clauses. All values are plain immutable-by-convention structs
// with value semantics.

#ifndef PUZZLE_FOL_SYNTAX_H_
#define PUZZLE_FOL_SYNTAX_H_

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace puzzle::fol {

struct Term {
  enum class Kind { kVariable, kConstant, kApplication };

  Kind kind = Kind::kConstant;
  std::string name;
  std::vector<Term> args;  // only for kApplication

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term application(std::string function, std::vector<Term> args);

  bool is_variable() const { return kind == Kind::kVariable; }
  bool is_constant() const { return kind == Kind::kConstant; }
  bool is_ground() const;
  bool occurs(const std::string& var) const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b);
};

struct Formula {
  enum class Kind { kAtom, kEquality, kNot, kAnd, kOr, kImplies, kIff, kForAll, kExists };

  Kind kind = Kind::kAtom;
  std::string name;             // predicate symbol, or bound variable of a quantifier
  std::vector<Term> args;       // atom arguments; equality uses args[0] = args[1]
  std::vector<Formula> children;  // one for kNot and quantifiers, two for binary connectives

  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equality(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  // Left-nested conjunction/disjunction of a non-empty list.
  static Formula conjunction(const std::vector<Formula>& parts);
  static Formula disjunction(const std::vector<Formula>& parts);

  bool is_atomic() const { return kind == Kind::kAtom || kind == Kind::kEquality; }
  bool is_binary() const;
  bool is_quantifier() const { return kind == Kind::kForAll || kind == Kind::kExists; }
  const Formula& lhs() const { return children.at(0); }
  const Formula& rhs() const { return children.at(1); }
  const Formula& body() const { return children.at(0); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);
};

// A signed atom. Equality literals use the predicate name "=".
struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<Term> args;

  static constexpr const char* kEquality = "=";

  bool is_equality() const { return predicate == kEquality; }
  Literal complement() const { return Literal{!positive, predicate, args}; }
  Formula to_formula() const;

  friend bool operator==(const Literal& a, const Literal& b);
  friend bool operator<(const Literal& a, const Literal& b);
};

enum class Origin { kInputAxiom, kSynonymy, kNegatedGoal, kDerived };

const char* to_string(Origin origin);

struct Provenance {
  Origin origin = Origin::kInputAxiom;
  std::string rule;          // inference rule name for derived clauses
  std::vector<int> parents;  // parent clause ids for derived clauses
};

// A disjunction of literals. Literals are kept duplicate-free in first-insertion
// order; comparisons treat them as a set.
struct Clause {
  int id = 0;
  std::vector<Literal> literals;
  Provenance provenance;

  Clause() = default;
  Clause(std::vector<Literal> lits, Provenance prov = {});

  bool empty() const { return literals.empty(); }
  size_t size() const { return literals.size(); }
  bool is_tautology() const;
  bool is_ground() const;
  bool is_positive() const;
  std::set<std::string> variables() const;
  std::vector<Literal> sorted_literals() const;
  bool same_literals(const Clause& other) const;
};

using ClauseSet = std::vector<Clause>;

// Variable name -> term.
using Substitution = std::map<std::string, Term>;

// Symbol collection helpers.
void collect_variables(const Term& t, std::set<std::string>& out);
std::set<std::string> free_variables(const Formula& f);
bool is_closed(const Formula& f);
// Predicate symbol -> arity (equality excluded).
std::map<std::string, size_t> predicates(const Formula& f);
// Constant symbols occurring in f, in first-occurrence order.
std::vector<std::string> constants(const Formula& f);
std::vector<std::string> constants(const ClauseSet& clauses);
// Function symbols of nonzero arity.
std::set<std::string> functions(const ClauseSet& clauses);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Clause& c);

}  // namespace puzzle::fol

#endif  // PUZZLE_FOL_SYNTAX_H_
