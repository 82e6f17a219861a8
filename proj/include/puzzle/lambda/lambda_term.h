// Lambda terms over first-order formulas, used to compose word meanings.
//
// Textual syntax (the SEM values of grammar files):
//   \x.body  \x y.body      abstraction (body extends to the right)
//   f(a)  f(a,b)  (e)(a)    application; f(a,b) is f(a)(b)
//   all x.body  exists x.body
//   -  &  |  ->  <->  =  !=
// An identifier applied to arguments is a variable application when it is
// bound by an enclosing `\` or starts with `?` (grammar rule variables), and a
// predicate atom otherwise. A bare unbound identifier is an individual
// constant.

#ifndef PUZZLE_LAMBDA_LAMBDA_TERM_H_
#define PUZZLE_LAMBDA_LAMBDA_TERM_H_

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/fol/syntax.h"

namespace puzzle::lambda {

struct LambdaTerm {
  enum class Kind {
    kVar,
    kLam,
    kApp,
    // Formula fragments. Children may be arbitrary lambda terms.
    kConst,
    kAtom,
    kEquals,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
    kForAll,
    kExists,
  };

  Kind kind = Kind::kConst;
  std::string name;  // variable, binder, constant or predicate name
  std::vector<LambdaTerm> children;

  static LambdaTerm var(std::string name);
  static LambdaTerm lam(std::string var, LambdaTerm body);
  static LambdaTerm app(LambdaTerm fun, LambdaTerm arg);
  static LambdaTerm constant(std::string name);
  static LambdaTerm atom(std::string predicate, std::vector<LambdaTerm> args);
  static LambdaTerm unary(Kind kind, LambdaTerm child);
  static LambdaTerm binary(Kind kind, LambdaTerm lhs, LambdaTerm rhs);
  static LambdaTerm binder(Kind kind, std::string var, LambdaTerm body);

  bool is_binder() const { return kind == Kind::kLam || kind == Kind::kForAll || kind == Kind::kExists; }

  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b);
  friend bool operator!=(const LambdaTerm& a, const LambdaTerm& b) { return !(a == b); }
};

class LambdaSyntaxError : public std::runtime_error {
 public:
  LambdaSyntaxError(const std::string& message, size_t offset);
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class ReductionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by to_formula when lambda structure or a free variable survives.
class IncompleteSemantics : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LambdaTerm parse_lambda(std::string_view text);
std::string print_lambda(const LambdaTerm& t);
std::ostream& operator<<(std::ostream& os, const LambdaTerm& t);

// Builds App(fun, arg); no reduction.
LambdaTerm apply(LambdaTerm fun, LambdaTerm arg);

constexpr int kDefaultReductionBudget = 10000;

// Normal-order (leftmost-outermost) reduction to beta-normal form. Binders are
// renamed to `_vN` when substitution would capture; the counter is local to
// one call.
LambdaTerm beta_reduce(const LambdaTerm& t, int budget = kDefaultReductionBudget);

// Number of beta steps normal-order reduction of `t` takes, up to `budget`.
int reduction_steps(const LambdaTerm& t, int budget = kDefaultReductionBudget);

// Capture-avoiding replacement of free variables (used for `?x` rule
// variables as well as ordinary ones).
LambdaTerm substitute(const LambdaTerm& t, const std::map<std::string, LambdaTerm>& bindings);

bool alpha_equivalent(const LambdaTerm& a, const LambdaTerm& b);

std::vector<std::string> free_variables(const LambdaTerm& t);

// Embeds a formula; quantified variables become bound Var nodes.
LambdaTerm from_formula(const fol::Formula& f);

// Converts a beta-normal term. Variables bound by `all`/`exists` become FOL
// variables; anything else left over raises IncompleteSemantics.
fol::Formula to_formula(const LambdaTerm& t);

// Renames predicate symbol `from` to `to` throughout.
LambdaTerm rename_predicate(const LambdaTerm& t, const std::string& from, const std::string& to);

// Predicate symbols in first-occurrence order.
std::vector<std::string> predicate_names(const LambdaTerm& t);

}  // namespace puzzle::lambda

#endif  // PUZZLE_LAMBDA_LAMBDA_TERM_H_
