#ifndef PUZZLE_FOL_PARSER_H_
#define PUZZLE_FOL_PARSER_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/fol/syntax.h"

namespace puzzle::fol {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Raised when a symbol is used with two different arities.
class ArityError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// Arities seen so far. Shared across the formulas of one theory so that
// `knight(a)` followed by `knight(a,b)` is rejected.
class SymbolTable {
 public:
  // Returns false on a mismatch with a previous use.
  bool note_predicate(const std::string& name, size_t arity);
  bool note_function(const std::string& name, size_t arity);

  const std::map<std::string, size_t>& predicate_arities() const { return predicates_; }
  const std::map<std::string, size_t>& function_arities() const { return functions_; }

 private:
  std::map<std::string, size_t> predicates_;
  std::map<std::string, size_t> functions_;
};

// Free identifiers named like `x`, `y1`, `u` (one letter u-z, optional digits)
// are variables; any other free identifier is a constant. Identifiers bound by
// `all`/`exists` are variables regardless of their name.
bool is_free_variable_name(std::string_view name);

// Parses one formula terminated by `.`.
Formula parse_formula(std::string_view text, SymbolTable* symbols = nullptr);

// Parses a `.`-terminated sequence of formulas.
std::vector<Formula> parse_formulas(std::string_view text, SymbolTable* symbols = nullptr);

struct Theory {
  std::vector<Formula> assumptions;
  std::vector<Formula> goals;
};

// Theory file: `%` comments, optional `formulas(assumptions). ... end_of_list.`
// and `formulas(goals). ... end_of_list.` sections. Formulas outside any
// section are assumptions.
Theory parse_theory(std::string_view text);

}  // namespace puzzle::fol

#endif  // PUZZLE_FOL_PARSER_H_
