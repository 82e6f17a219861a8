#ifndef PUZZLE_FOL_PRINTER_H_
#define PUZZLE_FOL_PRINTER_H_

#include <string>

#include "puzzle/fol/syntax.h"

namespace puzzle::fol {

// Prover9-style surface syntax: `all x`, `exists x`, `-`, `&`, `|`, `->`,
// `<->`, `=`, `!=`. The output re-parses to the same Formula value.
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
std::string print_literal(const Literal& l);
// `-knight(x) | knave(x)`; the empty clause prints as `$F`.
std::string print_clause(const Clause& c);

}  // namespace puzzle::fol

#endif  // PUZZLE_FOL_PRINTER_H_
