#ifndef PUZZLE_FOL_CLAUSIFY_H_
#define PUZZLE_FOL_CLAUSIFY_H_

#include <string>

#include "puzzle/fol/syntax.h"

namespace puzzle::fol {

// Conversion to clause normal form. One Clausifier instance numbers its
// Skolem symbols sk1, sk2, ... across every formula it converts, so a whole
// theory should go through a single instance.
class Clausifier {
 public:
  explicit Clausifier(int first_skolem = 1) : next_skolem_(first_skolem) {}

  // NNF -> rectify -> Skolemize in place -> drop universals -> distribute ->
  // split. A Skolem term takes only the enclosing universals that occur in
  // its scope. Tautologies and duplicate clauses are dropped. Free variables
  // are treated as universally quantified. Clause ids are left at 0.
  ClauseSet clausify(const Formula& f, Provenance provenance = {});

  int next_skolem() const { return next_skolem_; }

 private:
  int next_skolem_;
};

ClauseSet clausify(const Formula& f, Provenance provenance = {});

// First Skolem index not used by any `skN` symbol in the clauses.
int next_free_skolem_index(const ClauseSet& clauses);

// Pipeline stages, exposed for testing.
Formula to_nnf(const Formula& f);
Formula rectify(const Formula& f);

// Renames clause variables to x, y, z, u, v, w, v6, v7, ... in order of first
// occurrence.
Clause normalize_variables(const Clause& c);

}  // namespace puzzle::fol

#endif  // PUZZLE_FOL_CLAUSIFY_H_
