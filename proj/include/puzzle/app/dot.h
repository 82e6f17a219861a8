#ifndef PUZZLE_APP_DOT_H_
#define PUZZLE_APP_DOT_H_

#include <stdexcept>
#include <string>

#include "puzzle/fol/syntax.h"
#include "puzzle/infer/prover.h"

namespace puzzle::app {

class InvalidProof : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A digraph with one node per step, labelled `{id} literals [rule]`, and an
// edge from each parent to its child. The empty clause is drawn filled.
// Throws InvalidProof unless the proof checks against `axioms`.
std::string export_proof_dot(const infer::Proof& p, const fol::ClauseSet& axioms);

// One line per step: `{id} literals [rule parents]`.
std::string format_proof(const infer::Proof& p);

}  // namespace puzzle::app

#endif  // PUZZLE_APP_DOT_H_
