#ifndef PUZZLE_INFER_MODEL_H_
#define PUZZLE_INFER_MODEL_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/fol/syntax.h"

namespace puzzle::infer {

class UnsupportedTheory : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Tuple = std::vector<int>;

struct Interpretation {
  int domain_size = 0;
  std::map<std::string, int> constants;
  std::map<std::string, size_t> arities;
  std::map<std::string, std::set<Tuple>> extensions;  // true tuples

  bool holds(const std::string& predicate, const Tuple& args) const;
  // Closed formula; constants must be mapped. Equality is identity.
  bool eval(const fol::Formula& f) const;
  bool eval(const fol::Clause& c) const;  // variables universally quantified

  friend bool operator==(const Interpretation& a, const Interpretation& b);
};

std::ostream& operator<<(std::ostream& os, const Interpretation& m);

// Constants in first-occurrence order mapped to 0, 1, ... while elements
// remain; constants beyond the domain size are left out.
std::map<std::string, int> default_constant_map(const fol::ClauseSet& clauses, int n);

struct GroundAtom {
  std::string predicate;
  Tuple args;

  friend bool operator<(const GroundAtom& a, const GroundAtom& b) {
    return a.predicate != b.predicate ? a.predicate < b.predicate : a.args < b.args;
  }
  friend bool operator==(const GroundAtom& a, const GroundAtom& b) {
    return a.predicate == b.predicate && a.args == b.args;
  }
};

// Propositional clauses over atoms numbered from 1; a literal is +i or -i.
struct GroundTheory {
  int domain_size = 0;
  std::map<std::string, int> constants;
  std::map<std::string, size_t> arities;
  std::vector<GroundAtom> atoms;  // every tuple of every predicate, sorted
  std::vector<std::vector<int>> clauses;
  bool contradiction = false;  // some clause grounded to the empty clause

  int atom_index(const GroundAtom& a) const;  // 1-based, 0 when absent
};

// Every constant must be in `constant_map`; function symbols of nonzero
// arity throw UnsupportedTheory. Satisfied ground clauses are dropped and
// equality literals are decided by identity.
GroundTheory ground(const fol::ClauseSet& clauses, int n, const std::map<std::string, int>& constant_map);

// All models over domain {0..n-1}, up to `limit`, in a fixed order. Constants
// missing from `constant_map` (Skolem constants, extra names) range over the
// whole domain. An empty map means default_constant_map.
std::vector<Interpretation> find_models(const fol::ClauseSet& clauses, int n, size_t limit = 1000,
                                        std::map<std::string, int> constant_map = {});

// Per constant and predicate: the truth value shared by all models, or
// nullopt when they disagree. Predicates are unary.
struct Consensus {
  std::map<std::string, std::map<std::string, std::optional<bool>>> cells;  // constant -> predicate -> value

  bool ambiguous() const;
};

Consensus consensus_assignment(const std::vector<Interpretation>& models, const std::vector<std::string>& constants,
                               const std::vector<std::string>& predicates);

}  // namespace puzzle::infer

#endif  // PUZZLE_INFER_MODEL_H_
