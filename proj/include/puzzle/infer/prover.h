#ifndef PUZZLE_INFER_PROVER_H_
#define PUZZLE_INFER_PROVER_H_

#include <optional>
#include <string>
#include <vector>

#include "puzzle/fol/syntax.h"

namespace puzzle::infer {

// Rule names used in Clause::provenance.rule.
inline constexpr const char* kAssumption = "assumption";
inline constexpr const char* kGoal = "goal";
inline constexpr const char* kEqualityAxiom = "equality";
inline constexpr const char* kResolve = "resolve";
inline constexpr const char* kFactor = "factor";
inline constexpr const char* kHyper = "hyper";

// Steps in id order, each parent before its children, the last one empty.
struct Proof {
  std::vector<fol::Clause> steps;
  fol::Formula goal;

  const fol::Clause* step(int id) const;
};

struct ProverLimits {
  size_t max_clauses = 200000;  // inferred clauses
  double max_seconds = 20.0;
};

enum class ProveStatus { kProved, kSaturated, kResourceOut };

const char* to_string(ProveStatus s);

struct ProveResult {
  ProveStatus status = ProveStatus::kSaturated;
  std::optional<Proof> proof;
  size_t generated = 0;  // inferred clauses, including discarded ones
  size_t given = 0;
  double seconds = 0;
};

// Refutation of axioms + clausify(-goal) by the given-clause loop:
// ordered binary resolution and factoring, forward and backward subsumption,
// clauses selected by fewest literals, then fewest symbols, then lowest id.
// Equality axioms are added when a positive equality literal occurs. Chains
// of resolutions that discharge a nucleus against satellites are reported as
// one hyper step.
ProveResult prove(const fol::ClauseSet& axioms, const fol::Formula& goal, const ProverLimits& limits = {});

// Clauses a proof may start from: the axioms, the clauses of the negated goal
// and, when needed, equality axioms. Ids are left at 0.
fol::ClauseSet refutation_input(const fol::ClauseSet& axioms, const fol::Formula& goal);

// Re-derives every step; assumptions must be variants of refutation_input.
bool check_proof(const Proof& p, const fol::ClauseSet& axioms, std::string* why = nullptr);

// Building blocks, exposed for checking and tests.
fol::ClauseSet equality_axioms(const fol::ClauseSet& clauses);
bool subsumes(const fol::Clause& general, const fol::Clause& specific);
bool variant(const fol::Clause& a, const fol::Clause& b);
std::vector<fol::Clause> resolvents(const fol::Clause& a, const fol::Clause& b);
std::vector<fol::Clause> factors(const fol::Clause& c);

}  // namespace puzzle::infer

#endif  // PUZZLE_INFER_PROVER_H_
