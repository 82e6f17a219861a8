#ifndef PUZZLE_APP_SOLVER_H_
#define PUZZLE_APP_SOLVER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/app/theory.h"
#include "puzzle/infer/model.h"
#include "puzzle/infer/prover.h"

namespace puzzle::app {

struct SolveOptions {
  size_t max_models = 1000;
  infer::ProverLimits limits;
};

struct PersonRole {
  std::string name;
  std::vector<std::string> roles;  // queried predicates true in every model
};

struct SolveReport {
  std::vector<std::string> persons;
  std::vector<std::string> predicates;  // knight, knave or tallest, shortest
  size_t model_count = 0;
  bool truncated = false;  // max_models reached
  infer::Consensus consensus;
  std::optional<std::vector<PersonRole>> assignment;  // absent when ambiguous or unsatisfiable
  std::vector<Diagnostic> diagnostics;
  double seconds = 0;
};

// Predicates a solution assigns for the domain.
std::vector<std::string> role_predicates(Domain d);

std::vector<infer::Interpretation> models(const PuzzleTheory& theory, size_t limit = 1000);

SolveReport solve(const PuzzleTheory& theory, const SolveOptions& options = {});

// "Marge: knight, Homer: knight"; "ambiguous" or "no models" otherwise.
std::string format_assignment(const SolveReport& r);

enum class Verdict { kYes, kNo, kUnknown };

const char* to_string(Verdict v);

class QuestionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Answer {
  Verdict verdict = Verdict::kUnknown;
  std::string question;
  fol::Formula goal;
  // Proof of the goal (Yes) or of its negation (No).
  std::optional<infer::Proof> proof;
  // The clauses the proof was checked against.
  fol::ClauseSet axioms;
  std::vector<std::string> diagnostics;
};

// Parses with the grammar's question rules; throws QuestionError when the
// question has no meaning.
fol::Formula question_goal(const PuzzleTheory& theory, std::string_view question);

// Yes with a proof of the goal, No with a proof of its negation, else
// Unknown. A side that is false in some model over the puzzle's persons is
// not sent to the prover.
Answer answer_goal(const PuzzleTheory& theory, const fol::Formula& goal, const infer::ProverLimits& limits = {});
Answer answer_question(const PuzzleTheory& theory, std::string_view question,
                       const infer::ProverLimits& limits = {});

class UnknownPredicate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WhResult {
  std::vector<std::string> persons;  // display names
  bool ambiguous = false;
  std::vector<std::string> diagnostics;
};

// `query` is a who-question ("Who is the shortest?") or a unary predicate
// name. Persons for whom the property holds in every model; empty and
// ambiguous when some person's status differs between models.
WhResult query_wh(const PuzzleTheory& theory, std::string_view query, size_t max_models = 1000);

}  // namespace puzzle::app

#endif  // PUZZLE_APP_SOLVER_H_
