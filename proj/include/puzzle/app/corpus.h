// Running a directory of puzzles against their expected outcomes.
//
// Each `name.txt` may have a `name.json` sidecar:
//   {"domain": "knights-knaves", "persons": [...],
//    "assignment": {"Marge": "knight", ...},
//    "questions": [{"question": "Is Marge a knight?", "answer": "Yes"}],
//    "wh": [{"question": "Who is the shortest?", "answer": ["Maria"]}]}
// Without one, a puzzle passes when it has a unique assignment.

#ifndef PUZZLE_APP_CORPUS_H_
#define PUZZLE_APP_CORPUS_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puzzle/app/solver.h"
#include "puzzle/app/theory.h"

namespace puzzle::app {

struct Expected {
  std::optional<Domain> domain;
  std::optional<std::vector<std::string>> persons;
  std::optional<std::map<std::string, std::string>> assignment;  // name -> role ("none" for no role)
  std::vector<std::pair<std::string, std::string>> questions;    // question -> Yes/No/Unknown
  std::vector<std::pair<std::string, std::vector<std::string>>> wh;
};

// Throws std::runtime_error on malformed JSON.
Expected parse_expected(const std::string& json_text);

// The sidecar of `puzzle_path`, if present.
std::optional<Expected> load_expected(const std::string& puzzle_path);

struct PuzzleOutcome {
  std::string name;
  int persons = 0;
  size_t models = 0;
  std::string assignment;  // format_assignment
  bool entities_ok = true;
  bool parsing_ok = true;
  bool reasoning_ok = true;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const { return entities_ok && parsing_ok && reasoning_ok; }
};

struct CorpusReport {
  std::vector<PuzzleOutcome> puzzles;

  size_t passed() const;
  size_t failed(Stage s) const;
};

using ResourceLoader = std::function<const Resources&(Domain)>;

PuzzleOutcome check_puzzle(const std::string& name, const std::string& text, const Expected& expected,
                           const ResourceLoader& load, const SolveOptions& options = {});

// Every *.txt in `dir`, in name order. `fallback` is the domain for puzzles
// whose sidecar does not name one.
CorpusReport check_corpus(const std::string& dir, const ResourceLoader& load, Domain fallback,
                          const SolveOptions& options = {});

}  // namespace puzzle::app

#endif  // PUZZLE_APP_CORPUS_H_
