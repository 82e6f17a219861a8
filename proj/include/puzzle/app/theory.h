// From puzzle text to a first-order theory: entity recognition, coreference,
// lexicon extension, parsing, utterance encoding and background knowledge.

#ifndef PUZZLE_APP_THEORY_H_
#define PUZZLE_APP_THEORY_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puzzle/fol/syntax.h"
#include "puzzle/grammar/grammar.h"
#include "puzzle/grammar/synonyms.h"
#include "puzzle/text/document.h"
#include "puzzle/text/entities.h"

namespace puzzle::app {

enum class Domain { kKnightsKnaves, kComparatives };

const char* to_string(Domain d);
std::optional<Domain> parse_domain(std::string_view name);

struct ResourcePaths {
  std::string grammar;
  std::string synonyms;
  std::string gazetteer;
};

// grammars/<domain>.fcfg, lexicon/synonyms.txt and lexicon/gazetteer.txt
// under `data_dir`.
ResourcePaths default_paths(const std::string& data_dir, Domain d);

struct Resources {
  Domain domain = Domain::kKnightsKnaves;
  grammar::Grammar grammar;
  grammar::SynonymDb synonyms;
  text::Gazetteer gazetteer;
};

Resources load_resources(Domain d, const ResourcePaths& paths);

enum class AxiomKind { kBackground, kText, kSynonymy, kDistinctness };

const char* to_string(AxiomKind k);

struct Axiom {
  AxiomKind kind = AxiomKind::kBackground;
  fol::Formula formula;
  int sentence = -1;  // text axioms: index into the theory's document
};

// The three places a puzzle can go wrong: who the persons are, what the
// sentences mean, and what follows from them.
enum class Stage { kEntities, kParsing, kReasoning };

const char* to_string(Stage s);

struct Diagnostic {
  Stage stage = Stage::kParsing;
  int sentence = -1;
  std::string message;
};

// "Marge says that ..." encoded as say(marge) <-> ...; a speaker's second
// statement with the same verb gets a fresh predicate (say_2).
struct Utterance {
  std::string predicate;
  std::string speaker;  // constant
  int sentence = -1;
};

class NoPersons : public std::runtime_error {
 public:
  NoPersons() : std::runtime_error("no persons recognized: cannot fix the domain size") {}
};

struct PuzzleTheory {
  Domain domain = Domain::kKnightsKnaves;
  std::string source;
  text::Document document;  // after anonymous persons and coreference
  text::EntitySet persons;  // names in first-mention order
  bool anonymous = false;   // persons were introduced as A, B, ...
  int domain_size = 0;
  std::vector<Axiom> axioms;
  std::vector<Utterance> utterances;
  std::vector<std::pair<std::string, std::string>> synonym_pairs;
  grammar::Grammar grammar;  // extended with the puzzle's names and words
  grammar::SynonymDb synonyms;
  std::vector<Diagnostic> diagnostics;

  std::vector<std::string> constants() const;
  // Person constants pre-assigned to 0, 1, ... in first-mention order.
  std::map<std::string, int> constant_map() const;
  // Every axiom through one clausifier; synonymy axioms keep their origin.
  fol::ClauseSet clauses() const;
  std::string display_name(const std::string& constant) const;
};

std::vector<fol::Formula> distinctness_axioms(const std::vector<std::string>& constants);

// Island rules, exclusivity, truth and lies, same/different, inhabitant
// facts, one truthfulness bridge per utterance and pairwise distinctness.
std::vector<fol::Formula> knights_knaves_background(const std::vector<std::string>& constants,
                                                    const std::vector<Utterance>& utterances = {});

// taller is a strict order; tallest/shortest are its extremes.
std::vector<fol::Formula> comparatives_background(const std::vector<std::string>& constants);

// Throws NoPersons. Sentences that fail to parse are reported in
// diagnostics and left out of the theory.
PuzzleTheory build_theory(std::string_view text, const Resources& resources);

// A one-sentence document for a question, with ordinal references resolved
// when the puzzle's persons are anonymous.
text::Document prepare_question(const PuzzleTheory& theory, std::string_view question);

// Closed meanings of `words` under `start`, in parse order, duplicates
// removed. Throws chart::UnknownWords.
std::vector<fol::Formula> meanings(const std::vector<std::string>& words, const grammar::Grammar& g,
                                   const std::string& start);

}  // namespace puzzle::app

#endif  // PUZZLE_APP_THEORY_H_
