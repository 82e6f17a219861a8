// Earley parsing under a feature grammar.

#ifndef PUZZLE_CHART_PARSER_H_
#define PUZZLE_CHART_PARSER_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "puzzle/fol/syntax.h"
#include "puzzle/grammar/grammar.h"
#include "puzzle/lambda/lambda_term.h"

namespace puzzle::chart {

struct ParseTree {
  // Leaves hold a token; inner nodes a category with resolved features.
  bool leaf = false;
  std::string word;
  grammar::Category category;
  int rule = -1;
  std::vector<ParseTree> children;
  // Beta-normal composed meaning, when the rule has a SEM template.
  std::optional<lambda::LambdaTerm> sem;

  size_t node_count() const;
  size_t leaf_count() const;
  // Rule indices in preorder; the tie-breaker between equally small trees.
  std::vector<int> rule_sequence() const;
};

class UnknownWords : public std::runtime_error {
 public:
  explicit UnknownWords(std::vector<std::string> words);
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<std::string> words_;
};

class ChartOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  std::string start;         // empty: the grammar's start symbol
  size_t max_edges = 500000;  // ChartOverflow beyond this
};

// All complete parses, ordered by node count then rule sequence. Tokens are
// matched case-insensitively. Throws UnknownWords if a token is not a
// terminal of the grammar.
std::vector<ParseTree> parse(const std::vector<std::string>& tokens, const grammar::Grammar& g,
                             const ParseOptions& options = {});

// Converts the root meaning to a formula; throws lambda::IncompleteSemantics
// when the tree has no meaning or it does not reduce to one.
fol::Formula sentence_semantics(const ParseTree& t);

// Re-checks the feature constraints of every rule application in the tree.
bool check_tree(const ParseTree& t, const grammar::Grammar& g);

// Bracketed form: (S (NP[NUM=sg] (PropN[NUM=sg] Marge)) ...).
std::string print_tree(const ParseTree& t);

}  // namespace puzzle::chart

#endif  // PUZZLE_CHART_PARSER_H_
