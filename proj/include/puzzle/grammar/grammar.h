// Feature-based context-free grammars in an fcfg-like text format:
//
//   % start S                 start symbol (default: lhs of the first rule)
//   % pos SV v                part of speech of a lexical category
//   % open PropN              category filled at run time (may have no rules)
//   S[SEM=<?vp(?np)>] -> NP[NUM=?n, SEM=?np] VP[NUM=?n, SEM=?vp]
//   PropN[NUM=sg, SEM=<\P.P(marge)>] -> 'Marge'
//   Sep -> 'while' | ',' 'while'
//
// `%` starts a comment. Terminals are quoted and matched case-insensitively.
// The full syntax is described in docs/grammar-format.md.

#ifndef PUZZLE_GRAMMAR_GRAMMAR_H_
#define PUZZLE_GRAMMAR_GRAMMAR_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/grammar/feature.h"

namespace puzzle::grammar {

struct Category {
  std::string symbol;
  FeatureStructure features;

  const FeatureValue* feature(const std::string& name) const;

  friend bool operator==(const Category& a, const Category& b) {
    return a.symbol == b.symbol && a.features == b.features;
  }
};

// A right-hand-side item: a category or a terminal word.
struct Symbol {
  bool terminal = false;
  std::string word;  // lowercased, terminals only
  Category category;

  static Symbol term(std::string w);
  static Symbol cat(Category c) { return Symbol{false, "", std::move(c)}; }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.terminal == b.terminal && a.word == b.word && a.category == b.category;
  }
};

struct ProductionRule {
  Category lhs;
  std::vector<Symbol> rhs;

  bool is_lexical() const;

  friend bool operator==(const ProductionRule& a, const ProductionRule& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

class GrammarError : public std::runtime_error {
 public:
  GrammarError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

class Grammar {
 public:
  const std::string& start() const { return start_; }
  void set_start(std::string s) { start_ = std::move(s); }

  const std::vector<ProductionRule>& rules() const { return rules_; }
  const ProductionRule& rule(size_t i) const { return rules_.at(i); }

  // Appends unless an identical rule exists. Returns the rule's index.
  size_t add_rule(ProductionRule r);

  const std::vector<size_t>& rules_for(const std::string& symbol) const;
  bool is_nonterminal(const std::string& symbol) const { return by_lhs_.count(symbol) > 0; }

  // Single-terminal rules, keyed by lowercased word.
  const std::vector<size_t>& lexical_rules(const std::string& word) const;
  bool in_lexicon(const std::string& word) const;
  const std::map<std::string, std::vector<size_t>>& lexicon() const { return lexicon_; }

  // Every terminal occurring in any rule.
  bool is_terminal(const std::string& word) const;

  // Part of speech (n, v, a, r) of a lexical category, or 0.
  char pos_of(const std::string& category) const;
  const std::map<std::string, char>& pos_table() const { return pos_table_; }
  void set_pos(const std::string& category, char pos) { pos_table_[category] = pos; }

  const std::set<std::string>& open_categories() const { return open_; }
  void add_open_category(const std::string& c) { open_.insert(c); }

 private:
  std::string start_;
  std::vector<ProductionRule> rules_;
  std::map<std::string, std::vector<size_t>> by_lhs_;
  std::map<std::string, std::vector<size_t>> lexicon_;
  std::map<std::string, int> terminals_;
  std::map<std::string, char> pos_table_ = {{"N", 'n'},  {"PropN", 'n'}, {"V", 'v'},  {"IV", 'v'},
                                            {"TV", 'v'}, {"SV", 'v'},    {"Adj", 'a'}, {"Adv", 'r'}};
  std::set<std::string> open_;
};

Grammar parse_grammar_file(std::string_view text);
Grammar load_grammar(const std::string& path);

std::string print_category(const Category& c);
std::string print_rule(const ProductionRule& r);
// Output is accepted by parse_grammar_file.
std::string print_grammar(const Grammar& g);

}  // namespace puzzle::grammar

#endif  // PUZZLE_GRAMMAR_GRAMMAR_H_
