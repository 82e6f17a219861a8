#ifndef PUZZLE_GRAMMAR_SYNONYMS_H_
#define PUZZLE_GRAMMAR_SYNONYMS_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace puzzle::grammar {

// Lemma + part of speech -> synonym lemmas. Text format, one entry per line:
//   say   v   claim,tell,state
// with pos one of n, v, a, r. `#` and `%` start comments. The relation is
// closed under symmetry when loaded.
class SynonymDb {
 public:
  void add(const std::string& a, const std::string& b, char pos);

  const std::set<std::string>& synonyms(const std::string& lemma, char pos) const;
  bool linked(const std::string& a, const std::string& b, char pos) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, char>, std::set<std::string>> entries_;
};

SynonymDb parse_synonyms(std::string_view text);
SynonymDb load_synonyms(const std::string& path);

}  // namespace puzzle::grammar

#endif  // PUZZLE_GRAMMAR_SYNONYMS_H_
