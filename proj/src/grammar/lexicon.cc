#include "puzzle/grammar/lexicon.h"

#include <cctype>

namespace puzzle::grammar {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_word(const std::string& w) {
  for (char c : w)
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '-' && c != '\'') return false;
  return !w.empty();
}

// Coarse inflection class of `word` relative to its lemma.
std::string inflection(const std::string& word, const std::string& lemma) {
  if (word == lemma) return "base";
  auto ends = [&](const char* suffix) {
    std::string s(suffix);
    return word.size() > s.size() && word.compare(word.size() - s.size(), s.size(), s) == 0;
  };
  if (ends("ing")) return "ing";
  if (ends("ed")) return "ed";
  if (ends("s")) return "s";
  return "other";
}

lambda::LambdaTerm rename_head(const lambda::LambdaTerm& sem, const std::string& from, const std::string& to) {
  std::vector<std::string> preds = lambda::predicate_names(sem);
  if (preds.empty()) return sem;
  bool has_from = false;
  for (const auto& p : preds) has_from = has_from || p == from;
  return lambda::rename_predicate(sem, has_from ? from : preds.front(), to);
}

}  // namespace

LexiconExtension extend_lexicon(const Grammar& g, const SynonymDb& synonyms, const std::vector<TaggedWord>& words,
                                const Lemmatizer& lemmatize) {
  LexiconExtension out{g, {}};
  static const char kAllPos[] = {'v', 'n', 'a', 'r'};
  for (const auto& tw : words) {
    std::string w = lower(tw.word);
    if (!is_word(w) || out.grammar.in_lexicon(w) || g.is_terminal(w)) continue;
    std::vector<char> poses = tw.pos ? std::vector<char>{tw.pos} : std::vector<char>(kAllPos, kAllPos + 4);
    bool done = false;
    for (char pos : poses) {
      std::string lemma = lemmatize(w, pos);
      const auto& syns = synonyms.synonyms(lemma, pos);
      if (syns.empty()) continue;
      std::string infl = inflection(w, lemma);
      for (const auto& [known, indices] : g.lexicon()) {
        std::vector<size_t> matching;
        for (size_t i : indices)
          if (g.pos_of(g.rule(i).lhs.symbol) == pos) matching.push_back(i);
        if (matching.empty()) continue;
        std::string known_lemma = lemmatize(known, pos);
        if (!syns.count(known_lemma) || inflection(known, known_lemma) != infl) continue;
        for (size_t i : matching) {
          ProductionRule r = g.rule(i);
          r.rhs = {Symbol::term(w)};
          auto it = r.lhs.features.find(kSem);
          if (it != r.lhs.features.end() && it->second.kind == FeatureValue::Kind::kSem)
            it->second.sem = rename_head(it->second.sem, known_lemma, lemma);
          out.grammar.add_rule(std::move(r));
        }
        out.pairs.emplace_back(lemma, known_lemma);
        done = true;
        break;
      }
      if (done) break;
    }
  }
  return out;
}

std::string person_constant(const std::string& name) {
  std::string out;
  for (char c : name) out += std::isalnum(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c)) : '_';
  return out;
}

Grammar add_proper_nouns(const Grammar& g, const std::vector<std::string>& names, const std::string& category) {
  Grammar out = g;
  for (const auto& name : names) {
    bool present = false;
    for (size_t i : out.lexical_rules(name)) present = present || out.rule(i).lhs.symbol == category;
    if (present) continue;
    Category lhs{category, {}};
    lhs.features["NUM"] = FeatureValue::atom("sg");
    lhs.features[kSem] = FeatureValue::semantics(lambda::LambdaTerm::lam(
        "P", lambda::LambdaTerm::app(lambda::LambdaTerm::var("P"), lambda::LambdaTerm::constant(person_constant(name)))));
    out.add_rule(ProductionRule{std::move(lhs), {Symbol::term(name)}});
  }
  return out;
}

}  // namespace puzzle::grammar
