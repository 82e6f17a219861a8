#ifndef PUZZLE_GRAMMAR_LEXICON_H_
#define PUZZLE_GRAMMAR_LEXICON_H_

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "puzzle/grammar/grammar.h"
#include "puzzle/grammar/synonyms.h"

namespace puzzle::grammar {

// A puzzle word with the part of speech guessed from its context (0 when
// unknown, in which case every part of speech is tried).
struct TaggedWord {
  std::string word;
  char pos = 0;
};

using Lemmatizer = std::function<std::string(const std::string& word, char pos)>;

struct LexiconExtension {
  Grammar grammar;
  // (new lemma, known lemma), one per copied word, in token order.
  std::vector<std::pair<std::string, std::string>> pairs;
};

// For each word that is neither in the lexicon nor a terminal of any rule,
// looks for a lexicon word of the same part of speech and inflection whose
// lemma the synonym db links to the word's lemma, and copies that word's
// lexical rules with the head predicate renamed to the new lemma.
LexiconExtension extend_lexicon(const Grammar& g, const SynonymDb& synonyms, const std::vector<TaggedWord>& words,
                                const Lemmatizer& lemmatize);

// Adds PropN entries `\P.P(name)` for person names not yet in the lexicon.
Grammar add_proper_nouns(const Grammar& g, const std::vector<std::string>& names,
                         const std::string& category = "PropN");

// The constant used for a person name: lowercase, non-identifier characters
// replaced by `_`.
std::string person_constant(const std::string& name);

}  // namespace puzzle::grammar

#endif  // PUZZLE_GRAMMAR_LEXICON_H_
