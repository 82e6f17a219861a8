#ifndef PUZZLE_TEXT_LEXICAL_H_
#define PUZZLE_TEXT_LEXICAL_H_

#include <string>
#include <utility>
#include <vector>

#include "puzzle/grammar/grammar.h"
#include "puzzle/grammar/lexicon.h"
#include "puzzle/grammar/synonyms.h"
#include "puzzle/text/document.h"
#include "puzzle/text/entities.h"

namespace puzzle::text {

// Rule-based lemma for pos n, v, a or r (0 behaves like n). Lowercases.
std::string lemmatize(const std::string& word, char pos);

// Part of speech of tokens[i] from its neighbours, or 0 when unsure.
char guess_pos(const Sentence& s, size_t i, const EntitySet& persons);

// All word tokens of the document, tagged with guess_pos.
std::vector<grammar::TaggedWord> tagged_words(const Document& d, const EntitySet& persons);

// Unordered lemma pairs (first < second) linked in the db, with the same
// part of speech, where one lemma is a document word and the other is a
// document word or a lexicon word. Only words with a lexical category in the
// grammar count; the category gives the part of speech.
std::vector<std::pair<std::string, std::string>> detect_synonym_pairs(const Document& d, const grammar::Grammar& g,
                                                                      const grammar::SynonymDb& db);

}  // namespace puzzle::text

#endif  // PUZZLE_TEXT_LEXICAL_H_
