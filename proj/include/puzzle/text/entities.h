#ifndef PUZZLE_TEXT_ENTITIES_H_
#define PUZZLE_TEXT_ENTITIES_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/text/document.h"

namespace puzzle::text {

struct EntitySet {
  std::vector<std::string> persons;  // first-mention order

  bool contains(const std::string& name) const;
};

using Gazetteer = std::set<std::string>;

Gazetteer parse_gazetteer(std::string_view text);
Gazetteer load_gazetteer(const std::string& path);

// Capitalized words that start with a letter and are neither the first word
// of a sentence nor a function word, plus capitalized gazetteer names
// anywhere.
EntitySet recognize_persons(const Document& d, const Gazetteer& gazetteer);

bool is_function_word(const std::string& word);

// Puzzles that introduce unnamed people ("You are approached by two people.")
// get the names A, B, ... appended to the introducing sentence, and
// references like "the first one" or "the second inhabitant" are rewritten
// to those names. Adds the names to `e`. No-op when persons are already
// known or no such sentence exists.
Document introduce_anonymous_persons(const Document& d, EntitySet& e);

// Rewrites "the first one", "the second inhabitant", ... (and "the other one"
// when there are two) to the matching name of `persons`.
Document rewrite_ordinal_references(const Document& d, const std::vector<std::string>& persons);

// Replaces he/she/him/her by a person name: the first person mentioned
// earlier in the same sentence, else the last person mentioned before the
// sentence. "we"/"us" become the coordination of all persons when there are
// exactly two. Unresolvable pronouns stay and add a warning to the sentence.
Document resolve_coreference(const Document& d, const EntitySet& e);

}  // namespace puzzle::text

#endif  // PUZZLE_TEXT_ENTITIES_H_
