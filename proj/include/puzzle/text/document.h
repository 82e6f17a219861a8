#ifndef PUZZLE_TEXT_DOCUMENT_H_
#define PUZZLE_TEXT_DOCUMENT_H_

#include <string>
#include <string_view>
#include <vector>

namespace puzzle::text {

struct Token {
  std::string text;
  // Character span in the raw text. Tokens inserted by rewriting have an
  // empty span at their insertion point.
  size_t begin = 0;
  size_t end = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<std::string> warnings;

  bool is_question() const;
  // Token texts, optionally without sentence-final punctuation and quotes.
  std::vector<std::string> words(bool strip_punctuation = false) const;
  std::string str() const;
};

struct Document {
  std::string raw;
  std::vector<Sentence> sentences;
};

bool is_punctuation(const std::string& token);
bool is_quote(const std::string& token);

// Sentences end at `.`, `?` or `!` (not after a known abbreviation); closing
// quotes right after the terminator stay with the sentence. Punctuation and
// quote marks (`"`, ``, '', and curly quotes) are separate tokens.
Document split_and_tokenize(std::string_view text);

}  // namespace puzzle::text

#endif  // PUZZLE_TEXT_DOCUMENT_H_
