#include "puzzle/text/document.h"

#include <cctype>
#include <set>

namespace puzzle::text {

namespace {

const std::set<std::string> kAbbreviations = {"mr", "mrs", "ms", "dr", "st", "prof", "e.g", "i.e", "etc", "vs"};

bool is_terminator(const std::string& t) { return t == "." || t == "?" || t == "!"; }

bool is_opening_quote(const std::string& t) { return t == "``" || t == "\xE2\x80\x9C"; }

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Length of a quote mark at text[i], or 0.
size_t quote_at(std::string_view text, size_t i) {
  if (text.compare(i, 2, "``") == 0 || text.compare(i, 2, "''") == 0) return 2;
  if (text[i] == '"') return 1;
  if (text.compare(i, 3, "\xE2\x80\x9C") == 0 || text.compare(i, 3, "\xE2\x80\x9D") == 0) return 3;
  return 0;
}

bool is_single_punct(char c) {
  return c == '.' || c == ',' || c == ':' || c == ';' || c == '?' || c == '!' || c == '(' || c == ')';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (size_t q = quote_at(text, i)) {
      out.push_back({std::string(text.substr(i, q)), i, i + q});
      i += q;
      continue;
    }
    if (is_single_punct(text[i])) {
      out.push_back({std::string(1, text[i]), i, i + 1});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && !is_single_punct(text[j]) &&
           !quote_at(text, j))
      ++j;
    // Keep a period inside abbreviations like "e.g." with the word.
    while (j < text.size() && text[j] == '.' && j + 1 < text.size() && std::isalpha(static_cast<unsigned char>(text[j + 1]))) {
      ++j;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    }
    if (j < text.size() && text[j] == '.' && kAbbreviations.count(lower(std::string(text.substr(i, j - i))))) ++j;
    out.push_back({std::string(text.substr(i, j - i)), i, j});
    i = j;
  }
  return out;
}

}  // namespace

bool is_quote(const std::string& t) {
  return t == "\"" || t == "``" || t == "''" || t == "\xE2\x80\x9C" || t == "\xE2\x80\x9D";
}

bool is_punctuation(const std::string& t) {
  return is_quote(t) || (t.size() == 1 && is_single_punct(t[0]));
}

bool Sentence::is_question() const {
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    if (is_quote(it->text)) continue;
    return it->text == "?";
  }
  return false;
}

std::vector<std::string> Sentence::words(bool strip_punctuation) const {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (strip_punctuation && (is_quote(t.text) || is_terminator(t.text))) continue;
    out.push_back(t.text);
  }
  return out;
}

std::string Sentence::str() const {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

Document split_and_tokenize(std::string_view text) {
  Document d;
  d.raw = std::string(text);
  std::vector<Token> tokens = tokenize(text);
  Sentence cur;
  bool open_double = false;  // inside a straight-quote pair
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    cur.tokens.push_back(t);
    if (t.text == "\"") open_double = !open_double;
    if (!is_terminator(t.text)) continue;
    // Closing quotes right after the terminator belong here.
    while (i + 1 < tokens.size() && is_quote(tokens[i + 1].text) && !is_opening_quote(tokens[i + 1].text)) {
      if (tokens[i + 1].text == "\"") {
        if (!open_double) break;
        open_double = false;
      }
      cur.tokens.push_back(tokens[++i]);
    }
    d.sentences.push_back(std::move(cur));
    cur = Sentence{};
  }
  if (!cur.tokens.empty()) d.sentences.push_back(std::move(cur));
  return d;
}

}  // namespace puzzle::text
