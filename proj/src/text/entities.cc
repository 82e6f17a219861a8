#include "puzzle/text/entities.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace puzzle::text {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool capitalized(const std::string& w) {
  return !w.empty() && std::isupper(static_cast<unsigned char>(w[0])) &&
         std::all_of(w.begin(), w.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-'; });
}

// Index of the first word token, skipping opening quotes.
size_t first_word(const Sentence& s) {
  size_t i = 0;
  while (i < s.tokens.size() && is_punctuation(s.tokens[i].text)) ++i;
  return i;
}

// Positions where a sentence-like unit starts: the first word, and words
// right after a colon or an opening quote.
bool starts_unit(const Sentence& s, size_t i) {
  if (i == first_word(s)) return true;
  if (i == 0) return false;
  const std::string& prev = s.tokens[i - 1].text;
  return prev == ":" || is_quote(prev);
}

const std::vector<std::string> kOrdinals = {"first", "second", "third", "fourth", "fifth",
                                            "sixth", "seventh", "eighth", "ninth"};
const std::map<std::string, int> kNumbers = {{"two", 2},  {"three", 3}, {"four", 4}, {"five", 5},
                                             {"six", 6},  {"seven", 7}, {"eight", 8}, {"nine", 9}};

}  // namespace

bool EntitySet::contains(const std::string& name) const {
  return std::find(persons.begin(), persons.end(), name) != persons.end();
}

Gazetteer parse_gazetteer(std::string_view text) {
  Gazetteer out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream words(line);
    for (std::string w; words >> w;) out.insert(w);
  }
  return out;
}

Gazetteer load_gazetteer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read gazetteer: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_gazetteer(buf.str());
}

bool is_function_word(const std::string& word) {
  static const std::set<std::string> kWords = {
      "a",       "an",     "the",    "i",      "you",     "he",      "she",     "it",     "we",     "they",
      "me",      "him",    "her",    "us",     "them",    "my",      "your",    "his",    "its",    "our",
      "their",   "is",     "are",    "am",     "was",     "were",    "be",      "do",     "does",   "did",
      "can",     "could",  "would",  "will",   "shall",   "should",  "may",     "might",  "must",   "who",
      "what",    "which",  "whom",   "whose",  "where",   "when",    "why",     "how",    "if",     "then",
      "and",     "or",     "but",    "not",    "no",      "yes",     "on",      "in",     "at",     "of",
      "to",      "by",     "for",    "with",   "from",    "that",    "this",    "these",  "those",  "each",
      "every",   "both",   "either", "neither", "all",    "some",    "any",     "one",    "two",    "three",
      "four",    "five",   "six",    "seven",  "eight",   "nine",    "knight",  "knights", "knave", "knaves",
      "island",  "there",  "while",  "so",     "now",     "also",    "always",  "never",  "at",     "note"};
  return kWords.count(lower(word)) > 0;
}

EntitySet recognize_persons(const Document& d, const Gazetteer& gazetteer) {
  EntitySet e;
  for (const auto& s : d.sentences) {
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      const std::string& w = s.tokens[i].text;
      if (!capitalized(w) || is_function_word(w)) continue;
      bool person = gazetteer.count(w) > 0 || !starts_unit(s, i);
      if (person && !e.contains(w)) e.persons.push_back(w);
    }
  }
  return e;
}

Document rewrite_ordinal_references(const Document& d, const std::vector<std::string>& persons) {
  Document out = d;
  int count = static_cast<int>(persons.size());
  // "the first one", "the second inhabitant", "the other one" (with two).
  for (size_t si = 0; si < out.sentences.size(); ++si) {
    auto& ts = out.sentences[si].tokens;
    std::vector<Token> rewritten;
    for (size_t i = 0; i < ts.size(); ++i) {
      if (i + 2 < ts.size() && lower(ts[i].text) == "the") {
        std::string ord = lower(ts[i + 1].text), noun = lower(ts[i + 2].text);
        bool head = noun == "one" || noun == "inhabitant" || noun == "person";
        auto it = std::find(kOrdinals.begin(), kOrdinals.end(), ord);
        int index = it == kOrdinals.end() ? -1 : static_cast<int>(it - kOrdinals.begin());
        if (ord == "other" && count == 2) index = 1;
        if (head && index >= 0 && index < count) {
          rewritten.push_back({persons[index], ts[i].begin, ts[i + 2].end});
          i += 2;
          continue;
        }
      }
      rewritten.push_back(ts[i]);
    }
    ts = std::move(rewritten);
  }
  return out;
}

Document introduce_anonymous_persons(const Document& d, EntitySet& e) {
  if (!e.persons.empty()) return d;
  Document out = d;
  // Find "<number> people|inhabitants|persons" in a sentence without names.
  int count = 0;
  size_t intro = 0;
  for (size_t si = 0; si < out.sentences.size() && !count; ++si) {
    const auto& toks = out.sentences[si].tokens;
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
      auto n = kNumbers.find(lower(toks[i].text));
      std::string noun = lower(toks[i + 1].text);
      if (n != kNumbers.end() && (noun == "people" || noun == "inhabitants" || noun == "persons")) {
        count = n->second;
        intro = si;
        break;
      }
    }
  }
  if (!count) return d;
  for (int k = 0; k < count; ++k) e.persons.push_back(std::string(1, static_cast<char>('A' + k)));

  // Append ": A , B and C" before the terminator of the introducing sentence.
  auto& toks = out.sentences[intro].tokens;
  size_t at = toks.size();
  while (at > 0 && (toks[at - 1].text == "." || toks[at - 1].text == "!" || is_quote(toks[at - 1].text))) --at;
  size_t pos = at < toks.size() ? toks[at].begin : (toks.empty() ? 0 : toks.back().end);
  std::vector<Token> added = {{":", pos, pos}};
  for (int k = 0; k < count; ++k) {
    if (k > 0) added.push_back({k + 1 == count ? "and" : ",", pos, pos});
    added.push_back({e.persons[k], pos, pos});
  }
  toks.insert(toks.begin() + static_cast<std::ptrdiff_t>(at), added.begin(), added.end());

  return rewrite_ordinal_references(out, e.persons);
}

Document resolve_coreference(const Document& d, const EntitySet& e) {
  Document out = d;
  std::string last_person;  // nearest preceding person before the sentence
  for (auto& s : out.sentences) {
    std::string subject;
    std::string last_in_sentence;
    std::vector<Token> rewritten;
    for (const auto& t : s.tokens) {
      std::string w = lower(t.text);
      if (e.contains(t.text)) {
        if (subject.empty()) subject = t.text;
        last_in_sentence = t.text;
        rewritten.push_back(t);
        continue;
      }
      if (w == "he" || w == "she" || w == "him" || w == "her") {
        const std::string& target = !subject.empty() ? subject : last_person;
        if (target.empty()) {
          s.warnings.push_back("unresolved pronoun '" + t.text + "'");
          rewritten.push_back(t);
        } else {
          rewritten.push_back({target, t.begin, t.end});
          if (subject.empty()) subject = target;
          last_in_sentence = target;
        }
        continue;
      }
      if (w == "we" || w == "us") {
        if (e.persons.size() == 2) {
          rewritten.push_back({e.persons[0], t.begin, t.end});
          rewritten.push_back({"and", t.end, t.end});
          rewritten.push_back({e.persons[1], t.end, t.end});
          if (subject.empty()) subject = e.persons[0];
        } else {
          s.warnings.push_back("unresolved pronoun '" + t.text + "'");
          rewritten.push_back(t);
        }
        continue;
      }
      if (w == "they" || w == "them") s.warnings.push_back("unresolved pronoun '" + t.text + "'");
      rewritten.push_back(t);
    }
    s.tokens = std::move(rewritten);
    if (!last_in_sentence.empty()) last_person = last_in_sentence;
  }
  return out;
}

}  // namespace puzzle::text
