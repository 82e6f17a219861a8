#include "puzzle/text/lexical.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace puzzle::text {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

const std::map<std::string, std::string> kVerbs = {
    {"is", "be"},      {"are", "be"},      {"am", "be"},      {"was", "be"},     {"were", "be"},
    {"been", "be"},    {"being", "be"},    {"has", "have"},   {"had", "have"},   {"does", "do"},
    {"did", "do"},     {"done", "do"},     {"goes", "go"},    {"went", "go"},    {"says", "say"},
    {"said", "say"},   {"lies", "lie"},    {"lied", "lie"},   {"lying", "lie"},  {"tells", "tell"},
    {"told", "tell"},  {"claims", "claim"}, {"knows", "know"}, {"knew", "know"},  {"met", "meet"},
    {"states", "state"}, {"stated", "state"}, {"stating", "state"}, {"declares", "declare"},
    {"declared", "declare"}, {"replies", "reply"}, {"thinks", "think"}, {"thought", "think"},
    {"could", "can"},  {"would", "will"}};

const std::map<std::string, std::string> kNouns = {
    {"people", "person"}, {"men", "man"},       {"women", "woman"}, {"children", "child"},
    {"lies", "lie"},      {"knives", "knife"},  {"wives", "wife"},  {"lives", "life"}};

// One suffix rule, or the word itself.
std::string step(const std::string& w, char pos) {
  if (pos == 'a' || pos == 'r') return w;
  const auto& table = pos == 'v' ? kVerbs : kNouns;
  if (auto it = table.find(w); it != table.end()) return it->second;
  if (w.size() <= 3) return w;
  if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "zes") || ends_with(w, "ches") ||
      ends_with(w, "shes"))
    return w.substr(0, w.size() - 2);
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is"))
    return w.substr(0, w.size() - 1);
  if (pos != 'v') return w;
  if (ends_with(w, "ied") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
  for (std::string_view suffix : {"ed", "ing"}) {
    if (!ends_with(w, suffix)) continue;
    std::string stem = w.substr(0, w.size() - suffix.size());
    if (stem.size() < 3 || std::none_of(stem.begin(), stem.end(), vowel)) return w;
    size_t n = stem.size();
    if (stem[n - 1] == stem[n - 2] && !vowel(stem[n - 1]) && stem[n - 1] != 'l' && stem[n - 1] != 's')
      return stem.substr(0, n - 1);  // stopped -> stop
    if (ends_with(stem, "at") || ends_with(stem, "iz") || ends_with(stem, "v") || ends_with(stem, "c") ||
        ends_with(stem, "ur"))
      return stem + "e";  // stated -> state
    return stem;
  }
  return w;
}

}  // namespace

std::string lemmatize(const std::string& word, char pos) {
  // Iterating to a fixpoint keeps the function idempotent; every rule either
  // shortens the word or maps into a table of base forms.
  std::string w = lower(word);
  for (int i = 0; i < 8; ++i) {
    std::string next = step(w, pos);
    if (next == w) break;
    w = next;
  }
  return w;
}

char guess_pos(const Sentence& s, size_t i, const EntitySet& persons) {
  static const std::set<std::string> kDeterminers = {"a",    "an",  "the",   "each",  "every", "some", "no",
                                                     "this", "these", "those", "both", "two",  "three", "four",
                                                     "five", "six", "seven", "eight", "nine",  "his",  "her"};
  static const std::set<std::string> kAuxiliaries = {"to",  "will", "would", "could", "can",  "does",
                                                     "do",  "did",  "might", "may",   "must", "should"};
  static const std::set<std::string> kSubjects = {"he", "she", "it", "who", "they", "you", "i", "we"};
  const std::string w = lower(s.tokens[i].text);
  if (w.empty() || !std::isalpha(static_cast<unsigned char>(w[0]))) return 0;
  if (ends_with(w, "ly")) return 'r';
  if (i == 0) return 0;
  const std::string& prev_raw = s.tokens[i - 1].text;
  std::string prev = lower(prev_raw);
  if (kDeterminers.count(prev)) return 'n';
  if (kAuxiliaries.count(prev)) return 'v';
  bool after_subject = persons.contains(prev_raw) || kSubjects.count(prev);
  if (after_subject && (ends_with(w, "s") || ends_with(w, "ed"))) return 'v';
  return 0;
}

std::vector<grammar::TaggedWord> tagged_words(const Document& d, const EntitySet& persons) {
  std::vector<grammar::TaggedWord> out;
  for (const auto& s : d.sentences)
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      const std::string& t = s.tokens[i].text;
      if (is_punctuation(t) || persons.contains(t)) continue;
      out.push_back({lower(t), guess_pos(s, i, persons)});
    }
  return out;
}

std::vector<std::pair<std::string, std::string>> detect_synonym_pairs(const Document& d, const grammar::Grammar& g,
                                                                      const grammar::SynonymDb& db) {
  using Entry = std::pair<std::string, char>;
  auto entries_of = [&](const std::string& word, std::set<Entry>& into) {
    if (!g.in_lexicon(word)) return;
    for (size_t r : g.lexical_rules(word)) {
      char pos = g.pos_of(g.rule(r).lhs.symbol);
      if (pos) into.insert({lemmatize(word, pos), pos});
    }
  };
  std::set<Entry> in_document, in_lexicon;
  for (const auto& s : d.sentences)
    for (const auto& t : s.tokens) entries_of(lower(t.text), in_document);
  for (const auto& [word, rules] : g.lexicon()) entries_of(word, in_lexicon);

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& [lemma, pos] : in_document)
    for (const auto& other : db.synonyms(lemma, pos)) {
      if (other == lemma) continue;
      if (!in_document.count({other, pos}) && !in_lexicon.count({other, pos})) continue;
      pairs.insert(std::minmax(lemma, other));
    }
  return {pairs.begin(), pairs.end()};
}

}  // namespace puzzle::text
