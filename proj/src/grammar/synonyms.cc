#include "puzzle/grammar/synonyms.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace puzzle::grammar {

namespace {
const std::set<std::string> kNone;
}

void SynonymDb::add(const std::string& a, const std::string& b, char pos) {
  if (a == b) return;
  entries_[{a, pos}].insert(b);
  entries_[{b, pos}].insert(a);
}

const std::set<std::string>& SynonymDb::synonyms(const std::string& lemma, char pos) const {
  auto it = entries_.find({lemma, pos});
  return it == entries_.end() ? kNone : it->second;
}

bool SynonymDb::linked(const std::string& a, const std::string& b, char pos) const {
  return synonyms(a, pos).count(b) > 0;
}

SynonymDb parse_synonyms(std::string_view text) {
  SynonymDb db;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (size_t c = line.find_first_of("#%"); c != std::string::npos) line.resize(c);
    std::istringstream fields(line);
    std::string lemma, pos, list;
    if (!(fields >> lemma)) continue;
    if (!(fields >> pos >> list) || pos.size() != 1 || std::string("nvar").find(pos[0]) == std::string::npos)
      throw std::runtime_error("synonyms line " + std::to_string(line_no) + ": expected 'lemma n|v|a|r syn1,syn2'");
    std::istringstream items(list);
    for (std::string s; std::getline(items, s, ',');)
      if (!s.empty()) db.add(lemma, s, pos[0]);
  }
  return db;
}

SynonymDb load_synonyms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read synonym file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_synonyms(buf.str());
}

}  // namespace puzzle::grammar
