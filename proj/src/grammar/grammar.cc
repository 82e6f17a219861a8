#include "puzzle/grammar/grammar.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace puzzle::grammar {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

const std::vector<size_t> kNoRules;

}  // namespace

const FeatureValue* Category::feature(const std::string& name) const {
  auto it = features.find(name);
  return it == features.end() ? nullptr : &it->second;
}

Symbol Symbol::term(std::string w) { return Symbol{true, lower(std::move(w)), {}}; }

bool ProductionRule::is_lexical() const {
  return !rhs.empty() && std::all_of(rhs.begin(), rhs.end(), [](const Symbol& s) { return s.terminal; });
}

GrammarError::GrammarError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

size_t Grammar::add_rule(ProductionRule r) {
  for (size_t i : rules_for(r.lhs.symbol))
    if (rules_[i] == r) return i;
  size_t index = rules_.size();
  by_lhs_[r.lhs.symbol].push_back(index);
  if (r.rhs.size() == 1 && r.rhs[0].terminal) lexicon_[r.rhs[0].word].push_back(index);
  for (const auto& s : r.rhs)
    if (s.terminal) ++terminals_[s.word];
  rules_.push_back(std::move(r));
  return index;
}

const std::vector<size_t>& Grammar::rules_for(const std::string& symbol) const {
  auto it = by_lhs_.find(symbol);
  return it == by_lhs_.end() ? kNoRules : it->second;
}

const std::vector<size_t>& Grammar::lexical_rules(const std::string& word) const {
  auto it = lexicon_.find(lower(word));
  return it == lexicon_.end() ? kNoRules : it->second;
}

bool Grammar::in_lexicon(const std::string& word) const { return lexicon_.count(lower(word)) > 0; }

bool Grammar::is_terminal(const std::string& word) const { return terminals_.count(lower(word)) > 0; }

char Grammar::pos_of(const std::string& category) const {
  auto it = pos_table_.find(category);
  return it == pos_table_.end() ? 0 : it->second;
}

// ---------------------------------------------------------------- reading

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, int line) : s_(text), line_(line) {}

  void parse_rule(Grammar& g, bool& first_rule) {
    Category lhs = category();
    skip_space();
    if (s_.substr(pos_, 2) != "->") fail("expected '->'");
    pos_ += 2;
    std::vector<std::vector<Symbol>> alternatives(1);
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == '|') {
        ++pos_;
        alternatives.emplace_back();
      } else if (c == '\'' || c == '"') {
        alternatives.back().push_back(Symbol::term(quoted()));
      } else {
        alternatives.back().push_back(Symbol::cat(category()));
      }
    }
    for (auto& rhs : alternatives) {
      if (rhs.empty()) fail("empty right-hand side");
      if (first_rule && g.start().empty()) g.set_start(lhs.symbol);
      first_rule = false;
      g.add_rule(ProductionRule{lhs, std::move(rhs)});
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw GrammarError(message + " at column " + std::to_string(pos_ + 1), line_);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier(const char* what) {
    skip_space();
    size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string quoted() {
    char q = s_[pos_++];
    size_t end = s_.find(q, pos_);
    if (end == std::string_view::npos) fail("unterminated terminal");
    std::string word(s_.substr(pos_, end - pos_));
    if (word.empty()) fail("empty terminal");
    pos_ = end + 1;
    return word;
  }

  Category category() {
    Category c;
    c.symbol = identifier("category symbol");
    if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return c;
      }
      while (true) {
        std::string name = identifier("feature name");
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '='");
        ++pos_;
        skip_space();
        FeatureValue v = value(name);
        if (!c.features.emplace(name, std::move(v)).second) fail("duplicate feature " + name);
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']'");
      }
    }
    return c;
  }

  FeatureValue value(const std::string& feature) {
    if (pos_ >= s_.size()) fail("expected feature value");
    bool sem = feature == kSem;
    if (s_[pos_] == '<') {
      if (!sem) fail("lambda value outside SEM");
      size_t start = ++pos_;
      // The closing '>' is the first one that is not the head of an arrow.
      size_t end = start;
      while (end < s_.size() && !(s_[end] == '>' && (end == start || s_[end - 1] != '-'))) ++end;
      if (end >= s_.size()) fail("unterminated SEM value");
      std::string_view body = s_.substr(start, end - start);
      pos_ = end + 1;
      try {
        return FeatureValue::semantics(lambda::parse_lambda(body));
      } catch (const lambda::LambdaSyntaxError& e) {
        throw GrammarError(std::string("bad SEM expression: ") + e.what(), line_);
      }
    }
    if (s_[pos_] == '?') {
      ++pos_;
      std::string v = "?" + identifier("variable name");
      return sem ? FeatureValue::semantics(lambda::LambdaTerm::var(v)) : FeatureValue::var(v);
    }
    if (sem) fail("SEM value must be <...> or a variable");
    return FeatureValue::atom(identifier("feature value"));
  }

  std::string_view s_;
  int line_;
  size_t pos_ = 0;
};

// Strips a trailing comment, ignoring `%` inside quotes and SEM brackets.
std::string_view strip_comment(std::string_view line) {
  char quote = 0;
  bool in_sem = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (in_sem) {
      if (c == '>' && line[i - 1] != '-') in_sem = false;
    } else if (c == '\'' || c == '"') {
      quote = c;
    } else if (c == '<') {
      in_sem = true;
    } else if (c == '%') {
      return line.substr(0, i);
    }
  }
  return line;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

void check_references(const Grammar& g) {
  for (const auto& r : g.rules())
    for (const auto& s : r.rhs)
      if (!s.terminal && !g.is_nonterminal(s.category.symbol) && !g.open_categories().count(s.category.symbol))
        throw GrammarError("undefined symbol '" + s.category.symbol + "' in rule " + print_rule(r), 0);
}

// Unary cycles would make the set of parse trees infinite.
void check_unary_cycles(const Grammar& g) {
  std::map<std::string, std::set<std::string>> unary;
  for (const auto& r : g.rules())
    if (r.rhs.size() == 1 && !r.rhs[0].terminal) unary[r.lhs.symbol].insert(r.rhs[0].category.symbol);
  std::map<std::string, int> state;  // 1 = on stack, 2 = done
  std::function<void(const std::string&)> visit = [&](const std::string& s) {
    state[s] = 1;
    for (const auto& t : unary[s]) {
      if (state[t] == 1) throw GrammarError("unary rule cycle through '" + t + "'", 0);
      if (state[t] == 0) visit(t);
    }
    state[s] = 2;
  };
  for (const auto& [s, _] : unary)
    if (state[s] == 0) visit(s);
}

}  // namespace

Grammar parse_grammar_file(std::string_view text) {
  Grammar g;
  bool first_rule = true;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '%') {
      std::vector<std::string> w = words(line.substr(first + 1));
      if (w.empty()) continue;
      if (w[0] == "start") {
        if (w.size() != 2) throw GrammarError("expected '% start SYMBOL'", line_no);
        g.set_start(w[1]);
      } else if (w[0] == "pos") {
        if (w.size() != 3 || w[2].size() != 1 || std::string("nvar").find(w[2][0]) == std::string::npos)
          throw GrammarError("expected '% pos CATEGORY n|v|a|r'", line_no);
        g.set_pos(w[1], w[2][0]);
      } else if (w[0] == "open") {
        if (w.size() < 2) throw GrammarError("expected '% open CATEGORY...'", line_no);
        for (size_t i = 1; i < w.size(); ++i) g.add_open_category(w[i]);
      }
      continue;
    }
    std::string_view body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    LineParser(body, line_no).parse_rule(g, first_rule);
  }
  if (g.start().empty()) throw GrammarError("no start symbol: grammar has no rules", 0);
  if (!g.is_nonterminal(g.start())) throw GrammarError("start symbol '" + g.start() + "' has no rules", 0);
  check_references(g);
  check_unary_cycles(g);
  return g;
}

Grammar load_grammar(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GrammarError("cannot read grammar file " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_grammar_file(buf.str());
}

// ---------------------------------------------------------------- writing

std::string print_category(const Category& c) { return c.symbol + print_features(c.features); }

std::string print_rule(const ProductionRule& r) {
  std::string out = print_category(r.lhs) + " ->";
  for (const auto& s : r.rhs) {
    out += ' ';
    if (s.terminal) {
      char q = s.word.find('\'') == std::string::npos ? '\'' : '"';
      out += q + s.word + q;
    } else {
      out += print_category(s.category);
    }
  }
  return out;
}

std::string print_grammar(const Grammar& g) {
  std::string out = "% start " + g.start() + "\n";
  for (const auto& [cat, pos] : g.pos_table()) out += "% pos " + cat + " " + pos + "\n";
  for (const auto& c : g.open_categories()) out += "% open " + c + "\n";
  for (const auto& r : g.rules()) out += print_rule(r) + "\n";
  return out;
}

}  // namespace puzzle::grammar
